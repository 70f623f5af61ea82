#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fmtk/signature.hpp"

namespace fmtk {

/// A term is a variable (by id) or a constant symbol (by signature index).
struct Term {
  enum class Kind { variable, constant };
  Kind kind = Kind::variable;
  int index = 0;

  static Term var(int id) { return {Kind::variable, id}; }
  static Term constant(int idx) { return {Kind::constant, idx}; }
  bool operator==(const Term&) const = default;
};

/// First-order formula over a signature, in alpha-canonical form.
///
/// Variables are integer ids: ids 0..m-1 are the free variables (with
/// display names in free_names), and a quantifier nested under d enclosing
/// quantifiers binds id m+d. Equality is an atom on the signature's
/// designated equality relation; it prints as `t1 = t2`.
class Formula {
 public:
  enum class Kind { atom, neg, conj, disj, impl, iff, forall, exists };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind = Kind::atom;
    int rel = -1;             // atom: relation index into the signature
    std::vector<Term> args;   // atom
    int var = -1;             // forall/exists: bound variable id
    NodePtr a, b;             // children (b unused for neg/quantifiers)
  };

  Formula() = default;
  Formula(NodePtr root, std::vector<std::string> free_names)
      : root_(std::move(root)), free_names_(std::move(free_names)) {}

  bool valid() const { return root_ != nullptr; }
  const NodePtr& root() const { return root_; }
  const std::vector<std::string>& free_names() const { return free_names_; }
  int free_count() const { return static_cast<int>(free_names_.size()); }

  static Formula atom(std::vector<std::string> free_names, int rel, std::vector<Term> args);
  static Formula negation(const Formula& f);
  static Formula binary(Kind k, const Formula& a, const Formula& b);
  static Formula quantifier(Kind k, int var_id, const Formula& body);

  bool operator==(const Formula& other) const;

 private:
  NodePtr root_;
  std::vector<std::string> free_names_;
};

int node_count(const Formula& f);
int quantifier_rank(const Formula& f);

/// Fully parenthesized form with canonical variable names v0, v1, ...
/// Stable across runs and platforms; used in golden files and reports.
std::string to_canonical_string(const Signature& sig, const Formula& f);

/// Like the canonical form but with the free variables' display names.
std::string to_display_string(const Signature& sig, const Formula& f);

}  // namespace fmtk
