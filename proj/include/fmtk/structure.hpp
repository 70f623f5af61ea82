#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fmtk/signature.hpp"

namespace fmtk {

using Tuple = std::vector<int>;

/// A binary relation over 0..n-1, kept sorted and duplicate-free.
struct BinaryRelationView {
  int domain_size = 0;
  std::vector<std::pair<int, int>> pairs;

  void normalize();
  bool contains(int a, int b) const;

  bool operator==(const BinaryRelationView&) const = default;
};

/// The diagonal relation {(x,x) : 0 <= x < n}: true identity on the domain.
BinaryRelationView diagonal(int n);

struct ValidationIssue {
  std::string symbol;   // offending symbol, empty for structure-level issues
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Finite structure: a domain 0..n-1 with an interpretation for every
/// signature symbol. Elements are dense indices; display names are
/// presentation-only metadata. Immutable by convention after normalize().
struct Structure {
  Signature sig;
  int domain_size = 0;
  std::vector<std::vector<Tuple>> interps;  // parallel to sig.relations
  std::vector<int> constant_values;         // parallel to sig.constants
  std::vector<std::string> element_names;   // empty, or one name per element
  std::string name = "S";

  /// Sorts and dedupes every interpretation. Call after direct field setup.
  void normalize();

  const std::vector<Tuple>& tuples(int rel) const { return interps[rel]; }
  bool has_tuple(int rel, const Tuple& t) const;

  /// View of a binary relation's interpretation.
  BinaryRelationView relation_view(int rel) const;

  std::string element_name(int e) const;

  bool operator==(const Structure&) const = default;
};

/// Every invariant violation, with symbol name and offending tuple where it
/// applies; an empty report means the structure is valid. If an equality
/// symbol is designated its interpretation must be a congruence.
ValidationReport validate(const Structure& s);

/// True when the designated equality (if any) is interpreted as the diagonal.
bool is_standard(const Structure& s);

/// Adds, for each element a, a fresh unary predicate interpreted as {a}.
/// Names follow the scheme I<element>, suffixing with '_' until free, so the
/// output is reproducible. The result is rigid.
Structure singleton_extension(const Structure& s);

/// Fresh-name rule shared by singleton_extension and greedy rigidify.
std::string singleton_predicate_name(const Signature& sig, int element,
                                     const std::vector<std::string>& also_taken);

/// Adds one unary predicate {element} under the fresh-name rule.
Structure add_singleton_predicate(const Structure& s, int element,
                                  std::string* chosen_name = nullptr);

/// True iff the relation's tuple set is closed under every permutation of
/// argument positions. Throws on an unknown symbol.
bool is_fully_symmetric(const Structure& s, std::string_view rel_name);

}  // namespace fmtk
