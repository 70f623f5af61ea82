#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmtk/autgroup.hpp"
#include "fmtk/enumerate.hpp"
#include "fmtk/formula.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

enum class Verdict {
  absolutely_discernible,
  relatively_discernible_only,
  weakly_discernible_only,
  not_discerned_within_budget,
  structurally_indiscernible,
};

std::string verdict_name(Verdict v);

/// Discernibility searches are budget-relative; these options select the
/// formula space. Equality atoms are excluded by default, since discerning by
/// `x = y` itself would trivialize the question.
struct SearchOptions {
  bool allow_equality = false;
  bool atomic_only = false;
};

struct AbsoluteSearch {
  std::optional<Formula> witness;  // phi(x) with phi[a] true, phi[b] false
  /// An automorphism mapping a to b, a budget-independent negative: no
  /// formula can separate automorphic elements.
  std::optional<Permutation> orbit_certificate;
  bool truncated = false;
};

struct BinarySearchResult {
  std::optional<Formula> witness;
  bool truncated = false;
  /// For weak witnesses: irreflexive over the whole domain, not just at (a,a).
  bool fully_irreflexive = false;
};

/// One-free-variable separation: first phi in enumeration order with
/// s |= phi[a] and s |/= phi[b]. Returns the orbit certificate instead of
/// searching when a and b are automorphic. Throws when a == b.
AbsoluteSearch find_absolute_discerner(const Structure& s, int a, int b,
                                       const EnumerationBudget& budget,
                                       const SearchOptions& opts = {},
                                       const Group* group = nullptr);

/// Two-free-variable asymmetry: s |= phi[a,b] xor s |= phi[b,a].
BinarySearchResult find_relative_discerner(const Structure& s, int a, int b,
                                           const EnumerationBudget& budget,
                                           const SearchOptions& opts = {});

/// Symmetric separation: s |= phi[a,b], s |/= phi[a,a], and phi symmetric
/// over the whole domain.
BinarySearchResult find_weak_discerner(const Structure& s, int a, int b,
                                       const EnumerationBudget& budget,
                                       const SearchOptions& opts = {});

struct PairClassification {
  int a = 0, b = 0;  // a < b
  Verdict verdict = Verdict::not_discerned_within_budget;
  std::optional<Formula> witness;
  EnumerationBudget budget_used;
  std::optional<Permutation> orbit_certificate;  // present iff structurally indiscernible
  bool weak_fully_irreflexive = false;
};

/// Classifies every unordered pair: absolute, else relative, else weak;
/// pairs with no witness are structurally indiscernible when an
/// automorphism maps one to the other, undecided-within-budget otherwise.
std::vector<PairClassification> classify_all(const Structure& s, const EnumerationBudget& budget,
                                             const SearchOptions& opts = {});

/// Leibniz identity over the full powerset, decided via the singleton
/// shortcut: the subset {a} separates a from any b != a. The cap guards the
/// conceptual 2^n sweep.
bool leibniz_full(const Structure& s, int a, int b, int cap = 20);

/// Literal powerset sweep (n <= 12): oracle for leibniz_full.
bool leibniz_full_literal(const Structure& s, int a, int b);

/// Leibniz equivalence restricted to a listed family of unary predicates,
/// Henkin style: true iff a and b belong to exactly the same listed sets.
bool henkin_leibniz(const Structure& s, const std::vector<std::string>& family, int a, int b);

struct ChainItem {
  enum class Status { checked_holds, checked_fails, definitional };
  std::string label;
  Status status = Status::definitional;
  std::string note;
};

/// The implication chain between the identity principles, instantiated on a
/// concrete structure. Checked items carry proof-by-exhaustion over the
/// budget or a counterexample; definition-level items are recorded as such.
struct ChainReport {
  std::vector<ChainItem> items;
  std::vector<PairClassification> classifications;
  EnumerationBudget budget_used;

  long absolute_pairs = 0;
  long constructed_witnesses_validated = 0;
  bool constructions_all_valid = true;  // phi(x) & !phi(y), then its symmetrization
  std::optional<std::pair<int, int>> construction_counterexample;

  bool rigid_extension_all_absolute = true;  // every pair atomically discerned after full rigidify
  std::optional<std::pair<int, int>> rigid_extension_counterexample;

  bool pass = true;
};

/// Builds the relative witness phi(x) & !phi(y) and the weak witness
/// (phi(x) & !phi(y)) | (phi(y) & !phi(x)) from an absolute witness phi.
Formula relative_from_absolute(const Formula& phi);
Formula weak_from_absolute(const Formula& phi);

ChainReport verify_hierarchy(const Structure& s, const EnumerationBudget& budget,
                             const SearchOptions& opts = {});

}  // namespace fmtk
