#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fmtk/eval.hpp"
#include "fmtk/formula.hpp"
#include "fmtk/signature.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

/// Finite stand-in for a denumerable formula schema.
struct EnumerationBudget {
  int max_quantifier_rank = 2;
  int max_node_count = 9;
  long max_formulas = 50000;  // bound on candidate formulas examined
};

struct EnumerateOptions {
  /// Admit equality atoms when the signature designates an equality symbol.
  bool include_equality = true;
  /// Positive atoms only: no connectives, no quantifiers.
  bool atomic_only = false;
};

struct EnumerationResult {
  std::vector<Formula> formulas;
  bool truncated = false;
};

/// One enumerated representative together with its truth tables on the
/// context structures (over free_vars.size() + max_quantifier_rank variable
/// slots; bound coordinates are uniform, so sampling them at 0 is sound).
struct SemanticItem {
  Formula formula;
  int size = 0;
  std::vector<TruthTable> tables;  // parallel to contexts; empty in syntactic mode
};

enum class VisitControl { proceed, stop };

/// Core enumeration: formulas over sig with the given free variables, in
/// deterministic order (node count, then canonical serialization).
///
/// With context structures, formulas are deduplicated on their concatenated
/// truth tables and only the first representative of each semantic class is
/// visited; composition proceeds over representatives, which keeps the
/// search space proportional to the number of semantically distinct
/// formulas. Without contexts the enumeration is purely syntactic.
///
/// Returns true when max_formulas stopped the enumeration early.
bool for_each_enumerated_formula(const Signature& sig,
                                 const std::vector<std::string>& free_vars,
                                 const EnumerationBudget& budget,
                                 const std::vector<const Structure*>& contexts,
                                 const EnumerateOptions& opts,
                                 const std::function<VisitControl(const SemanticItem&)>& visit);

/// List form. When dedup_on is given, formulas semantically equivalent on
/// that structure (identical truth tables over all assignments to free_vars)
/// collapse to their first representative.
EnumerationResult enumerate_formulas(const Signature& sig,
                                     const std::vector<std::string>& free_vars,
                                     const EnumerationBudget& budget,
                                     const Structure* dedup_on = nullptr,
                                     const EnumerateOptions& opts = {});

/// Point index into a TruthTable for given values of the leading variables
/// (remaining coordinates at 0).
inline long table_index(int domain_size, const std::vector<int>& leading_values) {
  long idx = 0;
  long stride = 1;
  for (int v : leading_values) {
    idx += v * stride;
    stride *= domain_size;
  }
  return idx;
}

}  // namespace fmtk
