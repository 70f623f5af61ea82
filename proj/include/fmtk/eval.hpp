#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fmtk/formula.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

/// Partial map from variable names to elements; must cover the free
/// variables of the formula under evaluation.
using Assignment = std::map<std::string, int>;

/// Tarski satisfaction; quantifiers range over 0..n-1 (vacuously true /
/// false over the empty domain). Throws on unbound free variables,
/// out-of-range values, or a formula built against a different signature.
bool evaluate(const Structure& s, const Formula& phi, const Assignment& a);

/// Fast path: values indexed by variable id (free ids first). No
/// signature cross-checks; callers guarantee the formula matches s.
bool evaluate_values(const Structure& s, const Formula& phi, std::vector<int> values);

/// Packed truth table of a formula over all assignments to variables
/// 0..num_vars-1; point index = sum over i of values[i] * n^i. Tables are
/// canonical (tail bits zero), so equality and hashing are well defined.
struct TruthTable {
  long num_points = 0;
  std::vector<uint64_t> bits;

  static TruthTable zeros(long points);
  bool get(long i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
  void set(long i, bool v) {
    if (v)
      bits[i >> 6] |= (uint64_t{1} << (i & 63));
    else
      bits[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  bool operator==(const TruthTable&) const = default;
};

long table_points(int domain_size, int num_vars);

namespace tables {

TruthTable atom(const Structure& s, int rel, const std::vector<Term>& args, int num_vars);
TruthTable negate(const TruthTable& t);
TruthTable combine(Formula::Kind op, const TruthTable& a, const TruthTable& b);
/// Reduces coordinate `var` (forall = conjunction, exists = disjunction over
/// the domain) and broadcasts the result back along that coordinate.
TruthTable quantify(const TruthTable& t, int var, int domain_size, int num_vars, bool is_forall);

}  // namespace tables

/// Full truth table of phi over num_vars variable slots (>= the ids used).
TruthTable eval_table(const Structure& s, const Formula& phi, int num_vars);

}  // namespace fmtk
