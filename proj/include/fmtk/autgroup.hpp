#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmtk/partition.hpp"
#include "fmtk/perm.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

/// Automorphism group of a structure: generating set, exact order, and the
/// orbit partition of the domain. The identity is always a member even when
/// the generator list is empty.
struct Group {
  int degree = 0;
  std::vector<Permutation> generators;
  unsigned long long order = 1;
  Partition orbit_partition;
};

/// p is an automorphism iff every relation's tuple set is preserved
/// (t in R iff p(t) in R) and every constant is fixed.
bool is_automorphism(const Structure& s, const Permutation& p);

/// Exact automorphism group by backtracking over a refinement tree:
/// initial coloring from constants and per-relation/position degree
/// vectors, iterated signature refinement, branching on the smallest
/// non-singleton cell (lowest index first). Order comes from
/// orbit-stabilizer recursion along the base, so it is exact even when the
/// group is large. Deterministic: generator list and orbits are stable
/// across runs.
Group automorphism_group(const Structure& s);

/// Orbit partition of Aut(s) on the domain; elements in one orbit are
/// structurally indiscernible.
Partition orbits(const Structure& s);

bool is_rigid(const Structure& s);

/// An automorphism with f(a) = b, when a and b share an orbit.
std::optional<Permutation> automorphism_mapping(const Structure& s, const Group& g, int a, int b);

enum class RigidifyStrategy { full, greedy };

struct RigidifyResult {
  Structure structure;
  std::vector<std::pair<std::string, int>> added;  // (predicate name, element)
};

/// Extends s to a rigid structure with singleton predicates. `full` adds one
/// per element; `greedy` repeatedly fixes the lowest-index element of a
/// largest non-trivial orbit until the group is trivial.
RigidifyResult rigidify(const Structure& s, RigidifyStrategy strategy);

}  // namespace fmtk
