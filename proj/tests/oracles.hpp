#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// search machinery: groups by sweeping all n! permutations, isomorphism by
// sweeping all bijections, and bounded elementary equivalence by a
// definable-set lattice. They exist to check the fast paths, so keep them
// dumb.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fmtk/autgroup.hpp"
#include "fmtk/partition.hpp"
#include "fmtk/perm.hpp"
#include "fmtk/structure.hpp"

namespace oracles {

using fmtk::Partition;
using fmtk::Permutation;
using fmtk::Structure;
using fmtk::Tuple;

struct BruteGroup {
  unsigned long long order = 1;
  std::vector<Permutation> elements;
  Partition orbit_partition;
};

inline BruteGroup brute_force_group(const Structure& s) {
  int n = s.domain_size;
  BruteGroup out;
  out.orbit_partition.domain_size = n;
  Permutation p = Permutation::identity(n);
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  do {
    if (fmtk::is_automorphism(s, p)) {
      out.elements.push_back(p);
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(p(v));
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  out.order = out.elements.empty() ? 1 : out.elements.size();
  std::map<int, std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) blocks[find(v)].push_back(v);
  for (auto& [r, members] : blocks) out.orbit_partition.blocks.push_back(members);
  out.orbit_partition.normalize();
  return out;
}

/// Brute-force isomorphism over all bijections; same signature assumed.
inline bool isomorphic_brute(const Structure& a, const Structure& b) {
  if (a.domain_size != b.domain_size) return false;
  int n = a.domain_size;
  Permutation p = Permutation::identity(n);
  do {
    bool ok = true;
    for (size_t c = 0; c < a.constant_values.size() && ok; ++c)
      ok = p(a.constant_values[c]) == b.constant_values[c];
    for (size_t r = 0; r < a.interps.size() && ok; ++r) {
      std::vector<Tuple> image;
      image.reserve(a.interps[r].size());
      for (const auto& t : a.interps[r]) image.push_back(p.apply(t));
      std::sort(image.begin(), image.end());
      ok = image == b.interps[r];
    }
    if (ok) return true;
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return n == 0;  // the empty bijection
}

/// Exact agreement on all sentences of quantifier rank <= 2 over a signature
/// with one binary relation and nothing else, via definable-set lattices.
///
/// Rank-2 sentences are boolean combinations of Q v0 . psi(v0) with psi of
/// rank <= 1. Every quantifier-free formula in (v0, v1) is a union of the 16
/// atom-pattern classes, and the existential quantifier distributes over
/// unions, so the rank-<=1 definable subsets of each structure form the
/// boolean algebra generated by { exists v1 . class_c } for the 16 classes
/// plus the loop atom R(v0,v0). Tracking the two structures jointly keeps
/// the same syntactic definition aligned on both sides; the structures agree
/// on all rank-<=2 sentences iff no jointly-definable set has a nonempty
/// part in exactly one of them.
inline bool rank2_equivalent_one_binary(const Structure& A, const Structure& B) {
  const int ra = 0;  // the single binary relation
  auto pattern = [&](const Structure& s, int x0, int x1) {
    int pat = 0;
    if (s.has_tuple(ra, {x0, x0})) pat |= 1;
    if (s.has_tuple(ra, {x0, x1})) pat |= 2;
    if (s.has_tuple(ra, {x1, x0})) pat |= 4;
    if (s.has_tuple(ra, {x1, x1})) pat |= 8;
    return pat;
  };
  int na = A.domain_size, nb = B.domain_size;
  int points = na + nb;  // v0 ranges over A then B
  using Mask = uint64_t;
  auto structure_of = [&](int pt) -> const Structure& { return pt < na ? A : B; };
  auto element_of = [&](int pt) { return pt < na ? pt : pt - na; };

  std::vector<Mask> gens;
  for (int c = 0; c < 16; ++c) {
    Mask m = 0;
    for (int pt = 0; pt < points; ++pt) {
      const Structure& s = structure_of(pt);
      int x0 = element_of(pt);
      for (int x1 = 0; x1 < s.domain_size; ++x1)
        if (pattern(s, x0, x1) == c) {
          m |= Mask{1} << pt;
          break;
        }
    }
    gens.push_back(m);
  }
  {
    Mask loop = 0;
    for (int pt = 0; pt < points; ++pt)
      if (structure_of(pt).has_tuple(ra, {element_of(pt), element_of(pt)}))
        loop |= Mask{1} << pt;
    gens.push_back(loop);
  }

  Mask full = points == 64 ? ~Mask{0} : ((Mask{1} << points) - 1);
  std::set<Mask> algebra(gens.begin(), gens.end());
  algebra.insert(0);
  algebra.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> current(algebra.begin(), algebra.end());
    for (Mask m : current)
      if (algebra.insert(~m & full).second) grew = true;
    current.assign(algebra.begin(), algebra.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j)
        if (algebra.insert(current[i] & current[j]).second) grew = true;
  }

  Mask a_side = na == 0 ? 0 : ((Mask{1} << na) - 1);
  for (Mask d : algebra) {
    bool in_a = (d & a_side) != 0;
    bool in_b = (d & ~a_side & full) != 0;
    if (in_a != in_b) return false;  // exists v0 . D separates
  }
  return true;
}

}  // namespace oracles
