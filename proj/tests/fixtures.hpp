#pragma once

#include <cstdint>
#include <vector>

#include "fmtk/perm.hpp"
#include "fmtk/structure.hpp"

namespace fixtures {

using fmtk::Structure;
using fmtk::Tuple;

/// Two swap-symmetric elements in an irreflexive symmetric relation: the
/// abstract face of the two-particle singlet state.
inline Structure singlet() {
  Structure s;
  s.name = "Singlet";
  s.sig.relations = {{"R", 2}};
  s.domain_size = 2;
  s.interps = {{{0, 1}, {1, 0}}};
  s.normalize();
  return s;
}

/// Addition modulo m encoded as its graph: Plus(x,y,z) iff x+y = z (mod m).
inline Structure z_add(int m, const char* name) {
  Structure s;
  s.name = name;
  s.sig.relations = {{"Plus", 3}};
  s.domain_size = m;
  s.interps.resize(1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) s.interps[0].push_back({x, y, (x + y) % m});
  s.normalize();
  return s;
}

inline Structure z5add() { return z_add(5, "Z5add"); }
inline Structure z6add() { return z_add(6, "Z6add"); }

/// Two elements, all four pairs related: the total relation satisfies the
/// identity axioms without being identity.
inline Structure k2loop() {
  Structure s;
  s.name = "K2loop";
  s.sig.relations = {{"R", 2}};
  s.domain_size = 2;
  s.interps = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  s.normalize();
  return s;
}

/// Henkin-style counterexample: elements 0 and 1 share every listed
/// predicate yet are distinct.
inline Structure henkin4() {
  Structure s;
  s.name = "Henkin4";
  s.sig.relations = {{"P1", 1}, {"P2", 1}, {"P3", 1}};
  s.domain_size = 4;
  s.interps = {{{0}, {1}}, {{0}, {1}, {2}}, {{0}, {1}, {3}}};
  s.normalize();
  return s;
}

/// Path on three vertices, symmetric edges.
inline Structure p3path() {
  Structure s;
  s.name = "P3";
  s.sig.relations = {{"E", 2}};
  s.domain_size = 3;
  s.interps = {{{0, 1}, {1, 0}, {1, 2}, {2, 1}}};
  s.normalize();
  return s;
}

/// The path with a designated diagonal equality symbol, for searches that
/// admit equality atoms.
inline Structure p3path_eq() {
  Structure s = p3path();
  s.sig.relations.push_back({"Eq", 2});
  s.sig.equality_name = "Eq";
  s.interps.push_back({{0, 0}, {1, 1}, {2, 2}});
  s.normalize();
  return s;
}

inline Structure directed_edge() {
  Structure s;
  s.name = "Edge";
  s.sig.relations = {{"R", 2}};
  s.domain_size = 2;
  s.interps = {{{0, 1}}};
  s.normalize();
  return s;
}

/// Blow-up of the symmetric edge: vertices {0,2} and {1,3} form two classes,
/// E relates the classes completely. Block-saturated, so merging the classes
/// is a congruence and the quotient is the Singlet structure.
inline Structure k22blowup() {
  Structure s;
  s.name = "K22";
  s.sig.relations = {{"R", 2}};  // same symbol as singlet(), so quotients compare
  s.domain_size = 4;
  s.interps = {{{0, 1}, {0, 3}, {2, 1}, {2, 3}, {1, 0}, {3, 0}, {1, 2}, {3, 2}}};
  s.normalize();
  return s;
}

inline Structure empty_relation(int n) {
  Structure s;
  s.name = "Empty" + std::to_string(n);
  s.sig.relations = {{"R", 2}};
  s.domain_size = n;
  s.interps.resize(1);
  return s;
}

/// Relabels a structure by a permutation of its domain (same signature).
inline Structure relabel(const Structure& s, const fmtk::Permutation& p) {
  Structure out = s;
  for (size_t r = 0; r < s.interps.size(); ++r)
    for (size_t t = 0; t < s.interps[r].size(); ++t) out.interps[r][t] = p.apply(s.interps[r][t]);
  for (size_t c = 0; c < s.constant_values.size(); ++c)
    out.constant_values[c] = p(s.constant_values[c]);
  out.element_names.clear();
  out.normalize();
  return out;
}

/// splitmix64: tiny deterministic generator, identical on every platform.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int m) { return static_cast<int>(next() % static_cast<uint64_t>(m)); }
};

/// One binary relation R plus one unary relation U, density varying across
/// the corpus.
inline Structure random_structure(Rng& rng, int max_n) {
  Structure s;
  int n = 1 + rng.below(max_n);
  s.name = "Rand" + std::to_string(n);
  s.domain_size = n;
  s.sig.relations = {{"R", 2}, {"U", 1}};
  s.interps.resize(2);
  int density = 1 + rng.below(7);  // out of 8
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rng.below(8) < density) s.interps[0].push_back({x, y});
  for (int x = 0; x < n; ++x)
    if (rng.below(2) == 0) s.interps[1].push_back({x});
  s.normalize();
  return s;
}

inline std::vector<Structure> random_corpus(int count, uint64_t seed, int max_n = 7) {
  Rng rng(seed);
  std::vector<Structure> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_structure(rng, max_n));
  return out;
}

inline constexpr uint64_t kCorpusSeed = 0xf1a57a7e5ull;

}  // namespace fixtures
