#include "fmtk/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace fmtk {

bool is_automorphism(const Structure& s, const Permutation& p) {
  if (p.size() != s.domain_size) throw std::invalid_argument("is_automorphism: size mismatch");
  if (!p.is_valid()) throw std::invalid_argument("is_automorphism: not a bijection");
  for (size_t c = 0; c < s.constant_values.size(); ++c)
    if (p(s.constant_values[c]) != s.constant_values[c]) return false;
  // p bijective and |R| finite, so forward preservation of every tuple
  // already forces image(R) == R.
  for (size_t r = 0; r < s.interps.size(); ++r)
    for (const auto& t : s.interps[r])
      if (!s.has_tuple(static_cast<int>(r), p.apply(t))) return false;
  return true;
}

namespace {

using Colors = std::vector<int>;

struct Refiner {
  const Structure& s;
  std::vector<char> skip_rel;  // designated equality interpreted as the diagonal
  // tuples_with[v] lists (rel, tuple index) pairs touching v
  std::vector<std::vector<std::pair<int, int>>> touching;

  explicit Refiner(const Structure& str) : s(str) {
    skip_rel.assign(s.sig.relations.size(), 0);
    int eq = s.sig.equality_index();
    if (eq >= 0 && s.relation_view(eq) == diagonal(s.domain_size)) skip_rel[eq] = 1;
    touching.resize(s.domain_size);
    for (size_t r = 0; r < s.interps.size(); ++r) {
      if (skip_rel[r]) continue;
      for (size_t ti = 0; ti < s.interps[r].size(); ++ti)
        for (int v : s.interps[r][ti])
          touching[v].emplace_back(static_cast<int>(r), static_cast<int>(ti));
    }
    for (auto& tv : touching) {
      std::sort(tv.begin(), tv.end());
      tv.erase(std::unique(tv.begin(), tv.end()), tv.end());
    }
  }

  Colors initial_colors() const {
    int n = s.domain_size;
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      for (int cv : s.constant_values) keys[v].push_back(cv == v ? 1 : 0);
      for (size_t r = 0; r < s.interps.size(); ++r) {
        if (skip_rel[r]) continue;
        int k = s.sig.relations[r].arity;
        for (int pos = 0; pos < k; ++pos) {
          int deg = 0;
          for (const auto& t : s.interps[r])
            if (t[pos] == v) ++deg;
          keys[v].push_back(deg);
        }
      }
    }
    return canonicalize(keys);
  }

  // Assigns dense color ids by sorted key order; equal keys share an id.
  template <typename Key>
  static Colors canonicalize(const std::vector<Key>& keys) {
    int n = static_cast<int>(keys.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    Colors colors(n, 0);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
      colors[order[i]] = next;
    }
    return colors;
  }

  // One signature pass; returns true when the partition strictly refined.
  bool refine_once(Colors& colors) const {
    int n = s.domain_size;
    using Item = std::vector<int>;  // rel, pos, component colors...
    std::vector<std::pair<std::pair<int, std::vector<Item>>, int>> keyed(n);
    for (int v = 0; v < n; ++v) {
      std::vector<Item> items;
      for (auto [r, ti] : touching[v]) {
        const Tuple& t = s.interps[r][ti];
        for (size_t pos = 0; pos < t.size(); ++pos) {
          if (t[pos] != v) continue;
          Item item;
          item.push_back(r);
          item.push_back(static_cast<int>(pos));
          for (int comp : t) item.push_back(colors[comp]);
          items.push_back(std::move(item));
        }
      }
      std::sort(items.begin(), items.end());
      keyed[v] = {{colors[v], std::move(items)}, v};
    }
    std::vector<std::pair<int, std::vector<Item>>> keys(n);
    for (int v = 0; v < n; ++v) keys[v] = keyed[v].first;
    Colors refined = canonicalize(keys);
    bool changed = refined != colors;
    colors = std::move(refined);
    return changed;
  }

  void refine(Colors& colors) const {
    int classes = count_classes(colors);
    while (classes < s.domain_size && refine_once(colors)) {
      int now = count_classes(colors);
      if (now == classes) break;
      classes = now;
    }
  }

  static int count_classes(const Colors& colors) {
    Colors c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  static int max_color(const Colors& colors) {
    int m = -1;
    for (int c : colors) m = std::max(m, c);
    return m;
  }

  static std::vector<int> class_sizes(const Colors& colors) {
    std::vector<int> sizes(max_color(colors) + 1, 0);
    for (int c : colors) ++sizes[c];
    return sizes;
  }
};

void individualize(Colors& colors, int element, int tag) { colors[element] = tag; }

// Branch cell: smallest non-singleton class, lowest color id on ties.
// Returns -1 when the coloring is discrete.
int pick_branch_color(const Colors& colors) {
  auto sizes = Refiner::class_sizes(colors);
  int best = -1;
  for (size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] < 2) continue;
    if (best == -1 || sizes[c] < sizes[best]) best = static_cast<int>(c);
  }
  return best;
}

std::vector<int> cell_members(const Colors& colors, int color) {
  std::vector<int> out;
  for (size_t v = 0; v < colors.size(); ++v)
    if (colors[v] == color) out.push_back(static_cast<int>(v));
  return out;
}

struct Search {
  const Structure& s;
  const Refiner& refiner;
  Colors base;
  int tag_counter;

  Search(const Structure& str, const Refiner& ref, Colors base_colors)
      : s(str), refiner(ref), base(std::move(base_colors)),
        tag_counter(str.domain_size) {}

  // One automorphism compatible with the prescribed pairs, or nullopt.
  std::optional<Permutation> with_pairs(const std::vector<std::pair<int, int>>& pairs) {
    Colors src = base, tgt = base;
    int tag = tag_counter;
    for (const auto& [u, w] : pairs) {
      individualize(src, u, tag);
      individualize(tgt, w, tag);
      ++tag;
    }
    refiner.refine(src);
    refiner.refine(tgt);
    return descend(src, tgt, tag);
  }

  std::optional<Permutation> descend(const Colors& src, const Colors& tgt, int tag) {
    if (Refiner::class_sizes(src) != Refiner::class_sizes(tgt)) return std::nullopt;
    int branch = pick_branch_color(src);
    if (branch == -1) {
      int n = s.domain_size;
      Permutation p;
      p.images.assign(n, -1);
      std::vector<int> where(Refiner::max_color(tgt) + 1, -1);
      for (int v = 0; v < n; ++v) where[tgt[v]] = v;
      for (int v = 0; v < n; ++v) p.images[v] = where[src[v]];
      if (!p.is_valid() || !is_automorphism(s, p)) return std::nullopt;
      return p;
    }
    std::vector<int> src_cell = cell_members(src, branch);
    std::vector<int> tgt_cell = cell_members(tgt, branch);
    int u = src_cell.front();
    for (int w : tgt_cell) {
      Colors src2 = src, tgt2 = tgt;
      individualize(src2, u, tag);
      individualize(tgt2, w, tag);
      refiner.refine(src2);
      refiner.refine(tgt2);
      if (auto p = descend(src2, tgt2, tag + 1)) return p;
    }
    return std::nullopt;
  }
};

}  // namespace

Group automorphism_group(const Structure& s) {
  int n = s.domain_size;
  Group g;
  g.degree = n;
  g.orbit_partition.domain_size = n;
  if (n == 0) return g;

  Refiner refiner(s);
  Colors colors = refiner.initial_colors();
  refiner.refine(colors);

  // Base from the leftmost refinement path.
  std::vector<int> base_points;
  std::vector<Colors> level_colors;  // coloring before individualizing base_points[i]
  Colors cur = colors;
  int tag = n;
  while (true) {
    int branch = pick_branch_color(cur);
    if (branch == -1) break;
    level_colors.push_back(cur);
    int b = cell_members(cur, branch).front();
    base_points.push_back(b);
    individualize(cur, b, tag++);
    refiner.refine(cur);
  }

  Search search(s, refiner, colors);
  g.order = 1;
  std::vector<std::pair<int, int>> prefix;  // (b_j -> b_j) for j < i
  for (size_t i = 0; i < base_points.size(); ++i) {
    int b = base_points[i];
    std::vector<int> cell = cell_members(level_colors[i], level_colors[i][b]);
    std::vector<Permutation> level_gens;
    std::vector<char> in_orbit(n, 0);
    in_orbit[b] = 1;
    unsigned long long orbit_size = 1;
    for (int w : cell) {
      if (w == b || in_orbit[w]) continue;
      auto pairs = prefix;
      pairs.emplace_back(b, w);
      if (auto p = search.with_pairs(pairs)) {
        level_gens.push_back(*p);
        g.generators.push_back(*p);
        // close the level orbit under the generators found so far
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
          if (in_orbit[v]) queue.push_back(v);
        while (!queue.empty()) {
          int v = queue.back();
          queue.pop_back();
          for (const auto& gen : level_gens) {
            for (int img : {gen(v), gen.inverse()(v)}) {
              if (!in_orbit[img]) {
                in_orbit[img] = 1;
                queue.push_back(img);
              }
            }
          }
        }
        orbit_size = 0;
        for (int v = 0; v < n; ++v) orbit_size += in_orbit[v];
      }
    }
    g.order *= orbit_size;
    prefix.emplace_back(b, b);
  }

  // Orbit partition: closure of the domain under all generators.
  std::vector<int> root(n);
  for (int v = 0; v < n; ++v) root[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& gen : g.generators)
    for (int v = 0; v < n; ++v) {
      int a = find(v), b2 = find(gen(v));
      if (a != b2) root[std::max(a, b2)] = std::min(a, b2);
    }
  std::map<int, std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) blocks[find(v)].push_back(v);
  for (auto& [r, members] : blocks) g.orbit_partition.blocks.push_back(members);
  g.orbit_partition.normalize();
  return g;
}

Partition orbits(const Structure& s) { return automorphism_group(s).orbit_partition; }

bool is_rigid(const Structure& s) { return automorphism_group(s).order == 1; }

std::optional<Permutation> automorphism_mapping(const Structure& s, const Group& g, int a, int b) {
  int n = s.domain_size;
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("element out of range");
  if (a == b) return Permutation::identity(n);
  std::vector<Permutation> reach(n);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{a};
  seen[a] = 1;
  reach[a] = Permutation::identity(n);
  size_t head = 0;
  while (head < queue.size()) {
    int v = queue[head++];
    for (const auto& gen : g.generators) {
      for (const auto& step : {gen, gen.inverse()}) {
        int img = step(v);
        if (seen[img]) continue;
        seen[img] = 1;
        reach[img] = step.compose(reach[v]);
        queue.push_back(img);
      }
    }
  }
  if (!seen[b]) return std::nullopt;
  return reach[b];
}

RigidifyResult rigidify(const Structure& s, RigidifyStrategy strategy) {
  RigidifyResult result;
  if (strategy == RigidifyStrategy::full) {
    result.structure = singleton_extension(s);
    for (size_t r = s.sig.relations.size(); r < result.structure.sig.relations.size(); ++r) {
      int element = result.structure.interps[r][0][0];
      result.added.emplace_back(result.structure.sig.relations[r].name, element);
    }
    return result;
  }
  result.structure = s;
  while (true) {
    Group g = automorphism_group(result.structure);
    if (g.order == 1) break;
    int best_size = 0;
    for (const auto& blk : g.orbit_partition.blocks)
      if (blk.size() >= 2) best_size = std::max(best_size, static_cast<int>(blk.size()));
    int element = -1;
    for (const auto& blk : g.orbit_partition.blocks) {
      if (static_cast<int>(blk.size()) != best_size) continue;
      if (element == -1 || blk.front() < element) element = blk.front();
    }
    std::string name;
    result.structure = add_singleton_predicate(result.structure, element, &name);
    result.added.emplace_back(name, element);
  }
  return result;
}

}  // namespace fmtk
