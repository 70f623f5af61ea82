#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fmtk {

/// Partition of the domain 0..n-1 into disjoint nonempty blocks.
/// Canonical form: each block ascending, blocks ordered by least member.
struct Partition {
  int domain_size = 0;
  std::vector<std::vector<int>> blocks;

  void normalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  /// blocks must cover 0..n-1 exactly once; throws otherwise.
  std::vector<int> block_of() const {
    std::vector<int> where(domain_size, -1);
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      if (blocks[bi].empty()) throw std::invalid_argument("partition has an empty block");
      for (int e : blocks[bi]) {
        if (e < 0 || e >= domain_size)
          throw std::invalid_argument("partition element out of range");
        if (where[e] != -1) throw std::invalid_argument("partition blocks overlap");
        where[e] = static_cast<int>(bi);
      }
    }
    for (int e = 0; e < domain_size; ++e)
      if (where[e] == -1) throw std::invalid_argument("partition does not cover the domain");
    return where;
  }

  bool is_discrete() const {
    for (const auto& b : blocks)
      if (b.size() != 1) return false;
    return true;
  }

  bool operator==(const Partition&) const = default;
};

/// All-singletons partition of 0..n-1.
inline Partition discrete_partition(int n) {
  Partition p;
  p.domain_size = n;
  for (int i = 0; i < n; ++i) p.blocks.push_back({i});
  return p;
}

}  // namespace fmtk
