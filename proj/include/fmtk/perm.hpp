#pragma once

#include <string>
#include <vector>

#include "fmtk/structure.hpp"

namespace fmtk {

/// Bijection on 0..n-1.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }
  bool is_identity() const;
  bool is_valid() const;

  /// (f.compose(g))(x) = f(g(x))
  Permutation compose(const Permutation& g) const;
  Permutation inverse() const;
  Tuple apply(const Tuple& t) const;

  /// Cycle notation, fixed points omitted; "id" for the identity.
  std::string cycle_notation() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }
};

}  // namespace fmtk
