#include "fmtk/perm.hpp"

#include <stdexcept>

namespace fmtk {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<char> hit(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= size() || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& g) const {
  if (size() != g.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation out;
  out.images.resize(size());
  for (int i = 0; i < size(); ++i) out.images[i] = images[g.images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(size());
  for (int i = 0; i < size(); ++i) out.images[images[i]] = i;
  return out;
}

Tuple Permutation::apply(const Tuple& t) const {
  Tuple out(t.size());
  for (size_t i = 0; i < t.size(); ++i) out[i] = images[t[i]];
  return out;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<char> done(images.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (done[i] || images[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = images[j];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

}  // namespace fmtk
