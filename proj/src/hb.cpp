#include "fmtk/hb.hpp"

#include <stdexcept>

namespace fmtk {

Formula hb_identity(const Signature& sig) {
  const std::vector<std::string> free_names = {"x", "y"};
  int eq = sig.equality_index();
  Formula conjunction;
  for (size_t r = 0; r < sig.relations.size(); ++r) {
    if (static_cast<int>(r) == eq) continue;
    int k = sig.relations[r].arity;
    for (int pos = 0; pos < k; ++pos) {
      // R(..., x at pos, ...) <-> R(..., y at pos, ...), other positions
      // filled with bound variables v2, v3, ... in order.
      std::vector<Term> left(k), right(k);
      int bound = 2;
      for (int i = 0; i < k; ++i) {
        if (i == pos) {
          left[i] = Term::var(0);
          right[i] = Term::var(1);
        } else {
          left[i] = Term::var(bound);
          right[i] = Term::var(bound);
          ++bound;
        }
      }
      Formula clause = Formula::binary(Formula::Kind::iff,
                                       Formula::atom(free_names, static_cast<int>(r), left),
                                       Formula::atom(free_names, static_cast<int>(r), right));
      for (int v = bound - 1; v >= 2; --v)
        clause = Formula::quantifier(Formula::Kind::forall, v, clause);
      conjunction = conjunction.valid()
                        ? Formula::binary(Formula::Kind::conj, conjunction, clause)
                        : clause;
    }
  }
  if (!conjunction.valid())
    throw std::invalid_argument("hb_identity: signature has no non-equality relation symbol");
  return conjunction;
}

}  // namespace fmtk
