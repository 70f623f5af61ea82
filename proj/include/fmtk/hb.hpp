#pragma once

#include "fmtk/formula.hpp"
#include "fmtk/signature.hpp"

namespace fmtk {

/// The Hilbert-Bernays indiscernibility formula in free variables x, y: for
/// each k-ary relation symbol and each argument position, a universally
/// quantified biconditional asserting agreement when x and y are exchanged
/// in that position. Clause order is fixed (declaration order, then
/// position); a designated equality symbol is excluded. Defines a
/// congruence, not necessarily identity. Throws when the signature has no
/// non-equality relation symbol.
Formula hb_identity(const Signature& sig);

}  // namespace fmtk
