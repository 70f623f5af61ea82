#pragma once

#include <vector>

#include "fmtk/structure.hpp"

namespace fmtk {

struct EfMove {
  bool spoiler_in_a = true;
  int spoiler_element = -1;
  int duplicator_reply = -1;  // -1 when no reply exists
};

struct EfResult {
  int rounds = 0;
  bool equivalent = false;
  /// When separated: one winning Spoiler line (each entry pairs the chosen
  /// Spoiler move with a sample Duplicator reply that still loses).
  std::vector<EfMove> spoiler_line;
};

/// Exact solve of the r-round Ehrenfeucht-Fraisse game by memoized search
/// over partial matches (keyed on the pair set, which absorbs move-order
/// symmetry). Constants seed the initial position. Duplicator wins r rounds
/// iff the structures agree on all sentences of quantifier rank <= r; with a
/// designated equality symbol the diagonal interpretations enforce partial
/// injectivity, without one the game is the equality-free variant.
/// Requires matching signatures and standard equality on both sides.
EfResult ef_game(const Structure& a, const Structure& b, int rounds);

}  // namespace fmtk
