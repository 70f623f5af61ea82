#include "fmtk/ef.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fmtk {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

struct Solver {
  const Structure& a;
  const Structure& b;
  std::map<std::pair<Pairs, int>, bool> memo;

  static Pairs normalized(Pairs p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
  }

  // Atomic agreement of the matched pairs: every relation evaluates alike on
  // corresponding tuples. A diagonal equality relation makes this enforce
  // a partial isomorphism; without one it is the equality-free condition.
  bool atomic_ok(const Pairs& pos) const {
    int m = static_cast<int>(pos.size());
    for (size_t r = 0; r < a.sig.relations.size(); ++r) {
      int k = a.sig.relations[r].arity;
      std::vector<int> odo(k, 0);
      if (m == 0) continue;
      while (true) {
        Tuple ta(k), tb(k);
        for (int i = 0; i < k; ++i) {
          ta[i] = pos[odo[i]].first;
          tb[i] = pos[odo[i]].second;
        }
        if (a.has_tuple(static_cast<int>(r), ta) != b.has_tuple(static_cast<int>(r), tb))
          return false;
        int i = 0;
        for (; i < k; ++i) {
          if (++odo[i] < m) break;
          odo[i] = 0;
        }
        if (i == k) break;
      }
    }
    return true;
  }

  bool duplicator_wins(const Pairs& pos, int r) {
    if (!atomic_ok(pos)) return false;
    if (r == 0) return true;
    auto key = std::make_pair(pos, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool win = true;
    for (int side = 0; side < 2 && win; ++side) {
      const Structure& from = side == 0 ? a : b;
      const Structure& to = side == 0 ? b : a;
      for (int e = 0; e < from.domain_size && win; ++e) {
        bool answered = false;
        for (int d = 0; d < to.domain_size && !answered; ++d) {
          Pairs next = pos;
          next.emplace_back(side == 0 ? e : d, side == 0 ? d : e);
          if (duplicator_wins(normalized(next), r - 1)) answered = true;
        }
        if (!answered) win = false;
      }
    }
    memo[key] = win;
    return win;
  }

  // One Spoiler line from a position Duplicator loses.
  void build_line(Pairs pos, int r, std::vector<EfMove>& out) {
    if (r == 0 || !atomic_ok(pos)) return;
    for (int side = 0; side < 2; ++side) {
      const Structure& from = side == 0 ? a : b;
      const Structure& to = side == 0 ? b : a;
      for (int e = 0; e < from.domain_size; ++e) {
        bool all_lose = true;
        for (int d = 0; d < to.domain_size && all_lose; ++d) {
          Pairs next = pos;
          next.emplace_back(side == 0 ? e : d, side == 0 ? d : e);
          if (duplicator_wins(normalized(next), r - 1)) all_lose = false;
        }
        if (!all_lose) continue;
        EfMove move;
        move.spoiler_in_a = side == 0;
        move.spoiler_element = e;
        move.duplicator_reply = to.domain_size > 0 ? 0 : -1;
        out.push_back(move);
        if (to.domain_size > 0) {
          Pairs next = pos;
          next.emplace_back(side == 0 ? e : 0, side == 0 ? 0 : e);
          build_line(normalized(next), r - 1, out);
        }
        return;
      }
    }
  }
};

}  // namespace

EfResult ef_game(const Structure& a, const Structure& b, int rounds) {
  if (a.sig != b.sig) throw std::invalid_argument("ef_game: signature mismatch");
  if (!is_standard(a) || !is_standard(b))
    throw std::invalid_argument("ef_game: both structures must interpret equality as the diagonal");
  if (rounds < 0) throw std::invalid_argument("ef_game: negative round count");
  Solver solver{a, b, {}};
  Pairs init;
  for (size_t c = 0; c < a.sig.constants.size(); ++c)
    init.emplace_back(a.constant_values[c], b.constant_values[c]);
  init = Solver::normalized(init);
  EfResult result;
  result.rounds = rounds;
  result.equivalent = solver.duplicator_wins(init, rounds);
  if (!result.equivalent) solver.build_line(init, rounds, result.spoiler_line);
  return result;
}

}  // namespace fmtk
