#include "fmtk/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fmtk {

namespace {

struct KeyHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct Rep {
  Formula formula;
  int size = 0;
  std::vector<TruthTable> tables;
};

// Formulas are stratified by quantifier depth: a formula placed under d
// enclosing quantifiers may use free variables plus bound ids f..f+d-1, and
// a quantifier at depth d always binds id f+d. This yields alpha-canonical
// trees directly and bounds nesting by max_quantifier_rank.
struct Enumerator {
  const Signature& sig;
  const std::vector<std::string>& free_vars;
  const EnumerationBudget& budget;
  const std::vector<const Structure*>& contexts;
  const EnumerateOptions& opts;

  int free_count;
  int num_vars;
  bool dedup;
  long considered = 0;
  bool truncated = false;
  bool stopped = false;

  std::vector<std::vector<Rep>> reps;                    // per depth
  std::vector<std::vector<std::vector<int>>> by_size;    // per depth, per size
  std::vector<std::unordered_map<std::vector<uint64_t>, int, KeyHash>> seen;  // per depth

  struct Candidate {
    Formula formula;
    std::vector<TruthTable> tables;
    std::vector<uint64_t> key;
  };

  Enumerator(const Signature& s, const std::vector<std::string>& fv,
             const EnumerationBudget& b, const std::vector<const Structure*>& ctx,
             const EnumerateOptions& o)
      : sig(s), free_vars(fv), budget(b), contexts(ctx), opts(o) {
    free_count = static_cast<int>(fv.size());
    num_vars = free_count + std::max(0, budget.max_quantifier_rank);
    dedup = !contexts.empty();
    int depths = std::max(0, budget.max_quantifier_rank) + 1;
    reps.resize(depths);
    by_size.resize(depths);
    seen.resize(depths);
    for (auto& bs : by_size) bs.resize(budget.max_node_count + 1);
  }

  bool spend() {
    if (considered >= budget.max_formulas) {
      truncated = true;
      return false;
    }
    ++considered;
    return true;
  }

  std::vector<TruthTable> atom_tables(int rel, const std::vector<Term>& args) {
    std::vector<TruthTable> ts;
    ts.reserve(contexts.size());
    for (const Structure* s : contexts) ts.push_back(tables::atom(*s, rel, args, num_vars));
    return ts;
  }

  static std::vector<uint64_t> make_key(const std::vector<TruthTable>& ts) {
    std::vector<uint64_t> key;
    for (const auto& t : ts) key.insert(key.end(), t.bits.begin(), t.bits.end());
    return key;
  }

  void atom_candidates(int depth, std::vector<Candidate>& out) {
    std::vector<Term> terms;
    for (int v = 0; v < free_count + depth; ++v) terms.push_back(Term::var(v));
    for (size_t c = 0; c < sig.constants.size(); ++c)
      terms.push_back(Term::constant(static_cast<int>(c)));
    if (terms.empty()) return;
    int eq = sig.equality_index();
    for (size_t r = 0; r < sig.relations.size(); ++r) {
      if (static_cast<int>(r) == eq && !opts.include_equality) continue;
      int k = sig.relations[r].arity;
      std::vector<size_t> odo(k, 0);
      while (true) {
        if (!spend()) return;
        std::vector<Term> args(k);
        for (int i = 0; i < k; ++i) args[i] = terms[odo[i]];
        Candidate cand;
        cand.formula = Formula::atom(free_vars, static_cast<int>(r), std::move(args));
        if (dedup) {
          cand.tables = atom_tables(static_cast<int>(r), cand.formula.root()->args);
          cand.key = make_key(cand.tables);
        }
        out.push_back(std::move(cand));
        int i = 0;
        for (; i < k; ++i) {
          if (++odo[i] < terms.size()) break;
          odo[i] = 0;
        }
        if (i == k) break;
      }
    }
  }

  void composite_candidates(int depth, int size, std::vector<Candidate>& out) {
    auto& pool = reps[depth];
    auto& sizes = by_size[depth];
    // negation
    for (int idx : sizes[size - 1]) {
      if (!spend()) return;
      Candidate cand;
      cand.formula = Formula::negation(pool[idx].formula);
      if (dedup) {
        cand.tables.reserve(contexts.size());
        for (const auto& t : pool[idx].tables) cand.tables.push_back(tables::negate(t));
        cand.key = make_key(cand.tables);
      }
      out.push_back(std::move(cand));
    }
    // binary connectives
    static constexpr Formula::Kind kBinary[] = {Formula::Kind::conj, Formula::Kind::disj,
                                                Formula::Kind::impl, Formula::Kind::iff};
    for (Formula::Kind op : kBinary) {
      for (int ls = 1; ls <= size - 2; ++ls) {
        int rs = size - 1 - ls;
        for (int li : sizes[ls]) {
          for (int ri : sizes[rs]) {
            if (!spend()) return;
            Candidate cand;
            cand.formula = Formula::binary(op, pool[li].formula, pool[ri].formula);
            if (dedup) {
              cand.tables.reserve(contexts.size());
              for (size_t c = 0; c < contexts.size(); ++c)
                cand.tables.push_back(
                    tables::combine(op, pool[li].tables[c], pool[ri].tables[c]));
              cand.key = make_key(cand.tables);
            }
            out.push_back(std::move(cand));
          }
        }
      }
    }
    // quantifiers over the next depth
    if (depth < budget.max_quantifier_rank) {
      int bound_id = free_count + depth;
      for (bool universal : {true, false}) {
        for (int bi : by_size[depth + 1][size - 1]) {
          if (!spend()) return;
          const Rep& body = reps[depth + 1][bi];
          Candidate cand;
          cand.formula = Formula::quantifier(
              universal ? Formula::Kind::forall : Formula::Kind::exists, bound_id, body.formula);
          if (dedup) {
            cand.tables.reserve(contexts.size());
            for (size_t c = 0; c < contexts.size(); ++c)
              cand.tables.push_back(tables::quantify(body.tables[c], bound_id,
                                                     contexts[c]->domain_size, num_vars,
                                                     universal));
            cand.key = make_key(cand.tables);
          }
          out.push_back(std::move(cand));
        }
      }
    }
  }

  // Admits the level's candidates: semantic mode keeps the lexicographically
  // least candidate per new truth table, syntactic mode keeps everything.
  // New depth-0 representatives are emitted through visit in canonical order.
  void settle_level(int depth, int size, std::vector<Candidate>& cands,
                    const std::function<VisitControl(const SemanticItem&)>& visit) {
    std::vector<std::pair<std::string, size_t>> order;
    if (dedup) {
      std::map<std::vector<uint64_t>, size_t> best;  // new table -> candidate index
      std::vector<std::string> canon(cands.size());
      for (size_t i = 0; i < cands.size(); ++i) {
        if (seen[depth].count(cands[i].key)) continue;
        canon[i] = to_canonical_string(sig, cands[i].formula);
        auto it = best.find(cands[i].key);
        if (it == best.end() || canon[i] < canon[it->second]) best[cands[i].key] = i;
      }
      for (auto& [key, idx] : best) order.emplace_back(canon[idx], idx);
    } else {
      for (size_t i = 0; i < cands.size(); ++i)
        order.emplace_back(to_canonical_string(sig, cands[i].formula), i);
    }
    std::sort(order.begin(), order.end());
    for (auto& [canon, idx] : order) {
      Candidate& c = cands[idx];
      if (dedup) seen[depth].emplace(c.key, static_cast<int>(reps[depth].size()));
      Rep rep{std::move(c.formula), size, std::move(c.tables)};
      if (depth == 0 && visit && !stopped) {
        SemanticItem item{rep.formula, size, rep.tables};
        if (visit(item) == VisitControl::stop) stopped = true;
      }
      by_size[depth][size].push_back(static_cast<int>(reps[depth].size()));
      reps[depth].push_back(std::move(rep));
    }
  }

  bool run(const std::function<VisitControl(const SemanticItem&)>& visit) {
    int max_size = opts.atomic_only ? 1 : budget.max_node_count;
    for (int size = 1; size <= max_size && !truncated && !stopped; ++size) {
      for (int depth = budget.max_quantifier_rank; depth >= 0 && !stopped; --depth) {
        std::vector<Candidate> cands;
        if (size == 1)
          atom_candidates(depth, cands);
        else if (!opts.atomic_only)
          composite_candidates(depth, size, cands);
        settle_level(depth, size, cands, visit);
        if (truncated) break;
      }
    }
    return truncated;
  }
};

}  // namespace

bool for_each_enumerated_formula(const Signature& sig,
                                 const std::vector<std::string>& free_vars,
                                 const EnumerationBudget& budget,
                                 const std::vector<const Structure*>& contexts,
                                 const EnumerateOptions& opts,
                                 const std::function<VisitControl(const SemanticItem&)>& visit) {
  if (budget.max_quantifier_rank < 0 || budget.max_node_count < 0 || budget.max_formulas < 0)
    throw std::invalid_argument("enumeration budget bounds must be nonnegative");
  Enumerator e(sig, free_vars, budget, contexts, opts);
  return e.run(visit);
}

EnumerationResult enumerate_formulas(const Signature& sig,
                                     const std::vector<std::string>& free_vars,
                                     const EnumerationBudget& budget,
                                     const Structure* dedup_on,
                                     const EnumerateOptions& opts) {
  EnumerationResult result;
  std::vector<const Structure*> contexts;
  if (dedup_on) contexts.push_back(dedup_on);
  result.truncated = for_each_enumerated_formula(
      sig, free_vars, budget, contexts, opts, [&](const SemanticItem& item) {
        result.formulas.push_back(item.formula);
        return VisitControl::proceed;
      });
  return result;
}

}  // namespace fmtk
