#include "fmtk/discern.hpp"

#include <algorithm>
#include <stdexcept>

#include "fmtk/eval.hpp"

namespace fmtk {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::absolutely_discernible: return "absolutely_discernible";
    case Verdict::relatively_discernible_only: return "relatively_discernible_only";
    case Verdict::weakly_discernible_only: return "weakly_discernible_only";
    case Verdict::not_discerned_within_budget: return "not_discerned_within_budget";
    case Verdict::structurally_indiscernible: return "structurally_indiscernible";
  }
  return "?";
}

namespace {

EnumerateOptions to_enum_opts(const SearchOptions& opts) {
  EnumerateOptions e;
  e.include_equality = opts.allow_equality;
  e.atomic_only = opts.atomic_only;
  return e;
}

void check_pair(const Structure& s, int a, int b, const char* what) {
  if (a < 0 || a >= s.domain_size || b < 0 || b >= s.domain_size)
    throw std::invalid_argument(std::string(what) + ": element out of range");
  if (a == b)
    throw std::invalid_argument(std::string(what) + " undefined on identical elements");
}

// Remaps a one-free-variable formula into the two-variable table {x,y},
// placing its free variable in the given slot.
Formula::NodePtr remap_slot(const Formula::NodePtr& n, int slot) {
  auto out = std::make_shared<Formula::Node>(*n);
  if (out->var >= 1) out->var += 1;
  for (auto& t : out->args) {
    if (t.kind != Term::Kind::variable) continue;
    t.index = t.index == 0 ? slot : t.index + 1;
  }
  if (n->a) out->a = remap_slot(n->a, slot);
  if (n->b) out->b = remap_slot(n->b, slot);
  return out;
}

Formula in_slot(const Formula& phi, int slot) {
  return Formula(remap_slot(phi.root(), slot), {"x", "y"});
}

}  // namespace

Formula relative_from_absolute(const Formula& phi) {
  if (phi.free_count() != 1)
    throw std::invalid_argument("relative_from_absolute: needs a one-free-variable formula");
  return Formula::binary(Formula::Kind::conj, in_slot(phi, 0),
                         Formula::negation(in_slot(phi, 1)));
}

Formula weak_from_absolute(const Formula& phi) {
  Formula psi = relative_from_absolute(phi);
  Formula flipped = Formula::binary(Formula::Kind::conj, in_slot(phi, 1),
                                    Formula::negation(in_slot(phi, 0)));
  return Formula::binary(Formula::Kind::disj, psi, flipped);
}

AbsoluteSearch find_absolute_discerner(const Structure& s, int a, int b,
                                       const EnumerationBudget& budget,
                                       const SearchOptions& opts, const Group* group) {
  check_pair(s, a, b, "absolute discernibility");
  AbsoluteSearch result;
  Group local;
  if (!group) {
    local = automorphism_group(s);
    group = &local;
  }
  if (auto cert = automorphism_mapping(s, *group, a, b)) {
    result.orbit_certificate = cert;
    return result;
  }
  int n = s.domain_size;
  result.truncated = for_each_enumerated_formula(
      s.sig, {"x"}, budget, {&s}, to_enum_opts(opts), [&](const SemanticItem& item) {
        const TruthTable& t = item.tables[0];
        if (t.get(table_index(n, {a})) && !t.get(table_index(n, {b}))) {
          if (!evaluate(s, item.formula, {{"x", a}}) || evaluate(s, item.formula, {{"x", b}}))
            throw std::logic_error("absolute witness failed re-evaluation");
          result.witness = item.formula;
          return VisitControl::stop;
        }
        return VisitControl::proceed;
      });
  if (result.witness) result.truncated = false;
  return result;
}

BinarySearchResult find_relative_discerner(const Structure& s, int a, int b,
                                           const EnumerationBudget& budget,
                                           const SearchOptions& opts) {
  check_pair(s, a, b, "relative discernibility");
  BinarySearchResult result;
  int n = s.domain_size;
  result.truncated = for_each_enumerated_formula(
      s.sig, {"x", "y"}, budget, {&s}, to_enum_opts(opts), [&](const SemanticItem& item) {
        const TruthTable& t = item.tables[0];
        if (t.get(table_index(n, {a, b})) != t.get(table_index(n, {b, a}))) {
          if (evaluate(s, item.formula, {{"x", a}, {"y", b}}) ==
              evaluate(s, item.formula, {{"x", b}, {"y", a}}))
            throw std::logic_error("relative witness failed re-evaluation");
          result.witness = item.formula;
          return VisitControl::stop;
        }
        return VisitControl::proceed;
      });
  if (result.witness) result.truncated = false;
  return result;
}

BinarySearchResult find_weak_discerner(const Structure& s, int a, int b,
                                       const EnumerationBudget& budget,
                                       const SearchOptions& opts) {
  check_pair(s, a, b, "weak discernibility");
  BinarySearchResult result;
  int n = s.domain_size;
  result.truncated = for_each_enumerated_formula(
      s.sig, {"x", "y"}, budget, {&s}, to_enum_opts(opts), [&](const SemanticItem& item) {
        const TruthTable& t = item.tables[0];
        if (!t.get(table_index(n, {a, b})) || t.get(table_index(n, {a, a})))
          return VisitControl::proceed;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (t.get(table_index(n, {u, v})) != t.get(table_index(n, {v, u})))
              return VisitControl::proceed;
        if (!evaluate(s, item.formula, {{"x", a}, {"y", b}}) ||
            evaluate(s, item.formula, {{"x", a}, {"y", a}}))
          throw std::logic_error("weak witness failed re-evaluation");
        result.witness = item.formula;
        result.fully_irreflexive = true;
        for (int u = 0; u < n; ++u)
          if (t.get(table_index(n, {u, u}))) result.fully_irreflexive = false;
        return VisitControl::stop;
      });
  if (result.witness) result.truncated = false;
  return result;
}

std::vector<PairClassification> classify_all(const Structure& s, const EnumerationBudget& budget,
                                             const SearchOptions& opts) {
  int n = s.domain_size;
  std::vector<PairClassification> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      PairClassification pc;
      pc.a = a;
      pc.b = b;
      pc.budget_used = budget;
      out.push_back(pc);
    }
  if (out.empty()) return out;

  Group group = automorphism_group(s);
  std::vector<char> same_orbit(out.size(), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    auto cert = automorphism_mapping(s, group, out[i].a, out[i].b);
    if (cert) same_orbit[i] = 1;
  }

  // Absolute phase: one enumeration over phi(x); a pair is absolutely
  // discernible when some formula is true at exactly one of its elements.
  // Automorphic pairs are skipped; no formula can separate them.
  size_t open_abs = 0;
  std::vector<char> decided(out.size(), 0);
  for (size_t i = 0; i < out.size(); ++i)
    if (!same_orbit[i]) ++open_abs;
  if (open_abs > 0) {
    for_each_enumerated_formula(
        s.sig, {"x"}, budget, {&s}, to_enum_opts(opts), [&](const SemanticItem& item) {
          const TruthTable& t = item.tables[0];
          for (size_t i = 0; i < out.size(); ++i) {
            if (decided[i] || same_orbit[i]) continue;
            if (t.get(table_index(n, {out[i].a})) != t.get(table_index(n, {out[i].b}))) {
              out[i].verdict = Verdict::absolutely_discernible;
              out[i].witness = item.formula;
              decided[i] = 1;
              if (--open_abs == 0) return VisitControl::stop;
            }
          }
          return VisitControl::proceed;
        });
  }

  // Relative phase over phi(x,y) for the remaining pairs.
  size_t open_rel = 0;
  for (size_t i = 0; i < out.size(); ++i)
    if (!decided[i]) ++open_rel;
  if (open_rel > 0) {
    for_each_enumerated_formula(
        s.sig, {"x", "y"}, budget, {&s}, to_enum_opts(opts), [&](const SemanticItem& item) {
          const TruthTable& t = item.tables[0];
          for (size_t i = 0; i < out.size(); ++i) {
            if (decided[i]) continue;
            if (t.get(table_index(n, {out[i].a, out[i].b})) !=
                t.get(table_index(n, {out[i].b, out[i].a}))) {
              out[i].verdict = Verdict::relatively_discernible_only;
              out[i].witness = item.formula;
              decided[i] = 1;
              if (--open_rel == 0) return VisitControl::stop;
            }
          }
          return VisitControl::proceed;
        });
  }

  // Weak phase: symmetric formulas, true at (a,b), false at (a,a).
  size_t open_weak = 0;
  for (size_t i = 0; i < out.size(); ++i)
    if (!decided[i]) ++open_weak;
  if (open_weak > 0) {
    for_each_enumerated_formula(
        s.sig, {"x", "y"}, budget, {&s}, to_enum_opts(opts), [&](const SemanticItem& item) {
          const TruthTable& t = item.tables[0];
          bool symmetric = true;
          for (int u = 0; u < n && symmetric; ++u)
            for (int v = u + 1; v < n; ++v)
              if (t.get(table_index(n, {u, v})) != t.get(table_index(n, {v, u}))) {
                symmetric = false;
                break;
              }
          if (!symmetric) return VisitControl::proceed;
          bool fully_irreflexive = true;
          for (int u = 0; u < n; ++u)
            if (t.get(table_index(n, {u, u}))) fully_irreflexive = false;
          for (size_t i = 0; i < out.size(); ++i) {
            if (decided[i]) continue;
            if (t.get(table_index(n, {out[i].a, out[i].b})) &&
                !t.get(table_index(n, {out[i].a, out[i].a}))) {
              out[i].verdict = Verdict::weakly_discernible_only;
              out[i].witness = item.formula;
              out[i].weak_fully_irreflexive = fully_irreflexive;
              decided[i] = 1;
              if (--open_weak == 0) return VisitControl::stop;
            }
          }
          return VisitControl::proceed;
        });
  }

  for (size_t i = 0; i < out.size(); ++i) {
    if (decided[i]) continue;
    if (same_orbit[i]) {
      out[i].verdict = Verdict::structurally_indiscernible;
      out[i].orbit_certificate = automorphism_mapping(s, group, out[i].a, out[i].b);
    } else {
      out[i].verdict = Verdict::not_discerned_within_budget;
    }
  }
  return out;
}

bool leibniz_full(const Structure& s, int a, int b, int cap) {
  if (a < 0 || a >= s.domain_size || b < 0 || b >= s.domain_size)
    throw std::invalid_argument("leibniz_full: element out of range");
  if (s.domain_size > cap)
    throw std::invalid_argument("leibniz_full: domain exceeds the configured cap");
  // The subset {a} is in the sweep, so distinct elements always separate.
  return a == b;
}

bool leibniz_full_literal(const Structure& s, int a, int b) {
  if (a < 0 || a >= s.domain_size || b < 0 || b >= s.domain_size)
    throw std::invalid_argument("leibniz_full_literal: element out of range");
  if (s.domain_size > 12)
    throw std::invalid_argument("leibniz_full_literal: literal sweep capped at n <= 12");
  for (unsigned long mask = 0; mask < (1ul << s.domain_size); ++mask)
    if (((mask >> a) & 1) != ((mask >> b) & 1)) return false;
  return true;
}

bool henkin_leibniz(const Structure& s, const std::vector<std::string>& family, int a, int b) {
  if (a < 0 || a >= s.domain_size || b < 0 || b >= s.domain_size)
    throw std::invalid_argument("henkin_leibniz: element out of range");
  for (const auto& name : family) {
    int r = s.sig.relation_index(name);
    if (r < 0) throw std::invalid_argument("henkin_leibniz: unknown symbol " + name);
    if (s.sig.relations[r].arity != 1)
      throw std::invalid_argument("henkin_leibniz: " + name + " is not unary");
    if (s.has_tuple(r, {a}) != s.has_tuple(r, {b})) return false;
  }
  return true;
}

ChainReport verify_hierarchy(const Structure& s, const EnumerationBudget& budget,
                             const SearchOptions& opts) {
  ChainReport report;
  report.budget_used = budget;
  report.classifications = classify_all(s, budget, opts);

  for (const auto& pc : report.classifications) {
    if (pc.verdict != Verdict::absolutely_discernible) continue;
    ++report.absolute_pairs;
    const Formula& phi = *pc.witness;
    Formula psi = relative_from_absolute(phi);
    Formula chi = weak_from_absolute(phi);
    bool psi_ok = evaluate(s, psi, {{"x", pc.a}, {"y", pc.b}}) !=
                  evaluate(s, psi, {{"x", pc.b}, {"y", pc.a}});
    bool chi_ok = evaluate(s, chi, {{"x", pc.a}, {"y", pc.b}}) &&
                  !evaluate(s, chi, {{"x", pc.a}, {"y", pc.a}});
    for (int u = 0; u < s.domain_size && chi_ok; ++u)
      for (int v = 0; v < s.domain_size; ++v)
        if (evaluate(s, chi, {{"x", u}, {"y", v}}) != evaluate(s, chi, {{"x", v}, {"y", u}})) {
          chi_ok = false;
          break;
        }
    if (psi_ok && chi_ok) {
      report.constructed_witnesses_validated += 2;
    } else {
      report.constructions_all_valid = false;
      if (!report.construction_counterexample)
        report.construction_counterexample = {pc.a, pc.b};
    }
  }

  // The closing move: once singleton predicates are admitted, every distinct
  // pair is absolutely discernible by a rank-0 atomic witness.
  Structure extended = rigidify(s, RigidifyStrategy::full).structure;
  Group extended_group = automorphism_group(extended);
  EnumerationBudget atomic_budget;
  atomic_budget.max_quantifier_rank = 0;
  atomic_budget.max_node_count = 1;
  atomic_budget.max_formulas = budget.max_formulas;
  SearchOptions atomic_opts = opts;
  atomic_opts.atomic_only = true;
  for (int a = 0; a < s.domain_size; ++a)
    for (int b = a + 1; b < s.domain_size; ++b) {
      auto found =
          find_absolute_discerner(extended, a, b, atomic_budget, atomic_opts, &extended_group);
      if (!found.witness || quantifier_rank(*found.witness) != 0) {
        report.rigid_extension_all_absolute = false;
        if (!report.rigid_extension_counterexample)
          report.rigid_extension_counterexample = {a, b};
      }
    }

  using Status = ChainItem::Status;
  auto checked = [](bool ok) { return ok ? Status::checked_holds : Status::checked_fails; };
  report.items = {
      {"i", Status::definitional, "PII-A implies PII"},
      {"ii", Status::definitional, "PII-R implies PII"},
      {"iii", Status::definitional, "PII-W implies PII-R"},
      {"iv", checked(report.constructions_all_valid),
       "absolute discernibles are weak discernibles: symmetrized witness validates"},
      {"v", checked(report.constructions_all_valid),
       "absolute discernibles are relative discernibles: phi(x) & !phi(y) validates"},
      {"vi", Status::definitional, "PII iff PII-A or PII-R (definition-level)"},
      {"vii", Status::definitional, "PII iff PII-R (propositional from v, vi)"},
      {"viii", Status::definitional, "claimed: not (PII implies PII-A); contested by the rigid extension"},
      {"ix", Status::definitional, "if viii then PII and not PII-A"},
      {"x", checked(report.rigid_extension_all_absolute),
       "rebuttal: with singleton predicates admitted, every distinct pair is absolutely "
       "discernible, so PII-R collapses into PII-A"},
  };
  report.pass = report.constructions_all_valid && report.rigid_extension_all_absolute;
  return report;
}

}  // namespace fmtk
