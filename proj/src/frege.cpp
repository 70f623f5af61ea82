#include "fmtk/frege.hpp"

#include <stdexcept>

namespace fmtk {

namespace {

// s with its equality symbol interpreted as rel; designates a fresh symbol
// when s has none.
Structure with_candidate_equality(const Structure& s, const BinaryRelationView& rel) {
  Structure out = s;
  int eq = out.sig.equality_index();
  if (eq < 0) {
    std::string name = "Eq";
    while (out.sig.has_symbol(name)) name += "_";
    out.sig.relations.push_back({name, 2});
    out.sig.equality_name = name;
    out.interps.emplace_back();
    eq = static_cast<int>(out.sig.relations.size()) - 1;
  }
  out.interps[eq].clear();
  for (const auto& [a, b] : rel.pairs) out.interps[eq].push_back({a, b});
  out.normalize();
  return out;
}

}  // namespace

FregeReport frege_congruence_check(const Structure& s, const BinaryRelationView& rel,
                                   const EnumerationBudget& budget) {
  if (rel.domain_size != s.domain_size)
    throw std::invalid_argument("frege_congruence_check: relation over a different domain");
  FregeReport report;

  for (int x = 0; x < s.domain_size; ++x) {
    if (!rel.contains(x, x)) {
      report.reflexive = false;
      report.reflexivity_witness = x;
      break;
    }
  }
  report.equals_diagonal = (rel == diagonal(s.domain_size));
  report.checked_structure = with_candidate_equality(s, rel);
  const Structure& ctx = report.checked_structure;

  int n = s.domain_size;
  report.truncated = for_each_enumerated_formula(
      ctx.sig, {"x", "p"}, budget, {&ctx}, {},
      [&](const SemanticItem& item) {
        ++report.formulas_checked;
        const TruthTable& t = item.tables[0];
        for (const auto& [a, b] : rel.pairs) {
          if (a == b) continue;
          for (int w = 0; w < n; ++w) {
            bool at_a = t.get(table_index(n, {a, w}));
            bool at_b = t.get(table_index(n, {b, w}));
            if (at_a && !at_b) {
              report.substitution_ok = false;
              report.violation = {a, b, w, item.formula};
              return VisitControl::stop;
            }
          }
        }
        return VisitControl::proceed;
      });
  return report;
}

}  // namespace fmtk
