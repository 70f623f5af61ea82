#pragma once

#include <optional>

#include "fmtk/enumerate.hpp"
#include "fmtk/formula.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

/// Outcome of checking a candidate equality relation against the identity
/// axioms: (ax1) reflexivity, and (ax2) the substitution schema, swept over
/// enumerated context formulas alpha(x, p) with one distinguished variable
/// and one parameter. A relation can pass both at every budget and still
/// differ from the diagonal: a congruence that is not identity.
struct FregeReport {
  bool reflexive = true;
  std::optional<int> reflexivity_witness;      // element with (x,x) missing

  bool substitution_ok = true;
  struct SubstitutionViolation {
    int a = 0, b = 0;        // (a,b) in the candidate relation
    int parameter = 0;       // value of the context's parameter variable
    Formula context;         // alpha with alpha(a,p) true, alpha(b,p) false
  };
  std::optional<SubstitutionViolation> violation;

  bool equals_diagonal = false;
  long formulas_checked = 0;
  bool truncated = false;

  /// The structure the contexts were evaluated on: s with its equality
  /// symbol interpreted as the candidate (added when s designates none).
  Structure checked_structure;

  bool pass() const { return reflexive && substitution_ok; }
};

FregeReport frege_congruence_check(const Structure& s, const BinaryRelationView& rel,
                                   const EnumerationBudget& budget);

}  // namespace fmtk
