#include "fmtk/report.hpp"

#include "fmtk/structure_io.hpp"

namespace fmtk {

Json formula_json(const Signature& sig, const Formula& f) {
  Json j;
  j["canonical"] = to_canonical_string(sig, f);
  j["display"] = to_display_string(sig, f);
  j["quantifier_rank"] = quantifier_rank(f);
  j["nodes"] = node_count(f);
  return j;
}

Json partition_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  Json j;
  j["domain"] = p.domain_size;
  j["blocks"] = blocks;
  return j;
}

Json group_json(const Group& g) {
  Json j;
  j["order"] = g.order;
  Json gens = Json::array();
  for (const auto& p : g.generators) gens.push_back(p.cycle_notation());
  j["generators"] = gens;
  j["orbits"] = partition_json(g.orbit_partition)["blocks"];
  return j;
}

Json validation_json(const ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& issue : r.issues) {
    Json e;
    e["symbol"] = issue.symbol;
    e["message"] = issue.message;
    issues.push_back(e);
  }
  Json j;
  j["valid"] = r.ok();
  j["issues"] = issues;
  return j;
}

Json classification_json(const Signature& sig, const PairClassification& pc) {
  Json j;
  j["pair"] = {pc.a, pc.b};
  j["verdict"] = verdict_name(pc.verdict);
  if (pc.witness) j["witness"] = formula_json(sig, *pc.witness);
  if (pc.orbit_certificate) j["orbit_certificate"] = pc.orbit_certificate->cycle_notation();
  if (pc.verdict == Verdict::weakly_discernible_only)
    j["weak_fully_irreflexive"] = pc.weak_fully_irreflexive;
  Json budget;
  budget["max_rank"] = pc.budget_used.max_quantifier_rank;
  budget["max_nodes"] = pc.budget_used.max_node_count;
  budget["max_formulas"] = pc.budget_used.max_formulas;
  j["budget"] = budget;
  return j;
}

Json chain_json(const Signature& sig, const ChainReport& r) {
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json e;
    e["item"] = item.label;
    e["status"] = item.status == ChainItem::Status::checked_holds   ? "checked: holds"
                  : item.status == ChainItem::Status::checked_fails ? "checked: fails"
                                                                    : "definition-level";
    e["note"] = item.note;
    items.push_back(e);
  }
  Json j;
  j["items"] = items;
  j["absolute_pairs"] = r.absolute_pairs;
  j["constructed_witnesses_validated"] = r.constructed_witnesses_validated;
  j["constructions_all_valid"] = r.constructions_all_valid;
  if (r.construction_counterexample)
    j["construction_counterexample"] = {r.construction_counterexample->first,
                                        r.construction_counterexample->second};
  j["rigid_extension_all_absolute"] = r.rigid_extension_all_absolute;
  if (r.rigid_extension_counterexample)
    j["rigid_extension_counterexample"] = {r.rigid_extension_counterexample->first,
                                           r.rigid_extension_counterexample->second};
  j["pass"] = r.pass;
  Json pairs = Json::array();
  for (const auto& pc : r.classifications) pairs.push_back(classification_json(sig, pc));
  j["pairs"] = pairs;
  return j;
}

Json frege_json(const FregeReport& r) {
  Json j;
  j["reflexive"] = r.reflexive;
  if (r.reflexivity_witness) j["reflexivity_missing_at"] = *r.reflexivity_witness;
  j["substitution_ok"] = r.substitution_ok;
  if (r.violation) {
    Json v;
    v["pair"] = {r.violation->a, r.violation->b};
    v["parameter"] = r.violation->parameter;
    v["context"] = formula_json(r.checked_structure.sig, r.violation->context);
    j["violation"] = v;
  }
  j["equals_diagonal"] = r.equals_diagonal;
  j["formulas_checked"] = r.formulas_checked;
  j["truncated"] = r.truncated;
  j["verdict"] = !r.pass() ? "fails the identity axioms within budget"
                 : r.equals_diagonal
                     ? "congruence within budget; equals the diagonal"
                     : "congruence within budget, but not the diagonal; not identity";
  return j;
}

Json transfer_json(const Signature& sig, const TransferReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["formulas_checked"] = r.formulas_checked;
  j["assignments_checked"] = r.assignments_checked;
  j["truncated"] = r.truncated;
  if (r.counterexample) {
    Json c;
    c["formula"] = formula_json(sig, r.counterexample->formula);
    c["assignment"] = r.counterexample->assignment;
    c["source_value"] = r.counterexample->source_value;
    c["target_value"] = r.counterexample->target_value;
    j["counterexample"] = c;
  }
  return j;
}

Json ef_json(const EfResult& r) {
  Json j;
  j["rounds"] = r.rounds;
  j["equivalent"] = r.equivalent;
  if (!r.equivalent) {
    Json line = Json::array();
    for (const auto& m : r.spoiler_line) {
      Json e;
      e["spoiler_picks_in"] = m.spoiler_in_a ? "A" : "B";
      e["element"] = m.spoiler_element;
      e["sample_reply"] = m.duplicator_reply;
      line.push_back(e);
    }
    j["spoiler_line"] = line;
  }
  return j;
}

Json report_envelope(const std::string& command, const std::string& digest, Json payload) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["report_version"] = kReportVersion;
  j["command"] = command;
  j["structure_digest"] = digest;
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace fmtk
