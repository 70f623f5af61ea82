// fmtk command line: parse structure files, run the analyses, and emit
// reports (text on stdout, structured JSON with --json PATH).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fmtk/autgroup.hpp"
#include "fmtk/discern.hpp"
#include "fmtk/ef.hpp"
#include "fmtk/eval.hpp"
#include "fmtk/frege.hpp"
#include "fmtk/hb.hpp"
#include "fmtk/quotient.hpp"
#include "fmtk/report.hpp"
#include "fmtk/structure_io.hpp"

namespace {

using namespace fmtk;

struct CommonOpts {
  int max_rank = 2;
  int max_nodes = 9;
  long max_formulas = 50000;
  bool atomic_only = false;
  bool allow_equality = false;
  std::string json_path;
};

EnumerationBudget budget_of(const CommonOpts& o) {
  EnumerationBudget b;
  b.max_quantifier_rank = o.atomic_only ? 0 : o.max_rank;
  b.max_node_count = o.atomic_only ? 1 : o.max_nodes;
  b.max_formulas = o.max_formulas;
  return b;
}

SearchOptions search_of(const CommonOpts& o) {
  SearchOptions s;
  s.atomic_only = o.atomic_only;
  s.allow_equality = o.allow_equality;
  return s;
}

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--max-rank", o.max_rank, "Quantifier rank bound");
  cmd->add_option("--max-nodes", o.max_nodes, "Formula node-count bound");
  cmd->add_option("--max-formulas", o.max_formulas, "Bound on candidate formulas examined");
  cmd->add_flag("--atomic-only", o.atomic_only, "Positive atoms only");
  cmd->add_flag("--allow-equality", o.allow_equality,
                "Admit equality atoms in discernibility searches");
  cmd->add_option("--json", o.json_path, "Write the structured report to a file");
}

Structure load_checked(const std::string& path) {
  Structure s = load_structure_file(path);
  ValidationReport vr = validate(s);
  if (!vr.ok()) {
    std::cerr << path << ": invalid structure\n";
    for (const auto& issue : vr.issues)
      std::cerr << "  " << (issue.symbol.empty() ? "" : issue.symbol + ": ") << issue.message
                << "\n";
    throw StructParseError("invalid structure in " + path, 0);
  }
  return s;
}

int finish(const CommonOpts& o, const std::string& command, const Structure& s, Json payload,
           int exit_code) {
  if (!o.json_path.empty()) {
    Json envelope = report_envelope(command, structure_digest(s), std::move(payload));
    std::ofstream out(o.json_path, std::ios::binary);
    out << envelope.dump(2) << "\n";
  }
  return exit_code;
}

std::string budget_line(const EnumerationBudget& b) {
  return "budget: rank <= " + std::to_string(b.max_quantifier_rank) +
         ", nodes <= " + std::to_string(b.max_node_count) +
         ", formulas <= " + std::to_string(b.max_formulas);
}

std::string partition_text(const Partition& p) {
  std::string out;
  for (const auto& blk : p.blocks) {
    out += "{";
    for (size_t i = 0; i < blk.size(); ++i) out += (i ? "," : "") + std::to_string(blk[i]);
    out += "} ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

Partition parse_blocks_spec(const std::string& spec, int n) {
  Partition p;
  p.domain_size = n;
  std::vector<int> current;
  auto flush = [&]() {
    if (!current.empty()) {
      p.blocks.push_back(current);
      current.clear();
    }
  };
  size_t i = 0;
  while (i < spec.size()) {
    char c = spec[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i])))
        v = v * 10 + (spec[i++] - '0');
      current.push_back(v);
      continue;
    }
    if (c == '|') flush();
    ++i;
  }
  flush();
  p.normalize();
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite model theory toolkit: automorphisms, discernibility, quotients"};
  app.require_subcommand(1);

  std::string path_a, path_b;
  CommonOpts opts;
  std::string strategy = "full";
  std::string candidate = "auto";
  std::string blocks_spec;
  bool run_transfer = false;
  int rounds = 3;
  int pair_a = -1, pair_b = -1;
  std::vector<std::string> family;

  auto* validate_cmd = app.add_subcommand("validate", "Check structure invariants");
  validate_cmd->add_option("structure", path_a)->required();
  add_budget_flags(validate_cmd, opts);

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit partition of the automorphism group");
  orbits_cmd->add_option("structure", path_a)->required();
  add_budget_flags(orbits_cmd, opts);

  auto* group_cmd = app.add_subcommand("group", "Automorphism group: order, generators, orbits");
  group_cmd->add_option("structure", path_a)->required();
  add_budget_flags(group_cmd, opts);

  auto* rigidify_cmd = app.add_subcommand("rigidify", "Extend to a rigid structure");
  rigidify_cmd->add_option("structure", path_a)->required();
  rigidify_cmd->add_option("--strategy", strategy, "full|greedy")
      ->check(CLI::IsMember({"full", "greedy"}));
  add_budget_flags(rigidify_cmd, opts);

  auto* classify_cmd = app.add_subcommand("classify", "Discernibility taxonomy per pair");
  classify_cmd->add_option("structure", path_a)->required();
  add_budget_flags(classify_cmd, opts);

  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Implication chain between the principles");
  hierarchy_cmd->add_option("structure", path_a)->required();
  add_budget_flags(hierarchy_cmd, opts);

  auto* hb_cmd = app.add_subcommand("hb", "Hilbert-Bernays identity formula for the signature");
  hb_cmd->add_option("structure", path_a)->required();
  add_budget_flags(hb_cmd, opts);

  auto* frege_cmd = app.add_subcommand("frege", "Identity axioms on a candidate equality");
  frege_cmd->add_option("structure", path_a)->required();
  frege_cmd->add_option("--candidate", candidate,
                        "auto|equality|diagonal|total|rel:<Name> (default: equality if "
                        "designated, else diagonal)");
  add_budget_flags(frege_cmd, opts);

  auto* quotient_cmd = app.add_subcommand("quotient", "Congruences and quotient structures");
  quotient_cmd->add_option("structure", path_a)->required();
  quotient_cmd->add_option("--blocks", blocks_spec, "Partition, e.g. \"0 3|1 4|2 5\"");
  quotient_cmd->add_flag("--transfer", run_transfer, "Run the truth-transfer sweep");
  add_budget_flags(quotient_cmd, opts);

  auto* ef_cmd = app.add_subcommand("ef", "Bounded elementary equivalence via the EF game");
  ef_cmd->add_option("structure_a", path_a)->required();
  ef_cmd->add_option("structure_b", path_b)->required();
  ef_cmd->add_option("--rounds", rounds, "Number of rounds");
  add_budget_flags(ef_cmd, opts);

  auto* leibniz_cmd = app.add_subcommand("leibniz", "Full-powerset and Henkin-family identity");
  leibniz_cmd->add_option("structure", path_a)->required();
  leibniz_cmd->add_option("--pair-a", pair_a, "First element")->required();
  leibniz_cmd->add_option("--pair-b", pair_b, "Second element")->required();
  leibniz_cmd->add_option("--family", family, "Unary predicates for the Henkin check")
      ->delimiter(',');
  add_budget_flags(leibniz_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      Structure s = load_structure_file(path_a);
      ValidationReport vr = validate(s);
      if (vr.ok())
        std::cout << "valid\n";
      else
        for (const auto& issue : vr.issues)
          std::cout << (issue.symbol.empty() ? std::string("structure")
                                             : issue.symbol)
                    << ": " << issue.message << "\n";
      return finish(opts, "validate", s, validation_json(vr), vr.ok() ? 0 : 1);
    }

    if (orbits_cmd->parsed()) {
      Structure s = load_checked(path_a);
      Partition p = orbits(s);
      std::cout << "orbits: " << partition_text(p) << "\n";
      Json payload;
      payload["orbits"] = partition_json(p)["blocks"];
      return finish(opts, "orbits", s, payload, 0);
    }

    if (group_cmd->parsed()) {
      Structure s = load_checked(path_a);
      Group g = automorphism_group(s);
      std::cout << "order: " << g.order << "\n";
      std::cout << "generators:";
      if (g.generators.empty()) std::cout << " (none; trivial group)";
      for (const auto& gen : g.generators) std::cout << " " << gen.cycle_notation();
      std::cout << "\norbits: " << partition_text(g.orbit_partition) << "\n";
      std::cout << "rigid: " << (g.order == 1 ? "yes" : "no") << "\n";
      return finish(opts, "group", s, group_json(g), 0);
    }

    if (rigidify_cmd->parsed()) {
      Structure s = load_checked(path_a);
      RigidifyResult r = rigidify(
          s, strategy == "full" ? RigidifyStrategy::full : RigidifyStrategy::greedy);
      std::cout << "added " << r.added.size() << " singleton predicate(s):";
      for (const auto& [name, element] : r.added)
        std::cout << " " << name << "={" << element << "}";
      std::cout << "\n" << canonical_text(r.structure);
      Json payload;
      payload["strategy"] = strategy;
      Json added = Json::array();
      for (const auto& [name, element] : r.added) {
        Json e;
        e["predicate"] = name;
        e["element"] = element;
        added.push_back(e);
      }
      payload["added"] = added;
      payload["structure"] = canonical_text(r.structure);
      return finish(opts, "rigidify", s, payload, 0);
    }

    if (classify_cmd->parsed()) {
      Structure s = load_checked(path_a);
      auto pcs = classify_all(s, budget_of(opts), search_of(opts));
      std::cout << budget_line(budget_of(opts)) << "\n";
      for (const auto& pc : pcs) {
        std::cout << "(" << pc.a << "," << pc.b << "): " << verdict_name(pc.verdict);
        if (pc.witness) std::cout << "  witness: " << to_display_string(s.sig, *pc.witness);
        if (pc.orbit_certificate)
          std::cout << "  automorphism: " << pc.orbit_certificate->cycle_notation();
        std::cout << "\n";
      }
      Json payload;
      Json pairs = Json::array();
      for (const auto& pc : pcs) pairs.push_back(classification_json(s.sig, pc));
      payload["pairs"] = pairs;
      return finish(opts, "classify", s, payload, 0);
    }

    if (hierarchy_cmd->parsed()) {
      Structure s = load_checked(path_a);
      ChainReport r = verify_hierarchy(s, budget_of(opts), search_of(opts));
      for (const auto& item : r.items) {
        const char* status = item.status == ChainItem::Status::checked_holds   ? "holds"
                             : item.status == ChainItem::Status::checked_fails ? "FAILS"
                                                                               : "definition";
        std::cout << "(" << item.label << ") [" << status << "] " << item.note << "\n";
      }
      std::cout << "absolute pairs: " << r.absolute_pairs
                << ", constructed witnesses validated: " << r.constructed_witnesses_validated
                << "\n";
      std::cout << "rigid extension all-absolute: "
                << (r.rigid_extension_all_absolute ? "yes" : "no") << "\n";
      std::cout << (r.pass ? "chain holds\n" : "chain FAILS\n");
      return finish(opts, "hierarchy", s, chain_json(s.sig, r), r.pass ? 0 : 1);
    }

    if (hb_cmd->parsed()) {
      Structure s = load_checked(path_a);
      Formula f = hb_identity(s.sig);
      std::cout << to_display_string(s.sig, f) << "\n";
      std::cout << "quantifier rank: " << quantifier_rank(f) << "\n";
      return finish(opts, "hb", s, formula_json(s.sig, f), 0);
    }

    if (frege_cmd->parsed()) {
      Structure s = load_checked(path_a);
      BinaryRelationView rel;
      if (candidate == "auto")
        candidate = s.sig.equality_index() >= 0 ? "equality" : "diagonal";
      if (candidate == "equality") {
        int eq = s.sig.equality_index();
        if (eq < 0) throw std::invalid_argument("no designated equality symbol");
        rel = s.relation_view(eq);
      } else if (candidate == "diagonal") {
        rel = diagonal(s.domain_size);
      } else if (candidate == "total") {
        rel.domain_size = s.domain_size;
        for (int x = 0; x < s.domain_size; ++x)
          for (int y = 0; y < s.domain_size; ++y) rel.pairs.emplace_back(x, y);
      } else if (candidate.rfind("rel:", 0) == 0) {
        int r = s.sig.relation_index(candidate.substr(4));
        if (r < 0) throw std::invalid_argument("unknown relation " + candidate.substr(4));
        rel = s.relation_view(r);
      } else {
        throw std::invalid_argument("bad --candidate value: " + candidate);
      }
      FregeReport r = frege_congruence_check(s, rel, budget_of(opts));
      std::cout << "(=1) reflexivity: " << (r.reflexive ? "pass" : "FAIL") << "\n";
      std::cout << "(=2) substitution (" << r.formulas_checked
                << " contexts): " << (r.substitution_ok ? "pass" : "FAIL") << "\n";
      if (r.violation)
        std::cout << "  violated by " << to_display_string(r.checked_structure.sig, r.violation->context)
                  << " at pair (" << r.violation->a << "," << r.violation->b << "), parameter "
                  << r.violation->parameter << "\n";
      std::cout << "equals diagonal: " << (r.equals_diagonal ? "yes" : "no") << "\n";
      std::cout << frege_json(r)["verdict"].get<std::string>() << "\n";
      return finish(opts, "frege", s, frege_json(r), r.pass() ? 0 : 1);
    }

    if (quotient_cmd->parsed()) {
      Structure s = load_checked(path_a);
      Json payload;
      if (blocks_spec.empty()) {
        auto congruences = all_congruences(s);
        std::cout << congruences.size() << " congruence(s)\n";
        Json list = Json::array();
        for (const auto& c : congruences) {
          std::cout << "  " << partition_text(c) << "\n";
          list.push_back(partition_json(c)["blocks"]);
        }
        payload["congruences"] = list;
        return finish(opts, "quotient", s, payload, 0);
      }
      Partition p = parse_blocks_spec(blocks_spec, s.domain_size);
      QuotientMap qm = quotient(s, p);
      std::cout << quotient_to_text(qm);
      payload["blocks"] = partition_json(p)["blocks"];
      payload["quotient"] = quotient_to_text(qm);
      int code = 0;
      if (run_transfer) {
        TransferReport tr = truth_transfer_check(qm, budget_of(opts));
        std::cout << "truth transfer: " << (tr.pass ? "pass" : "FAIL") << " ("
                  << tr.formulas_checked << " formulas, " << tr.assignments_checked
                  << " assignments)\n";
        payload["transfer"] = transfer_json(s.sig, tr);
        code = tr.pass ? 0 : 1;
      }
      return finish(opts, "quotient", s, payload, code);
    }

    if (ef_cmd->parsed()) {
      Structure a = load_checked(path_a);
      Structure b = load_checked(path_b);
      EfResult r = ef_game(a, b, rounds);
      if (r.equivalent)
        std::cout << "equivalent at rank " << rounds << "\n";
      else {
        std::cout << "separated within " << rounds << " round(s)\n";
        for (const auto& m : r.spoiler_line)
          std::cout << "  spoiler picks " << m.spoiler_element << " in "
                    << (m.spoiler_in_a ? "A" : "B") << " (sample reply: " << m.duplicator_reply
                    << ")\n";
      }
      Json payload = ef_json(r);
      payload["structure_digest_b"] = structure_digest(b);
      return finish(opts, "ef", a, payload, 0);
    }

    if (leibniz_cmd->parsed()) {
      Structure s = load_checked(path_a);
      bool full = leibniz_full(s, pair_a, pair_b);
      std::cout << "leibniz_full(" << pair_a << "," << pair_b << "): "
                << (full ? "identified" : "separated") << "\n";
      Json payload;
      payload["pair"] = {pair_a, pair_b};
      payload["leibniz_full"] = full;
      if (!family.empty()) {
        bool henkin = henkin_leibniz(s, family, pair_a, pair_b);
        std::cout << "henkin_leibniz(family";
        for (const auto& f : family) std::cout << " " << f;
        std::cout << "): " << (henkin ? "indiscernible in the family" : "separated") << "\n";
        payload["family"] = family;
        payload["henkin_leibniz"] = henkin;
      }
      return finish(opts, "leibniz", s, payload, 0);
    }
  } catch (const StructParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
