#include "fmtk/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fmtk/quotient.hpp"

namespace fmtk {

void BinaryRelationView::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool BinaryRelationView::contains(int a, int b) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

BinaryRelationView diagonal(int n) {
  BinaryRelationView v;
  v.domain_size = n;
  for (int x = 0; x < n; ++x) v.pairs.emplace_back(x, x);
  return v;
}

void Structure::normalize() {
  if (interps.size() < sig.relations.size()) interps.resize(sig.relations.size());
  for (auto& rel : interps) {
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  }
}

bool Structure::has_tuple(int rel, const Tuple& t) const {
  const auto& ts = interps[rel];
  return std::binary_search(ts.begin(), ts.end(), t);
}

BinaryRelationView Structure::relation_view(int rel) const {
  if (sig.relations[rel].arity != 2)
    throw std::invalid_argument("relation_view: " + sig.relations[rel].name + " is not binary");
  BinaryRelationView v;
  v.domain_size = domain_size;
  for (const auto& t : interps[rel]) v.pairs.emplace_back(t[0], t[1]);
  v.normalize();
  return v;
}

std::string Structure::element_name(int e) const {
  if (e >= 0 && e < static_cast<int>(element_names.size()) && !element_names[e].empty())
    return element_names[e];
  return std::to_string(e);
}

namespace {

std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  out += ")";
  return out;
}

// Equivalence-relation check on a binary view; appends precise issues.
bool equivalence_issues(const BinaryRelationView& v, const std::string& sym,
                        std::vector<ValidationIssue>& out) {
  bool ok = true;
  for (int x = 0; x < v.domain_size; ++x) {
    if (!v.contains(x, x)) {
      out.push_back({sym, "equality interpretation not reflexive, hence not a congruence: missing (" +
                              std::to_string(x) + "," + std::to_string(x) + ")"});
      ok = false;
    }
  }
  for (const auto& [a, b] : v.pairs) {
    if (!v.contains(b, a)) {
      out.push_back({sym, "equality interpretation not symmetric, hence not a congruence: (" +
                              std::to_string(a) + "," + std::to_string(b) + ") without converse"});
      ok = false;
    }
  }
  for (const auto& [a, b] : v.pairs) {
    for (const auto& [c, d] : v.pairs) {
      if (b == c && !v.contains(a, d)) {
        out.push_back({sym, "equality interpretation not transitive, hence not a congruence: (" +
                                std::to_string(a) + "," + std::to_string(d) + ") missing"});
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate(const Structure& s) {
  ValidationReport report;
  for (const auto& p : s.sig.check()) report.issues.push_back({"", p});
  if (s.domain_size < 0) report.issues.push_back({"", "negative domain size"});
  if (s.interps.size() != s.sig.relations.size())
    report.issues.push_back({"", "interpretation count does not match signature"});
  if (s.constant_values.size() != s.sig.constants.size())
    report.issues.push_back({"", "constant value count does not match signature"});
  if (!s.element_names.empty() &&
      s.element_names.size() != static_cast<size_t>(s.domain_size))
    report.issues.push_back({"", "element_names must be empty or name every element"});
  if (!report.issues.empty()) return report;

  for (size_t r = 0; r < s.sig.relations.size(); ++r) {
    const auto& rs = s.sig.relations[r];
    for (const auto& t : s.interps[r]) {
      if (static_cast<int>(t.size()) != rs.arity) {
        report.issues.push_back({rs.name, "tuple " + tuple_text(t) + " has wrong arity"});
        continue;
      }
      for (int c : t)
        if (c < 0 || c >= s.domain_size)
          report.issues.push_back({rs.name, "component out of range in tuple " + tuple_text(t)});
    }
  }
  for (size_t c = 0; c < s.sig.constants.size(); ++c) {
    int v = s.constant_values[c];
    if (v < 0 || v >= s.domain_size)
      report.issues.push_back({s.sig.constants[c], "constant value out of range"});
  }
  if (!report.issues.empty()) return report;

  int eq = s.sig.equality_index();
  if (eq >= 0) {
    BinaryRelationView v = s.relation_view(eq);
    if (equivalence_issues(v, s.sig.relations[eq].name, report.issues)) {
      Partition p = partition_from_equivalence(v);
      std::string why;
      if (!congruence_compatible(s, p, &why))
        report.issues.push_back({s.sig.relations[eq].name,
                                 "equality interpretation is not a congruence: " + why});
    }
  }
  return report;
}

bool is_standard(const Structure& s) {
  int eq = s.sig.equality_index();
  if (eq < 0) return true;
  return s.relation_view(eq) == diagonal(s.domain_size);
}

std::string singleton_predicate_name(const Signature& sig, int element,
                                     const std::vector<std::string>& also_taken) {
  std::string name = "I" + std::to_string(element);
  auto taken = [&](const std::string& n) {
    if (sig.has_symbol(n)) return true;
    return std::find(also_taken.begin(), also_taken.end(), n) != also_taken.end();
  };
  while (taken(name)) name += "_";
  return name;
}

Structure add_singleton_predicate(const Structure& s, int element, std::string* chosen_name) {
  if (element < 0 || element >= s.domain_size)
    throw std::invalid_argument("add_singleton_predicate: element out of range");
  Structure out = s;
  std::string name = singleton_predicate_name(s.sig, element, {});
  out.sig.relations.push_back({name, 1});
  out.interps.push_back({{element}});
  if (chosen_name) *chosen_name = name;
  return out;
}

Structure singleton_extension(const Structure& s) {
  Structure out = s;
  std::vector<std::string> added;
  for (int e = 0; e < s.domain_size; ++e) {
    std::string name = singleton_predicate_name(s.sig, e, added);
    added.push_back(name);
    out.sig.relations.push_back({name, 1});
    out.interps.push_back({{e}});
  }
  return out;
}

bool is_fully_symmetric(const Structure& s, std::string_view rel_name) {
  int r = s.sig.relation_index(rel_name);
  if (r < 0) throw std::invalid_argument("is_fully_symmetric: unknown relation " + std::string(rel_name));
  int k = s.sig.relations[r].arity;
  std::vector<int> positions(k);
  for (int i = 0; i < k; ++i) positions[i] = i;
  for (const auto& t : s.interps[r]) {
    std::vector<int> perm = positions;
    do {
      Tuple image(k);
      for (int i = 0; i < k; ++i) image[i] = t[perm[i]];
      if (!s.has_tuple(r, image)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

}  // namespace fmtk
