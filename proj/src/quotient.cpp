#include "fmtk/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fmtk/structure_io.hpp"

namespace fmtk {

Partition partition_from_equivalence(const BinaryRelationView& v) {
  for (int x = 0; x < v.domain_size; ++x)
    if (!v.contains(x, x))
      throw std::invalid_argument("partition_from_equivalence: relation not reflexive");
  for (const auto& [a, b] : v.pairs) {
    if (!v.contains(b, a))
      throw std::invalid_argument("partition_from_equivalence: relation not symmetric");
    for (const auto& [c, d] : v.pairs)
      if (b == c && !v.contains(a, d))
        throw std::invalid_argument("partition_from_equivalence: relation not transitive");
  }
  Partition p;
  p.domain_size = v.domain_size;
  std::vector<char> placed(v.domain_size, 0);
  for (int x = 0; x < v.domain_size; ++x) {
    if (placed[x]) continue;
    std::vector<int> block;
    for (int y = x; y < v.domain_size; ++y)
      if (v.contains(x, y)) {
        block.push_back(y);
        placed[y] = 1;
      }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

BinaryRelationView equivalence_from_partition(const Partition& p) {
  BinaryRelationView v;
  v.domain_size = p.domain_size;
  for (const auto& block : p.blocks)
    for (int a : block)
      for (int b : block) v.pairs.emplace_back(a, b);
  v.normalize();
  return v;
}

bool congruence_compatible(const Structure& s, const Partition& p, std::string* why) {
  std::vector<int> where = p.block_of();
  int eq = s.sig.equality_index();
  for (size_t r = 0; r < s.interps.size(); ++r) {
    if (static_cast<int>(r) == eq) continue;
    int k = s.sig.relations[r].arity;
    std::set<Tuple> block_tuples;
    for (const auto& t : s.interps[r]) {
      Tuple bt(k);
      for (int i = 0; i < k; ++i) bt[i] = where[t[i]];
      block_tuples.insert(std::move(bt));
    }
    for (const auto& bt : block_tuples) {
      std::vector<size_t> odo(k, 0);
      while (true) {
        Tuple u(k);
        for (int i = 0; i < k; ++i) u[i] = p.blocks[bt[i]][odo[i]];
        if (!s.has_tuple(static_cast<int>(r), u)) {
          if (why) {
            std::ostringstream msg;
            msg << s.sig.relations[r].name << " holds on a block-equivalent tuple but not on (";
            for (int i = 0; i < k; ++i) msg << (i ? "," : "") << u[i];
            msg << ")";
            *why = msg.str();
          }
          return false;
        }
        int i = 0;
        for (; i < k; ++i) {
          if (++odo[i] < p.blocks[bt[i]].size()) break;
          odo[i] = 0;
        }
        if (i == k) break;
      }
    }
  }
  return true;
}

bool is_congruence(const Structure& s, const Partition& p) {
  if (p.domain_size != s.domain_size)
    throw std::invalid_argument("is_congruence: partition over a different domain");
  p.block_of();  // validates shape
  return congruence_compatible(s, p, nullptr);
}

std::vector<Partition> all_congruences(const Structure& s, int cap) {
  int n = s.domain_size;
  if (n > cap) throw std::invalid_argument("all_congruences: domain exceeds the cap");
  std::vector<Partition> out;
  // restricted growth strings enumerate every set partition exactly once
  std::vector<int> rgs(std::max(n, 1), 0);
  auto emit = [&]() {
    Partition p;
    p.domain_size = n;
    int blocks = 0;
    for (int i = 0; i < n; ++i) blocks = std::max(blocks, rgs[i] + 1);
    p.blocks.assign(blocks, {});
    for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
    if (congruence_compatible(s, p, nullptr)) out.push_back(std::move(p));
  };
  if (n == 0) {
    Partition p;
    p.domain_size = 0;
    out.push_back(p);
    return out;
  }
  // iterative RGS successor
  while (true) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs[j]);
      if (rgs[i] <= max_prefix) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() > b.blocks.size();
    return a.blocks < b.blocks;
  });
  return out;
}

QuotientMap quotient(const Structure& s, const Partition& c) {
  if (!is_congruence(s, c)) throw std::invalid_argument("quotient: partition is not a congruence");
  Partition canon = c;
  canon.normalize();
  std::vector<int> where = canon.block_of();

  QuotientMap qm;
  qm.source = s;
  qm.to_block = where;
  Structure& t = qm.target;
  t.sig = s.sig;
  t.name = s.name + "_q";
  t.domain_size = static_cast<int>(canon.blocks.size());
  t.interps.resize(s.interps.size());
  for (size_t r = 0; r < s.interps.size(); ++r) {
    for (const auto& tup : s.interps[r]) {
      Tuple image(tup.size());
      for (size_t i = 0; i < tup.size(); ++i) image[i] = where[tup[i]];
      t.interps[r].push_back(std::move(image));
    }
  }
  t.constant_values.resize(s.constant_values.size());
  for (size_t ci = 0; ci < s.constant_values.size(); ++ci)
    t.constant_values[ci] = where[s.constant_values[ci]];
  t.element_names.resize(t.domain_size);
  for (size_t bi = 0; bi < canon.blocks.size(); ++bi) {
    std::string label = "{";
    for (size_t j = 0; j < canon.blocks[bi].size(); ++j)
      label += (j ? "," : "") + s.element_name(canon.blocks[bi][j]);
    label += "}";
    t.element_names[bi] = label;
  }
  t.normalize();
  return qm;
}

TransferReport truth_transfer_check(const QuotientMap& qm, const EnumerationBudget& budget) {
  TransferReport report;
  const Structure& src = qm.source;
  const Structure& tgt = qm.target;
  int n = src.domain_size;
  int m = tgt.domain_size;
  report.truncated = for_each_enumerated_formula(
      src.sig, {"x", "y"}, budget, {&src, &tgt}, {}, [&](const SemanticItem& item) {
        ++report.formulas_checked;
        const TruthTable& ts = item.tables[0];
        const TruthTable& tt = item.tables[1];
        for (int a0 = 0; a0 < n; ++a0)
          for (int a1 = 0; a1 < n; ++a1) {
            ++report.assignments_checked;
            bool sv = ts.get(table_index(n, {a0, a1}));
            bool tv = tt.get(table_index(m, {qm.to_block[a0], qm.to_block[a1]}));
            if (sv != tv) {
              report.pass = false;
              report.counterexample = {item.formula, {a0, a1}, sv, tv};
              return VisitControl::stop;
            }
          }
        return VisitControl::proceed;
      });
  return report;
}

std::string quotient_to_text(const QuotientMap& qm) {
  std::string out = canonical_text(qm.target);
  out += "map {";
  for (size_t e = 0; e < qm.to_block.size(); ++e)
    out += (e ? ", " : " ") + std::to_string(e) + " -> " + std::to_string(qm.to_block[e]);
  out += qm.to_block.empty() ? "};\n" : " };\n";
  return out;
}

}  // namespace fmtk
