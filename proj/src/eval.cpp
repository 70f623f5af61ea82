#include "fmtk/eval.hpp"

#include <stdexcept>

namespace fmtk {

namespace {

void check_against_signature(const Structure& s, const Formula::NodePtr& n) {
  if (!n) return;
  if (n->kind == Formula::Kind::atom) {
    if (n->rel < 0 || n->rel >= static_cast<int>(s.sig.relations.size()))
      throw std::invalid_argument("formula/signature mismatch: relation index out of range");
    if (static_cast<int>(n->args.size()) != s.sig.relations[n->rel].arity)
      throw std::invalid_argument("formula/signature mismatch: arity of " +
                                  s.sig.relations[n->rel].name);
    for (const auto& t : n->args)
      if (t.kind == Term::Kind::constant &&
          (t.index < 0 || t.index >= static_cast<int>(s.sig.constants.size())))
        throw std::invalid_argument("formula/signature mismatch: constant index out of range");
  }
  check_against_signature(s, n->a);
  check_against_signature(s, n->b);
}

int term_value(const Structure& s, const Term& t, const std::vector<int>& vals) {
  if (t.kind == Term::Kind::constant) return s.constant_values[t.index];
  int v = vals[t.index];
  if (v < 0) throw std::invalid_argument("unbound variable v" + std::to_string(t.index));
  return v;
}

bool eval_node(const Structure& s, const Formula::Node* n, std::vector<int>& vals) {
  using K = Formula::Kind;
  switch (n->kind) {
    case K::atom: {
      Tuple t(n->args.size());
      for (size_t i = 0; i < n->args.size(); ++i) t[i] = term_value(s, n->args[i], vals);
      return s.has_tuple(n->rel, t);
    }
    case K::neg:
      return !eval_node(s, n->a.get(), vals);
    case K::conj:
      return eval_node(s, n->a.get(), vals) && eval_node(s, n->b.get(), vals);
    case K::disj:
      return eval_node(s, n->a.get(), vals) || eval_node(s, n->b.get(), vals);
    case K::impl:
      return !eval_node(s, n->a.get(), vals) || eval_node(s, n->b.get(), vals);
    case K::iff:
      return eval_node(s, n->a.get(), vals) == eval_node(s, n->b.get(), vals);
    case K::forall:
    case K::exists: {
      if (n->var >= static_cast<int>(vals.size())) vals.resize(n->var + 1, -1);
      int saved = vals[n->var];
      bool universal = n->kind == K::forall;
      bool result = universal;
      for (int v = 0; v < s.domain_size; ++v) {
        vals[n->var] = v;
        bool inner = eval_node(s, n->a.get(), vals);
        if (universal && !inner) {
          result = false;
          break;
        }
        if (!universal && inner) {
          result = true;
          break;
        }
      }
      vals[n->var] = saved;
      return result;
    }
  }
  throw std::logic_error("eval_node: unreachable");
}

}  // namespace

bool evaluate_values(const Structure& s, const Formula& phi, std::vector<int> values) {
  if (!phi.valid()) throw std::invalid_argument("evaluate: invalid formula");
  int need = phi.free_count() + quantifier_rank(phi);
  if (static_cast<int>(values.size()) < need) values.resize(need, -1);
  return eval_node(s, phi.root().get(), values);
}

bool evaluate(const Structure& s, const Formula& phi, const Assignment& a) {
  if (!phi.valid()) throw std::invalid_argument("evaluate: invalid formula");
  check_against_signature(s, phi.root());
  std::vector<int> values(phi.free_count(), -1);
  for (int i = 0; i < phi.free_count(); ++i) {
    auto it = a.find(phi.free_names()[i]);
    if (it == a.end())
      throw std::invalid_argument("unbound free variable " + phi.free_names()[i]);
    if (it->second < 0 || it->second >= s.domain_size)
      throw std::invalid_argument("assignment value out of range for " + phi.free_names()[i]);
    values[i] = it->second;
  }
  return evaluate_values(s, phi, std::move(values));
}

long table_points(int domain_size, int num_vars) {
  long p = 1;
  for (int i = 0; i < num_vars; ++i) p *= domain_size;
  return p;
}

TruthTable TruthTable::zeros(long points) {
  TruthTable t;
  t.num_points = points;
  t.bits.assign(static_cast<size_t>((points + 63) / 64), 0);
  return t;
}

namespace tables {

namespace {

void mask_tail(TruthTable& t) {
  int rem = static_cast<int>(t.num_points & 63);
  if (rem != 0 && !t.bits.empty()) t.bits.back() &= (uint64_t{1} << rem) - 1;
}

}  // namespace

TruthTable atom(const Structure& s, int rel, const std::vector<Term>& args, int num_vars) {
  long points = table_points(s.domain_size, num_vars);
  TruthTable t = TruthTable::zeros(points);
  std::vector<int> vals(num_vars, 0);
  Tuple tuple(args.size());
  for (long p = 0; p < points; ++p) {
    bool ok = true;
    for (size_t i = 0; i < args.size(); ++i) {
      tuple[i] = args[i].kind == Term::Kind::constant ? s.constant_values[args[i].index]
                                                      : vals[args[i].index];
      if (tuple[i] < 0) ok = false;
    }
    if (ok && s.has_tuple(rel, tuple)) t.set(p, true);
    for (int i = 0; i < num_vars; ++i) {
      if (++vals[i] < s.domain_size) break;
      vals[i] = 0;
    }
  }
  return t;
}

TruthTable negate(const TruthTable& t) {
  TruthTable out = t;
  for (auto& w : out.bits) w = ~w;
  mask_tail(out);
  return out;
}

TruthTable combine(Formula::Kind op, const TruthTable& a, const TruthTable& b) {
  TruthTable out = a;
  for (size_t i = 0; i < out.bits.size(); ++i) {
    switch (op) {
      case Formula::Kind::conj: out.bits[i] &= b.bits[i]; break;
      case Formula::Kind::disj: out.bits[i] |= b.bits[i]; break;
      case Formula::Kind::impl: out.bits[i] = ~out.bits[i] | b.bits[i]; break;
      case Formula::Kind::iff: out.bits[i] = ~(out.bits[i] ^ b.bits[i]); break;
      default: throw std::logic_error("combine: not a binary connective");
    }
  }
  mask_tail(out);
  return out;
}

TruthTable quantify(const TruthTable& t, int var, int domain_size, int num_vars, bool is_forall) {
  (void)num_vars;
  TruthTable out = TruthTable::zeros(t.num_points);
  long stride = table_points(domain_size, var);
  for (long p = 0; p < t.num_points; ++p) {
    if (domain_size > 0 && (p / stride) % domain_size != 0) continue;
    bool acc = is_forall;
    for (int v = 0; v < domain_size; ++v) {
      bool bit = t.get(p + v * stride);
      acc = is_forall ? (acc && bit) : (acc || bit);
      if (acc != is_forall) break;
    }
    for (int v = 0; v < domain_size; ++v) out.set(p + v * stride, acc);
  }
  return out;
}

}  // namespace tables

TruthTable eval_table(const Structure& s, const Formula& phi, int num_vars) {
  using K = Formula::Kind;
  struct Rec {
    const Structure& s;
    int num_vars;
    TruthTable walk(const Formula::NodePtr& n) {
      switch (n->kind) {
        case K::atom: return tables::atom(s, n->rel, n->args, num_vars);
        case K::neg: return tables::negate(walk(n->a));
        case K::conj:
        case K::disj:
        case K::impl:
        case K::iff: return tables::combine(n->kind, walk(n->a), walk(n->b));
        case K::forall:
        case K::exists:
          return tables::quantify(walk(n->a), n->var, s.domain_size, num_vars,
                                  n->kind == K::forall);
      }
      throw std::logic_error("eval_table: unreachable");
    }
  };
  if (!phi.valid()) throw std::invalid_argument("eval_table: invalid formula");
  return Rec{s, num_vars}.walk(phi.root());
}

}  // namespace fmtk
