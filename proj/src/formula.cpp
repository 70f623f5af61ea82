#include "fmtk/formula.hpp"

#include <stdexcept>

namespace fmtk {

Formula Formula::atom(std::vector<std::string> free_names, int rel, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->rel = rel;
  n->args = std::move(args);
  return Formula(n, std::move(free_names));
}

Formula Formula::negation(const Formula& f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg;
  n->a = f.root();
  return Formula(n, f.free_names());
}

Formula Formula::binary(Kind k, const Formula& a, const Formula& b) {
  if (a.free_names() != b.free_names())
    throw std::logic_error("Formula::binary: operands use different free-variable tables");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = a.root();
  n->b = b.root();
  return Formula(n, a.free_names());
}

Formula Formula::quantifier(Kind k, int var_id, const Formula& body) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->var = var_id;
  n->a = body.root();
  return Formula(n, body.free_names());
}

namespace {

bool nodes_equal(const Formula::NodePtr& x, const Formula::NodePtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind || x->rel != y->rel || x->var != y->var || x->args != y->args)
    return false;
  return nodes_equal(x->a, y->a) && nodes_equal(x->b, y->b);
}

int count_nodes(const Formula::NodePtr& n) {
  if (!n) return 0;
  return 1 + count_nodes(n->a) + count_nodes(n->b);
}

int rank(const Formula::NodePtr& n) {
  if (!n) return 0;
  int inner = std::max(rank(n->a), rank(n->b));
  if (n->kind == Formula::Kind::forall || n->kind == Formula::Kind::exists) return inner + 1;
  return inner;
}

struct Printer {
  const Signature& sig;
  const std::vector<std::string>* display_names;  // null for canonical form
  std::string out;

  void term(const Term& t) {
    if (t.kind == Term::Kind::constant) {
      out += sig.constants.at(t.index);
      return;
    }
    if (display_names && t.index < static_cast<int>(display_names->size())) {
      out += (*display_names)[t.index];
      return;
    }
    out += "v" + std::to_string(t.index);
  }

  void walk(const Formula::NodePtr& n) {
    using K = Formula::Kind;
    switch (n->kind) {
      case K::atom: {
        if (n->rel == sig.equality_index() && sig.equality_index() >= 0) {
          out += "(";
          term(n->args[0]);
          out += " = ";
          term(n->args[1]);
          out += ")";
          return;
        }
        out += sig.relations.at(n->rel).name;
        out += "(";
        for (size_t i = 0; i < n->args.size(); ++i) {
          if (i) out += ", ";
          term(n->args[i]);
        }
        out += ")";
        return;
      }
      case K::neg:
        out += "!";
        walk(n->a);
        return;
      case K::conj:
      case K::disj:
      case K::impl:
      case K::iff: {
        const char* op = n->kind == K::conj   ? " & "
                         : n->kind == K::disj ? " | "
                         : n->kind == K::impl ? " -> "
                                              : " <-> ";
        out += "(";
        walk(n->a);
        out += op;
        walk(n->b);
        out += ")";
        return;
      }
      case K::forall:
      case K::exists: {
        out += "(";
        out += n->kind == K::forall ? "forall v" : "exists v";
        out += std::to_string(n->var);
        out += ". ";
        walk(n->a);
        out += ")";
        return;
      }
    }
  }
};

}  // namespace

bool Formula::operator==(const Formula& other) const {
  return free_names_ == other.free_names_ && nodes_equal(root_, other.root_);
}

int node_count(const Formula& f) { return count_nodes(f.root()); }

int quantifier_rank(const Formula& f) { return rank(f.root()); }

std::string to_canonical_string(const Signature& sig, const Formula& f) {
  if (!f.valid()) return "<invalid>";
  Printer p{sig, nullptr, {}};
  p.walk(f.root());
  return p.out;
}

std::string to_display_string(const Signature& sig, const Formula& f) {
  if (!f.valid()) return "<invalid>";
  Printer p{sig, &f.free_names(), {}};
  p.walk(f.root());
  return p.out;
}

}  // namespace fmtk
