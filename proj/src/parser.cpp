#include "fmtk/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace fmtk {

namespace {

enum class Tok { ident, lparen, rparen, comma, dot, eq, bang, amp, pipe, arrow, iff, end };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;

  Token next() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    size_t at = i;
    if (i >= src.size()) return {Tok::end, "", at};
    char c = src[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      Token t{Tok::ident, src.substr(i, j - i), at};
      i = j;
      return t;
    }
    switch (c) {
      case '(': ++i; return {Tok::lparen, "(", at};
      case ')': ++i; return {Tok::rparen, ")", at};
      case ',': ++i; return {Tok::comma, ",", at};
      case '.': ++i; return {Tok::dot, ".", at};
      case '=': ++i; return {Tok::eq, "=", at};
      case '!': ++i; return {Tok::bang, "!", at};
      case '&': ++i; return {Tok::amp, "&", at};
      case '|': ++i; return {Tok::pipe, "|", at};
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          i += 2;
          return {Tok::arrow, "->", at};
        }
        throw ParseError("expected '->' at position " + std::to_string(at), at);
      case '<':
        if (i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
          i += 3;
          return {Tok::iff, "<->", at};
        }
        throw ParseError("expected '<->' at position " + std::to_string(at), at);
      default:
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(at),
                         at);
    }
  }
};

// Bound variables carry -(depth+1) during parsing; a post-pass renumbers
// them to free_count + depth once the free-variable table is complete.
struct Parser {
  const Signature& sig;
  Lexer lex;
  Token cur;
  std::vector<std::pair<std::string, int>> scope;  // name -> depth
  std::vector<std::string> free_names;

  explicit Parser(const std::string& text, const Signature& s) : sig(s), lex{text} {
    cur = lex.next();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(cur.pos), cur.pos);
  }

  void advance() { cur = lex.next(); }

  void expect(Tok k, const std::string& what) {
    if (cur.kind != k) fail("expected " + what);
    advance();
  }

  Term make_term(const std::string& name, size_t pos) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return Term::var(-(it->second + 1));
    int ci = sig.constant_index(name);
    if (ci >= 0) return Term::constant(ci);
    if (sig.relation_index(name) >= 0)
      throw ParseError("relation symbol " + name + " used as a term at position " +
                           std::to_string(pos),
                       pos);
    for (size_t k = 0; k < free_names.size(); ++k)
      if (free_names[k] == name) return Term::var(static_cast<int>(k));
    free_names.push_back(name);
    return Term::var(static_cast<int>(free_names.size()) - 1);
  }

  Formula::NodePtr parse_formula_expr(int depth) { return parse_iff(depth); }

  Formula::NodePtr parse_iff(int depth) {
    auto left = parse_implies(depth);
    while (cur.kind == Tok::iff) {
      advance();
      auto right = parse_implies(depth);
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::iff;
      n->a = left;
      n->b = right;
      left = n;
    }
    return left;
  }

  Formula::NodePtr parse_implies(int depth) {
    auto left = parse_or(depth);
    if (cur.kind == Tok::arrow) {
      advance();
      auto right = parse_implies(depth);
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::impl;
      n->a = left;
      n->b = right;
      return n;
    }
    return left;
  }

  Formula::NodePtr parse_or(int depth) {
    auto left = parse_and(depth);
    while (cur.kind == Tok::pipe) {
      advance();
      auto right = parse_and(depth);
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::disj;
      n->a = left;
      n->b = right;
      left = n;
    }
    return left;
  }

  Formula::NodePtr parse_and(int depth) {
    auto left = parse_unary(depth);
    while (cur.kind == Tok::amp) {
      advance();
      auto right = parse_unary(depth);
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::conj;
      n->a = left;
      n->b = right;
      left = n;
    }
    return left;
  }

  Formula::NodePtr parse_quantifier(int depth) {
    bool universal = cur.text == "forall";
    advance();
    if (cur.kind != Tok::ident) fail("expected a variable after quantifier");
    std::string var = cur.text;
    if (var == "forall" || var == "exists") fail("keyword cannot be a variable");
    advance();
    expect(Tok::dot, "'.'");
    scope.emplace_back(var, depth);
    auto body = parse_formula_expr(depth + 1);
    scope.pop_back();
    auto n = std::make_shared<Formula::Node>();
    n->kind = universal ? Formula::Kind::forall : Formula::Kind::exists;
    n->var = -(depth + 1);
    n->a = body;
    return n;
  }

  Formula::NodePtr parse_unary(int depth) {
    if (cur.kind == Tok::bang) {
      advance();
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::neg;
      n->a = parse_unary(depth);
      return n;
    }
    if (cur.kind == Tok::ident && (cur.text == "forall" || cur.text == "exists"))
      return parse_quantifier(depth);
    return parse_primary(depth);
  }

  Formula::NodePtr parse_primary(int depth) {
    if (cur.kind == Tok::lparen) {
      advance();
      auto inner = parse_formula_expr(depth);
      expect(Tok::rparen, "')'");
      if (cur.kind == Tok::eq) fail("equality operands must be bare terms");
      return inner;
    }
    if (cur.kind != Tok::ident) fail("expected a formula");
    std::string name = cur.text;
    size_t name_pos = cur.pos;
    advance();
    if (cur.kind == Tok::lparen) {
      int rel = sig.relation_index(name);
      if (rel < 0)
        throw ParseError("unknown relation symbol " + name + " at position " +
                             std::to_string(name_pos),
                         name_pos);
      advance();
      std::vector<Term> args;
      if (cur.kind != Tok::rparen) {
        while (true) {
          if (cur.kind != Tok::ident) fail("expected a term");
          args.push_back(make_term(cur.text, cur.pos));
          advance();
          if (cur.kind == Tok::comma) {
            advance();
            continue;
          }
          break;
        }
      }
      expect(Tok::rparen, "')'");
      if (static_cast<int>(args.size()) != sig.relations[rel].arity)
        throw ParseError("arity mismatch for " + name + ": expected " +
                             std::to_string(sig.relations[rel].arity) + " arguments, got " +
                             std::to_string(args.size()) + " at position " +
                             std::to_string(name_pos),
                         name_pos);
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::atom;
      n->rel = rel;
      n->args = std::move(args);
      return n;
    }
    if (cur.kind == Tok::eq) {
      int eq = sig.equality_index();
      if (eq < 0)
        throw ParseError("equality not in signature at position " + std::to_string(cur.pos),
                         cur.pos);
      Term lhs = make_term(name, name_pos);
      advance();
      if (cur.kind != Tok::ident) fail("expected a term after '='");
      Term rhs = make_term(cur.text, cur.pos);
      advance();
      auto n = std::make_shared<Formula::Node>();
      n->kind = Formula::Kind::atom;
      n->rel = eq;
      n->args = {lhs, rhs};
      return n;
    }
    fail("expected '(' or '=' after symbol " + name);
  }
};

Formula::NodePtr renumber(const Formula::NodePtr& n, int free_count) {
  auto out = std::make_shared<Formula::Node>(*n);
  if (out->var < 0) out->var = free_count + (-out->var - 1);
  for (auto& t : out->args)
    if (t.kind == Term::Kind::variable && t.index < 0) t.index = free_count + (-t.index - 1);
  if (n->a) out->a = renumber(n->a, free_count);
  if (n->b) out->b = renumber(n->b, free_count);
  return out;
}

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  auto root = p.parse_formula_expr(0);
  if (p.cur.kind != Tok::end)
    throw ParseError("unexpected trailing input at position " + std::to_string(p.cur.pos),
                     p.cur.pos);
  root = renumber(root, static_cast<int>(p.free_names.size()));
  return Formula(root, p.free_names);
}

}  // namespace fmtk
