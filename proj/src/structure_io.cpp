#include "fmtk/structure_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fmtk {

namespace {

struct Scanner {
  const std::string& src;
  size_t i = 0;
  int line = 1;

  void skip() {
    while (i < src.size()) {
      char c = src[i];
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line;
        ++i;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return i >= src.size();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw StructParseError(msg + " (line " + std::to_string(line) + ")", line);
  }

  char peek() {
    skip();
    if (i >= src.size()) fail("unexpected end of input");
    return src[i];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  bool try_consume(char c) {
    if (done() || src[i] != c) return false;
    ++i;
    return true;
  }

  bool try_consume_str(const std::string& s) {
    skip();
    if (src.compare(i, s.size(), s) == 0) {
      i += s.size();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip();
    if (i >= src.size() ||
        !(std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_'))
      fail("expected an identifier");
    size_t j = i;
    while (j < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
      ++j;
    std::string out = src.substr(i, j - i);
    i = j;
    return out;
  }

  int number() {
    skip();
    if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
      fail("expected a number");
    long v = 0;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      v = v * 10 + (src[i] - '0');
      if (v > 1'000'000'000L) fail("number too large");
      ++i;
    }
    return static_cast<int>(v);
  }

  std::string quoted() {
    skip();
    expect('"');
    std::string out;
    while (i < src.size() && src[i] != '"') {
      if (src[i] == '\\' && i + 1 < src.size()) {
        ++i;
        out += src[i];
      } else {
        out += src[i];
      }
      ++i;
    }
    if (i >= src.size()) fail("unterminated string");
    ++i;
    return out;
  }
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void skip_map_block(Scanner& sc) {
  sc.expect('{');
  while (!sc.try_consume('}')) {
    sc.number();
    if (!sc.try_consume_str("->")) sc.fail("expected '->' in map block");
    sc.number();
    sc.try_consume(',');
  }
  sc.try_consume(';');
}

}  // namespace

Structure parse_structure_text(const std::string& text) {
  Scanner sc{text};
  Structure s;
  if (sc.try_consume_str("version")) {
    int v = sc.number();
    if (v != 1) sc.fail("unsupported format version " + std::to_string(v));
    sc.expect(';');
  }
  if (!sc.try_consume_str("structure")) sc.fail("expected 'structure'");
  s.name = sc.ident();
  sc.expect('{');
  bool have_domain = false;
  while (true) {
    if (sc.try_consume('}')) break;
    std::string kw = sc.ident();
    if (kw == "domain") {
      s.domain_size = sc.number();
      have_domain = true;
      sc.expect(';');
    } else if (kw == "rel") {
      std::string name = sc.ident();
      sc.expect('/');
      int arity = sc.number();
      sc.expect('=');
      sc.expect('{');
      std::vector<Tuple> tuples;
      while (!sc.try_consume('}')) {
        sc.expect('(');
        Tuple t;
        while (!sc.try_consume(')')) {
          t.push_back(sc.number());
          sc.try_consume(',');
        }
        tuples.push_back(std::move(t));
        sc.try_consume(',');
      }
      sc.expect(';');
      s.sig.relations.push_back({name, arity});
      s.interps.push_back(std::move(tuples));
    } else if (kw == "const") {
      std::string name = sc.ident();
      sc.expect('=');
      int v = sc.number();
      sc.expect(';');
      s.sig.constants.push_back(name);
      s.constant_values.push_back(v);
    } else if (kw == "equality") {
      s.sig.equality_name = sc.ident();
      sc.expect(';');
    } else if (kw == "names") {
      sc.expect('{');
      std::vector<std::pair<int, std::string>> entries;
      while (!sc.try_consume('}')) {
        int idx = sc.number();
        sc.expect(':');
        entries.emplace_back(idx, sc.quoted());
        sc.try_consume(',');
      }
      sc.expect(';');
      int max_idx = -1;
      for (auto& [idx, nm] : entries) max_idx = std::max(max_idx, idx);
      s.element_names.assign(std::max(max_idx + 1, s.domain_size), "");
      for (auto& [idx, nm] : entries) {
        if (idx < 0 || idx >= static_cast<int>(s.element_names.size()))
          sc.fail("name index out of range");
        s.element_names[idx] = nm;
      }
    } else {
      sc.fail("unknown declaration '" + kw + "'");
    }
  }
  if (!have_domain) sc.fail("structure block lacks a domain declaration");
  if (sc.try_consume_str("map")) skip_map_block(sc);
  if (!sc.done()) sc.fail("trailing input after structure block");
  s.normalize();
  return s;
}

Structure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open structure file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure_text(buf.str());
}

std::string canonical_text(const Structure& s) {
  std::ostringstream out;
  out << "version 1;\n";
  out << "structure " << s.name << " {\n";
  out << "  domain " << s.domain_size << ";\n";

  std::vector<int> rel_order(s.sig.relations.size());
  for (size_t i = 0; i < rel_order.size(); ++i) rel_order[i] = static_cast<int>(i);
  std::sort(rel_order.begin(), rel_order.end(), [&](int a, int b) {
    return s.sig.relations[a].name < s.sig.relations[b].name;
  });
  for (int r : rel_order) {
    out << "  rel " << s.sig.relations[r].name << "/" << s.sig.relations[r].arity << " = {";
    std::vector<Tuple> tuples = s.interps[r];
    std::sort(tuples.begin(), tuples.end());
    for (size_t i = 0; i < tuples.size(); ++i) {
      out << (i ? ", (" : " (");
      for (size_t j = 0; j < tuples[i].size(); ++j) out << (j ? "," : "") << tuples[i][j];
      out << ")";
    }
    out << (tuples.empty() ? "};\n" : " };\n");
  }

  std::vector<int> const_order(s.sig.constants.size());
  for (size_t i = 0; i < const_order.size(); ++i) const_order[i] = static_cast<int>(i);
  std::sort(const_order.begin(), const_order.end(),
            [&](int a, int b) { return s.sig.constants[a] < s.sig.constants[b]; });
  for (int c : const_order)
    out << "  const " << s.sig.constants[c] << " = " << s.constant_values[c] << ";\n";

  if (s.sig.equality_name) out << "  equality " << *s.sig.equality_name << ";\n";

  if (!s.element_names.empty()) {
    bool any = false;
    for (const auto& nm : s.element_names) any = any || !nm.empty();
    if (any) {
      out << "  names {";
      bool first = true;
      for (size_t e = 0; e < s.element_names.size(); ++e) {
        if (s.element_names[e].empty()) continue;
        out << (first ? " " : ", ") << e << ": " << quote(s.element_names[e]);
        first = false;
      }
      out << " };\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string structure_digest(const Structure& s) {
  std::string text = canonical_text(s);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace fmtk
