#pragma once

#include <stdexcept>
#include <string>

#include "fmtk/formula.hpp"
#include "fmtk/signature.hpp"

namespace fmtk {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, size_t position)
      : std::runtime_error(std::move(msg)), pos(position) {}
  size_t pos = 0;
};

/// Parses the formula surface syntax over a signature.
///
/// Connectives `! & | -> <->` in decreasing binding strength, `->` right
/// associative; quantifiers `forall x.` / `exists x.` bind to the end of the
/// enclosing scope or parenthesis; atoms `R(x,y)`; `x = y` only when the
/// signature designates an equality symbol. Bound-variable shadowing is
/// permitted and normalized away: the result is alpha-canonical, with free
/// variables numbered by first occurrence.
Formula parse_formula(const std::string& text, const Signature& sig);

}  // namespace fmtk
