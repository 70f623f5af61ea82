#pragma once

#include <stdexcept>
#include <string>

#include "fmtk/structure.hpp"

namespace fmtk {

struct StructParseError : std::runtime_error {
  StructParseError(std::string msg, int line_number)
      : std::runtime_error(std::move(msg)), line(line_number) {}
  int line = 0;
};

/// Parses the structure file format:
///
///   version 1;
///   structure Name {
///     domain 5;
///     rel Plus/3 = { (0,0,0), (0,1,1) };
///     const zero = 0;
///     equality Eq;
///     names { 0: "zero" };
///   }
///
/// Whitespace-insensitive; `#` starts a comment. A trailing
/// `map { 0 -> 0, ... }` block (as emitted by quotient reports) is accepted
/// and ignored. The parsed structure is not validated; run validate().
Structure parse_structure_text(const std::string& text);

Structure load_structure_file(const std::string& path);

/// Canonical serialized form: version header, symbols sorted by name,
/// tuples sorted ascending. Byte-stable across runs and platforms.
std::string canonical_text(const Structure& s);

/// FNV-1a 64 digest of the canonical form, as 16 hex characters.
std::string structure_digest(const Structure& s);

}  // namespace fmtk
