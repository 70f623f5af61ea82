#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fmtk {

struct RelationSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const RelationSymbol&) const = default;
};

/// Vocabulary of a structure: relation symbols with arities plus constant
/// symbols. Function symbols are not part of the data model; encode a
/// function as its graph relation. At most one binary relation symbol may
/// be designated as the equality symbol.
struct Signature {
  std::vector<RelationSymbol> relations;
  std::vector<std::string> constants;
  std::optional<std::string> equality_name;

  int relation_index(std::string_view name) const;
  int constant_index(std::string_view name) const;
  /// Index of the designated equality relation, or -1 when none is set.
  int equality_index() const;
  bool has_symbol(std::string_view name) const;

  /// Invariant violations: duplicate symbol names, equality_name not naming
  /// a declared binary relation, non-positive arities.
  std::vector<std::string> check() const;

  bool operator==(const Signature&) const = default;
};

}  // namespace fmtk
