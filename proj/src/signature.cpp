#include "fmtk/signature.hpp"

#include <set>

namespace fmtk {

int Signature::relation_index(std::string_view name) const {
  for (size_t i = 0; i < relations.size(); ++i)
    if (relations[i].name == name) return static_cast<int>(i);
  return -1;
}

int Signature::constant_index(std::string_view name) const {
  for (size_t i = 0; i < constants.size(); ++i)
    if (constants[i] == name) return static_cast<int>(i);
  return -1;
}

int Signature::equality_index() const {
  if (!equality_name) return -1;
  return relation_index(*equality_name);
}

bool Signature::has_symbol(std::string_view name) const {
  return relation_index(name) >= 0 || constant_index(name) >= 0;
}

std::vector<std::string> Signature::check() const {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  for (const auto& r : relations) {
    if (!seen.insert(r.name).second)
      problems.push_back("duplicate symbol name: " + r.name);
    if (r.arity < 1)
      problems.push_back("relation " + r.name + " has non-positive arity");
  }
  for (const auto& c : constants) {
    if (!seen.insert(c).second)
      problems.push_back("duplicate symbol name: " + c);
  }
  if (equality_name) {
    int idx = relation_index(*equality_name);
    if (idx < 0) {
      problems.push_back("equality symbol " + *equality_name +
                         " is not a declared relation");
    } else if (relations[idx].arity != 2) {
      problems.push_back("equality symbol " + *equality_name +
                         " is not binary");
    }
  }
  return problems;
}

}  // namespace fmtk
