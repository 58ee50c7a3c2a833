#include "proofgen/theory.hpp"

#include <algorithm>
#include <set>

namespace proofgen {

std::vector<std::string> Theory::entities() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& e) {
    if (e != "X" && std::find(out.begin(), out.end(), e) == out.end())
      out.push_back(e);
  };
  for (const auto& f : facts) add(f.atom.entity);
  for (const auto& r : rules) {
    for (const auto& a : r.antecedents) add(a.entity);
    add(r.consequent.entity);
  }
  return out;
}

std::string Theory::validate() const {
  std::set<std::string> ids;
  for (const auto& f : facts) {
    if (f.id.empty()) return "fact with empty id";
    if (!ids.insert(f.id).second) return "duplicate node id: " + f.id;
    if (f.atom.entity.empty() || f.atom.attribute.empty())
      return "fact " + f.id + " has an empty symbol";
    if (f.atom.is_variable()) return "fact " + f.id + " uses the variable";
  }
  for (const auto& r : rules) {
    if (r.id.empty()) return "rule with empty id";
    if (!ids.insert(r.id).second) return "duplicate node id: " + r.id;
    if (r.antecedents.empty()) return "rule " + r.id + " has no antecedents";
    bool var_in_body = false;
    for (const auto& a : r.antecedents) {
      if (a.entity.empty() || a.attribute.empty())
        return "rule " + r.id + " has an empty symbol";
      var_in_body |= a.is_variable();
    }
    if (var_in_body && !r.consequent.is_variable())
      return "rule " + r.id +
             " has a variable antecedent but a ground consequent";
    if (r.consequent.is_variable() && !var_in_body)
      return "rule " + r.id + " has an unbound variable consequent";
  }
  return "";
}

}  // namespace proofgen
