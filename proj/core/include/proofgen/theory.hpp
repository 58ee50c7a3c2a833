#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace proofgen {

// The universal variable used by quantified rules ("someone ... they ...").
// Entity symbols from the vocabulary are capitalized names, so "X" can never
// collide with them.
inline constexpr const char* kVarEntity = "X";

// A ground or variable statement: <entity> has <attribute>, or does not.
struct Atom {
  std::string entity;
  std::string attribute;
  bool positive = true;

  bool is_variable() const { return entity == kVarEntity; }
  Atom negated() const { return Atom{entity, attribute, !positive}; }
  Atom grounded_at(const std::string& e) const {
    return is_variable() ? Atom{e, attribute, positive} : *this;
  }

  auto operator<=>(const Atom&) const = default;
};

struct Fact {
  std::string id;  // F<k>
  Atom atom;       // always ground
  std::string text;

  auto operator<=>(const Fact&) const = default;
};

struct Rule {
  std::string id;  // R<k>
  std::vector<Atom> antecedents;  // non-empty; entity may be kVarEntity
  Atom consequent;
  std::string text;

  bool has_variable() const {
    if (consequent.is_variable()) return true;
    for (const auto& a : antecedents)
      if (a.is_variable()) return true;
    return false;
  }

  auto operator<=>(const Rule&) const = default;
};

struct Question {
  Atom atom;  // always ground
  std::string text;

  auto operator<=>(const Question&) const = default;
};

// The context C: ordered facts followed by ordered rules. Node identifiers
// are unique across both lists.
struct Theory {
  std::vector<Fact> facts;
  std::vector<Rule> rules;

  bool empty() const { return facts.empty() && rules.empty(); }
  size_t context_size() const { return facts.size() + rules.size(); }

  // Context sentence order: facts first, then rules, as listed.
  std::string context_id(size_t i) const {
    return i < facts.size() ? facts[i].id : rules[i - facts.size()].id;
  }
  const std::string& context_text(size_t i) const {
    return i < facts.size() ? facts[i].text : rules[i - facts.size()].text;
  }

  const Fact* find_fact(const std::string& id) const {
    for (const auto& f : facts)
      if (f.id == id) return &f;
    return nullptr;
  }
  const Rule* find_rule(const std::string& id) const {
    for (const auto& r : rules)
      if (r.id == id) return &r;
    return nullptr;
  }
  std::optional<size_t> context_index(const std::string& id) const {
    for (size_t i = 0; i < context_size(); ++i)
      if (context_id(i) == id) return i;
    return std::nullopt;
  }

  // Entities mentioned anywhere in the theory, in first-mention order.
  std::vector<std::string> entities() const;

  // Checks id uniqueness and basic shape; returns an error message or empty.
  std::string validate() const;

  bool operator==(const Theory&) const = default;
};

enum class Strategy { kProof, kFailProof };

inline const char* to_string(Strategy s) {
  return s == Strategy::kProof ? "proof" : "fail";
}

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace proofgen
