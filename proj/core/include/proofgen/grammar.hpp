#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "proofgen/theory.hpp"

namespace proofgen {

// The controlled surface grammar:
//   fact      := <Entity> "is" ["not"] <attribute> "."
//   question  := <Entity> "is" ["not"] <attribute> "?"
//   rule      := "If" <subject> ("and" <subject>)* "then" <subject> "."
//   subject   := "someone is" | "they are" | <Entity> "is"  (+ ["not"] attr)
// "someone" introduces the universal variable on first use; "they" refers to
// it afterwards and in the consequent.

struct Vocabulary {
  std::vector<std::string> entities;
  std::vector<std::string> attributes;

  static Vocabulary defaults();

  bool has_entity(const std::string& e) const;
  bool has_attribute(const std::string& a) const;
};

struct VocabularyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  size_t position;  // character offset of the offending token
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

std::string render_statement(const Atom& atom, const Vocabulary& vocab);
std::string render_question(const Atom& atom, const Vocabulary& vocab);
std::string render_rule(const Rule& rule, const Vocabulary& vocab);

using Statement = std::variant<Atom, Rule>;

// Inverse of the renderers on grammar outputs. Accepts fact sentences,
// question sentences (trailing '?') and rule sentences. The returned Rule
// carries empty id/text. Throws ParseError with the character position.
Statement parse_statement(const std::string& text, const Vocabulary& vocab);

// Convenience constructors that render the surface text.
Fact make_fact(std::string id, Atom atom, const Vocabulary& vocab);
Rule make_rule(std::string id, std::vector<Atom> antecedents, Atom consequent,
               const Vocabulary& vocab);
Question make_question(Atom atom, const Vocabulary& vocab);

// The mini-theory used throughout docs and tests:
//   F1 "Anne is big."  F2 "Bob is kind."
//   R1 "If someone is big then they are strong."
//   R2 "If someone is strong then they are happy."
//   R3 "If someone is not big then they are small."
Theory canonical_theory(const Vocabulary& vocab = Vocabulary::defaults());

// Splits a grammar sentence into surface tokens (words and punctuation).
std::vector<std::string> tokenize(const std::string& text);

}  // namespace proofgen
