#include "proofgen/grammar.hpp"

#include <algorithm>
#include <cctype>

namespace proofgen {

Vocabulary Vocabulary::defaults() {
  return Vocabulary{
      {"Anne", "Bob", "Charlie", "Dave", "Erin", "Fiona", "Gary", "Harry",
       "Ivy", "Jack"},
      {"big", "strong", "happy", "kind", "small", "quiet", "smart", "nice",
       "young", "cold", "green", "blue", "red", "round", "furry", "rough"}};
}

bool Vocabulary::has_entity(const std::string& e) const {
  return std::find(entities.begin(), entities.end(), e) != entities.end();
}

bool Vocabulary::has_attribute(const std::string& a) const {
  return std::find(attributes.begin(), attributes.end(), a) != attributes.end();
}

namespace {

void check_atom_symbols(const Atom& atom, const Vocabulary& vocab) {
  if (!atom.is_variable() && !vocab.has_entity(atom.entity))
    throw VocabularyError("unknown entity symbol: " + atom.entity);
  if (!vocab.has_attribute(atom.attribute))
    throw VocabularyError("unknown attribute symbol: " + atom.attribute);
  if (atom.entity.empty() || atom.attribute.empty())
    throw VocabularyError("empty symbol in atom");
}

std::string predicate(const Atom& atom) {
  return atom.positive ? atom.attribute : "not " + atom.attribute;
}

}  // namespace

std::string render_statement(const Atom& atom, const Vocabulary& vocab) {
  check_atom_symbols(atom, vocab);
  if (atom.is_variable())
    throw VocabularyError("cannot render a variable atom as a fact");
  return atom.entity + " is " + predicate(atom) + ".";
}

std::string render_question(const Atom& atom, const Vocabulary& vocab) {
  check_atom_symbols(atom, vocab);
  if (atom.is_variable())
    throw VocabularyError("cannot render a variable atom as a question");
  return atom.entity + " is " + predicate(atom) + "?";
}

std::string render_rule(const Rule& rule, const Vocabulary& vocab) {
  if (rule.antecedents.empty())
    throw VocabularyError("rule has no antecedents: " + rule.id);
  for (const auto& a : rule.antecedents) check_atom_symbols(a, vocab);
  check_atom_symbols(rule.consequent, vocab);

  std::string out = "If ";
  bool var_introduced = false;
  for (size_t i = 0; i < rule.antecedents.size(); ++i) {
    const Atom& a = rule.antecedents[i];
    if (i > 0) out += " and ";
    if (a.is_variable()) {
      out += var_introduced ? "they are " : "someone is ";
      var_introduced = true;
    } else {
      out += a.entity + " is ";
    }
    out += predicate(a);
  }
  out += " then ";
  if (rule.consequent.is_variable()) {
    if (!var_introduced)
      throw VocabularyError("rule consequent uses the variable but no antecedent binds it: " +
                            rule.id);
    out += "they are ";
  } else {
    out += rule.consequent.entity + " is ";
  }
  out += predicate(rule.consequent) + ".";
  return out;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else if (c == '.' || c == '?' || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      tokens.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

namespace {

// Tokenizer that remembers character offsets, for parse errors.
struct Cursor {
  std::vector<std::string> tokens;
  std::vector<size_t> offsets;
  size_t pos = 0;

  explicit Cursor(const std::string& text) {
    std::string cur;
    size_t start = 0;
    auto flush = [&](size_t end) {
      if (!cur.empty()) {
        tokens.push_back(cur);
        offsets.push_back(start);
        cur.clear();
      }
      (void)end;
    };
    for (size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush(i);
      } else if (c == '.' || c == '?' || c == ',') {
        flush(i);
        tokens.push_back(std::string(1, c));
        offsets.push_back(i);
      } else {
        if (cur.empty()) start = i;
        cur.push_back(c);
      }
    }
    flush(text.size());
    end_offset = text.size();
  }

  size_t end_offset = 0;

  bool done() const { return pos >= tokens.size(); }
  size_t offset() const { return done() ? end_offset : offsets[pos]; }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : tokens[pos];
  }
  std::string next() {
    if (done()) throw ParseError("unexpected end of input", end_offset);
    return tokens[pos++];
  }
  void expect(const std::string& tok) {
    if (peek() != tok)
      throw ParseError("expected '" + tok + "' but found '" + peek() + "'",
                       offset());
    ++pos;
  }
};

// Parses "[not] <attribute>" and applies it to the given subject entity.
Atom parse_predicate(Cursor& cur, const Vocabulary& vocab, std::string entity) {
  bool positive = true;
  if (cur.peek() == "not") {
    cur.next();
    positive = false;
  }
  size_t at = cur.offset();
  std::string attr = cur.next();
  if (!vocab.has_attribute(attr))
    throw ParseError("unknown attribute '" + attr + "'", at);
  return Atom{std::move(entity), std::move(attr), positive};
}

// Parses "<subject> is/are [not] attr". var_introduced tracks "someone".
Atom parse_clause(Cursor& cur, const Vocabulary& vocab, bool& var_introduced) {
  size_t at = cur.offset();
  std::string subject = cur.next();
  if (subject == "someone") {
    var_introduced = true;
    cur.expect("is");
    return parse_predicate(cur, vocab, kVarEntity);
  }
  if (subject == "they") {
    if (!var_introduced)
      throw ParseError("'they' used before 'someone' introduced the variable",
                       at);
    cur.expect("are");
    return parse_predicate(cur, vocab, kVarEntity);
  }
  if (!vocab.has_entity(subject))
    throw ParseError("unknown entity '" + subject + "'", at);
  cur.expect("is");
  return parse_predicate(cur, vocab, subject);
}

}  // namespace

Statement parse_statement(const std::string& text, const Vocabulary& vocab) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty input", 0);

  if (cur.peek() == "If") {
    cur.next();
    bool var_introduced = false;
    std::vector<Atom> antecedents;
    antecedents.push_back(parse_clause(cur, vocab, var_introduced));
    while (cur.peek() == "and") {
      cur.next();
      antecedents.push_back(parse_clause(cur, vocab, var_introduced));
    }
    cur.expect("then");
    Atom consequent = parse_clause(cur, vocab, var_introduced);
    cur.expect(".");
    if (!cur.done())
      throw ParseError("trailing input after sentence", cur.offset());
    return Rule{"", std::move(antecedents), std::move(consequent), ""};
  }

  bool var_introduced = false;
  size_t at = cur.offset();
  Atom atom = parse_clause(cur, vocab, var_introduced);
  if (atom.is_variable())
    throw ParseError("facts and questions must name an entity", at);
  if (cur.peek() != "." && cur.peek() != "?")
    throw ParseError("expected '.' or '?' but found '" + cur.peek() + "'",
                     cur.offset());
  cur.next();
  if (!cur.done())
    throw ParseError("trailing input after sentence", cur.offset());
  return atom;
}

Fact make_fact(std::string id, Atom atom, const Vocabulary& vocab) {
  std::string text = render_statement(atom, vocab);
  return Fact{std::move(id), std::move(atom), std::move(text)};
}

Rule make_rule(std::string id, std::vector<Atom> antecedents, Atom consequent,
               const Vocabulary& vocab) {
  Rule r{std::move(id), std::move(antecedents), std::move(consequent), ""};
  r.text = render_rule(r, vocab);
  return r;
}

Question make_question(Atom atom, const Vocabulary& vocab) {
  std::string text = render_question(atom, vocab);
  return Question{std::move(atom), std::move(text)};
}

Theory canonical_theory(const Vocabulary& vocab) {
  Theory t;
  t.facts.push_back(make_fact("F1", {"Anne", "big", true}, vocab));
  t.facts.push_back(make_fact("F2", {"Bob", "kind", true}, vocab));
  t.rules.push_back(
      make_rule("R1", {{kVarEntity, "big", true}}, {kVarEntity, "strong", true}, vocab));
  t.rules.push_back(
      make_rule("R2", {{kVarEntity, "strong", true}}, {kVarEntity, "happy", true}, vocab));
  t.rules.push_back(
      make_rule("R3", {{kVarEntity, "big", false}}, {kVarEntity, "small", true}, vocab));
  return t;
}

}  // namespace proofgen
