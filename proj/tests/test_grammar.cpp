#include <doctest.h>

#include "proofgen/grammar.hpp"
#include "proofgen/rng.hpp"

using namespace proofgen;

TEST_CASE("statement rendering uses the canonical templates") {
  Vocabulary vocab = Vocabulary::defaults();
  CHECK(render_statement({"Anne", "big", true}, vocab) == "Anne is big.");
  CHECK(render_statement({"Bob", "big", false}, vocab) == "Bob is not big.");
  CHECK(render_question({"Anne", "happy", true}, vocab) == "Anne is happy?");
  CHECK(render_question({"Bob", "strong", false}, vocab) == "Bob is not strong?");
}

TEST_CASE("rule rendering handles variables, negation and grounding") {
  Vocabulary vocab = Vocabulary::defaults();
  Rule r1{"R1", {{kVarEntity, "big", true}}, {kVarEntity, "strong", true}, ""};
  CHECK(render_rule(r1, vocab) == "If someone is big then they are strong.");

  Rule r3{"R3", {{kVarEntity, "big", false}}, {kVarEntity, "small", true}, ""};
  CHECK(render_rule(r3, vocab) == "If someone is not big then they are small.");

  Rule two{"R9",
           {{kVarEntity, "big", true}, {kVarEntity, "kind", true}},
           {kVarEntity, "happy", true},
           ""};
  CHECK(render_rule(two, vocab) ==
        "If someone is big and they are kind then they are happy.");

  Rule ground{"R4", {{"Anne", "big", true}}, {"Bob", "strong", true}, ""};
  CHECK(render_rule(ground, vocab) == "If Anne is big then Bob is strong.");
}

TEST_CASE("render rejects unknown symbols") {
  Vocabulary vocab = Vocabulary::defaults();
  CHECK_THROWS_AS(render_statement({"Zorg", "big", true}, vocab), VocabularyError);
  CHECK_THROWS_AS(render_statement({"Anne", "turquoise", true}, vocab),
                  VocabularyError);
  Rule unbound{"R1", {{"Anne", "big", true}}, {kVarEntity, "strong", true}, ""};
  CHECK_THROWS_AS(render_rule(unbound, vocab), VocabularyError);
}

TEST_CASE("parse_statement inverts render on the spec examples") {
  Vocabulary vocab = Vocabulary::defaults();
  auto atom = std::get<Atom>(parse_statement("Anne is big.", vocab));
  CHECK(atom == Atom{"Anne", "big", true});

  auto rule =
      std::get<Rule>(parse_statement("If someone is big then they are strong.", vocab));
  REQUIRE(rule.antecedents.size() == 1);
  CHECK(rule.antecedents[0] == Atom{kVarEntity, "big", true});
  CHECK(rule.consequent == Atom{kVarEntity, "strong", true});

  auto q = std::get<Atom>(parse_statement("Bob is not strong?", vocab));
  CHECK(q == Atom{"Bob", "strong", false});
}

TEST_CASE("parse errors carry a character position") {
  Vocabulary vocab = Vocabulary::defaults();
  CHECK_THROWS_AS(parse_statement("Anne enjoys maybe", vocab), ParseError);
  try {
    parse_statement("Anne enjoys maybe", vocab);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);  // "enjoys" where "is" was expected
  }
  CHECK_THROWS_AS(parse_statement("", vocab), ParseError);
  CHECK_THROWS_AS(parse_statement("If they are big then they are strong.", vocab),
                  ParseError);
  CHECK_THROWS_AS(parse_statement("Anne is big. extra", vocab), ParseError);
}

TEST_CASE("render/parse round-trip over random grammar items") {
  Vocabulary vocab = Vocabulary::defaults();
  Rng rng = make_rng(7, "grammar-roundtrip");
  auto random_atom = [&](bool allow_var) {
    Atom a;
    a.entity = allow_var && rand_bool(rng, 0.5)
                   ? std::string(kVarEntity)
                   : vocab.entities[rand_int(rng, 0, vocab.entities.size() - 1)];
    a.attribute = vocab.attributes[rand_int(rng, 0, vocab.attributes.size() - 1)];
    a.positive = rand_bool(rng);
    return a;
  };
  for (int i = 0; i < 300; ++i) {
    Atom fact = random_atom(false);
    CHECK(std::get<Atom>(parse_statement(render_statement(fact, vocab), vocab)) == fact);
    CHECK(std::get<Atom>(parse_statement(render_question(fact, vocab), vocab)) == fact);

    Rule rule;
    int n = rand_int(rng, 1, 3);
    bool any_var = false;
    for (int k = 0; k < n; ++k) {
      rule.antecedents.push_back(random_atom(true));
      any_var |= rule.antecedents.back().is_variable();
    }
    rule.consequent = random_atom(false);
    if (any_var) rule.consequent.entity = kVarEntity;
    Rule parsed = std::get<Rule>(parse_statement(render_rule(rule, vocab), vocab));
    CHECK(parsed.antecedents == rule.antecedents);
    CHECK(parsed.consequent == rule.consequent);
  }
}

TEST_CASE("canonical theory matches the documented mini-theory") {
  Theory t = canonical_theory();
  REQUIRE(t.facts.size() == 2);
  REQUIRE(t.rules.size() == 3);
  CHECK(t.facts[0].text == "Anne is big.");
  CHECK(t.facts[1].text == "Bob is kind.");
  CHECK(t.rules[0].text == "If someone is big then they are strong.");
  CHECK(t.rules[1].text == "If someone is strong then they are happy.");
  CHECK(t.rules[2].text == "If someone is not big then they are small.");
  CHECK(t.validate().empty());
  CHECK(t.entities() == std::vector<std::string>{"Anne", "Bob"});
}
