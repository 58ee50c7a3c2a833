#include <doctest.h>

#include "proofgen/layout.hpp"

using namespace proofgen;

namespace {

struct Fixture {
  Vocabulary vocab = Vocabulary::defaults();
  TokenVocab tokens = TokenVocab::from(vocab);
  Theory theory = canonical_theory(vocab);
  Question question = make_question({"Anne", "happy", true}, vocab);
};

}  // namespace

TEST_CASE("layout shape: [CLS] Q [SEP] [SEP] sentences with separators") {
  Fixture f;
  InputLayout layout = build_input_layout(f.question, f.theory, f.tokens);
  CHECK(layout.summary_index == 0);
  CHECK(layout.token_ids[0] == f.tokens.cls);
  // Question span covers "Anne is happy ?".
  CHECK(layout.question_span.begin == 1);
  CHECK(layout.question_span.length() == 4);
  // Double separator between question and context.
  CHECK(layout.token_ids[layout.question_span.end] == f.tokens.sep);
  CHECK(layout.token_ids[layout.question_span.end + 1] == f.tokens.sep);
  // Final token closes the context.
  CHECK(layout.token_ids.back() == f.tokens.sep);
}

TEST_CASE("node spans are disjoint, ordered, and cover every context item") {
  Fixture f;
  InputLayout layout = build_input_layout(f.question, f.theory, f.tokens);
  REQUIRE(layout.node_spans.size() == 5);
  CHECK(layout.node_spans[0].first == "F1");
  CHECK(layout.node_spans[4].first == "R3");
  for (size_t i = 0; i < layout.node_spans.size(); ++i) {
    CHECK(layout.node_spans[i].second.length() > 0);
    if (i > 0)
      CHECK(layout.node_spans[i].second.begin >
            layout.node_spans[i - 1].second.end);
  }
}

TEST_CASE("strip_function_words drops the configured stop list") {
  Fixture f;
  LayoutConfig config;
  config.strip_function_words = true;
  InputLayout layout = build_input_layout(f.question, f.theory, f.tokens, config);
  int is_id = f.tokens.id("is");
  int are_id = f.tokens.id("are");
  for (int id : layout.token_ids) {
    CHECK(id != is_id);
    CHECK(id != are_id);
  }
  // "Anne is big." span keeps Anne, big and the period.
  Span f1 = layout.node_spans[0].second;
  CHECK(f1.length() == 3);
}

TEST_CASE("layout errors: empty theory and over-long input") {
  Fixture f;
  CHECK_THROWS_AS(build_input_layout(f.question, Theory{}, f.tokens), DataError);

  LayoutConfig tiny;
  tiny.max_tokens = 10;
  CHECK_THROWS_AS(build_input_layout(f.question, f.theory, f.tokens, tiny),
                  InputTooLongError);
}

TEST_CASE("token vocabulary is closed over the grammar") {
  Fixture f;
  CHECK(f.tokens.size() <= 200);
  CHECK_THROWS_AS(f.tokens.id("zebra"), VocabularyError);
  // Every canonical sentence tokenizes within the vocabulary.
  for (size_t i = 0; i < f.theory.context_size(); ++i)
    for (const auto& tok : tokenize(f.theory.context_text(i)))
      CHECK_NOTHROW(f.tokens.id(tok));
}
