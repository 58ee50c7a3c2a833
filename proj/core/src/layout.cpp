#include "proofgen/layout.hpp"

#include <algorithm>

namespace proofgen {

namespace {
constexpr const char* kCls = "[CLS]";
constexpr const char* kSep = "[SEP]";
}  // namespace

TokenVocab TokenVocab::from(const Vocabulary& vocab) {
  TokenVocab tv;
  auto add = [&](const std::string& tok) {
    if (tv.index.emplace(tok, static_cast<int>(tv.tokens.size())).second)
      tv.tokens.push_back(tok);
  };
  add(kCls);
  add(kSep);
  for (const char* w : {"If", "then", "and", "someone", "they", "is", "are",
                        "not", ".", "?", ","})
    add(w);
  for (const auto& e : vocab.entities) add(e);
  for (const auto& a : vocab.attributes) add(a);
  tv.cls = tv.index.at(kCls);
  tv.sep = tv.index.at(kSep);
  return tv;
}

int TokenVocab::id(const std::string& tok) const {
  auto it = index.find(tok);
  if (it == index.end())
    throw VocabularyError("token not in vocabulary: " + tok);
  return it->second;
}

InputLayout build_input_layout(const Question& question, const Theory& theory,
                               const TokenVocab& vocab,
                               const LayoutConfig& config) {
  if (theory.empty()) throw DataError("cannot build a layout for an empty theory");

  auto keep = [&](const std::string& tok) {
    if (!config.strip_function_words) return true;
    return std::find(config.stop_words.begin(), config.stop_words.end(), tok) ==
           config.stop_words.end();
  };

  InputLayout out;
  auto push = [&](int id) { out.token_ids.push_back(id); };
  auto push_sentence = [&](const std::string& text) -> Span {
    Span span{static_cast<int>(out.token_ids.size()), 0};
    for (const auto& tok : tokenize(text))
      if (keep(tok)) push(vocab.id(tok));
    span.end = static_cast<int>(out.token_ids.size());
    return span;
  };

  push(vocab.cls);
  out.summary_index = 0;
  out.question_span = push_sentence(question.text);
  push(vocab.sep);
  push(vocab.sep);
  for (size_t i = 0; i < theory.context_size(); ++i) {
    Span span = push_sentence(theory.context_text(i));
    out.node_spans.emplace_back(theory.context_id(i), span);
    push(vocab.sep);
  }

  if (static_cast<int>(out.token_ids.size()) > config.max_tokens)
    throw InputTooLongError("input is " + std::to_string(out.token_ids.size()) +
                            " tokens, maximum is " +
                            std::to_string(config.max_tokens));
  return out;
}

}  // namespace proofgen
