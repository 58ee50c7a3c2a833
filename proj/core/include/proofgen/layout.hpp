#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "proofgen/grammar.hpp"
#include "proofgen/theory.hpp"

namespace proofgen {

// Token inventory shared by the tokenizer and the encoder embedding table.
// Built from the grammar vocabulary, so it is closed: unknown surface tokens
// are vocabulary errors, never UNK.
struct TokenVocab {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, int> index;
  int cls = 0;
  int sep = 0;

  static TokenVocab from(const Vocabulary& vocab);
  int id(const std::string& tok) const;
  size_t size() const { return tokens.size(); }
};

struct Span {
  int begin = 0;
  int end = 0;  // exclusive
  int length() const { return end - begin; }
};

struct InputLayout {
  std::vector<int> token_ids;
  std::vector<std::pair<std::string, Span>> node_spans;  // context order
  Span question_span;
  int summary_index = 0;  // the leading aggregate token
};

struct LayoutConfig {
  bool strip_function_words = false;
  std::vector<std::string> stop_words = {"is", "are", "a", "the"};
  int max_tokens = 512;
};

struct InputTooLongError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Token sequence [CLS] Q [SEP] [SEP] s1 [SEP] s2 [SEP] ... sn [SEP] with the
// per-sentence token range of every fact/rule id. Throws DataError on an
// empty theory and InputTooLongError past max_tokens.
InputLayout build_input_layout(const Question& question, const Theory& theory,
                               const TokenVocab& vocab,
                               const LayoutConfig& config = {});

}  // namespace proofgen
