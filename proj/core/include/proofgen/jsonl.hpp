#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "proofgen/proof.hpp"
#include "proofgen/sample.hpp"

namespace proofgen {

using Json = nlohmann::ordered_json;

// One decoding step, kept for interpretability.
struct StepLog {
  std::string parent;
  std::string child;
  double p_parent = 0.0;
  double p_child = 0.0;
};

struct Prediction {
  std::string id;
  bool answer = false;
  Strategy strategy = Strategy::kProof;
  ProofGraph proof;
  bool truncated = false;
  std::vector<StepLog> steps;
  double score = 0.0;  // accumulated log-score of the decoded path
};

Json sample_to_json(const Sample& sample);
Sample sample_from_json(const Json& j, const Vocabulary& vocab);

Json prediction_to_json(const Prediction& p);
Prediction prediction_from_json(const Json& j);

std::vector<Sample> read_samples(const std::filesystem::path& path,
                                 const Vocabulary& vocab);
void write_samples(const std::filesystem::path& path,
                   const std::vector<Sample>& samples);

std::vector<Prediction> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path,
                       const std::vector<Prediction>& predictions);

}  // namespace proofgen
