#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "proofgen/oracle.hpp"
#include "proofgen/sample.hpp"

namespace proofgen {

struct GenConfig {
  int entity_count = 3;      // entities per theory
  int attribute_count = 6;   // attributes per theory
  int min_facts = 3;
  int max_facts = 5;
  int min_rules = 4;
  int max_rules = 7;
  int max_antecedents = 2;
  bool negation_enabled = true;
  std::map<int, double> depth_distribution = {{0, 0.3}, {1, 0.4}, {2, 0.3}};
  // Fail-proof share per depth. The released-corpus trend has this shrinking
  // with depth, so the defaults do too.
  std::map<int, double> fail_share = {{0, 0.50}, {1, 0.35}, {2, 0.25},
                                      {3, 0.18}, {4, 0.12}, {5, 0.08}};
  std::map<std::string, int> samples_per_split = {
      {"train", 8000}, {"dev", 1000}, {"test", 2000}};
  uint64_t seed = 42;
  int max_tokens = 512;
  int rejection_budget = 10000;
  int enumeration_node_bound = 12;
  int workers = 4;

  // Returns an error message or empty.
  std::string validate() const;
};

nlohmann::ordered_json gen_config_to_json(const GenConfig& config);
GenConfig gen_config_from_json(const nlohmann::ordered_json& j);

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The stratification target of one sample.
struct Bucket {
  int depth = 0;
  Strategy strategy = Strategy::kProof;
  bool answer = true;
};

// Rejection-samples one labeled sample for the bucket. Deterministic given
// (config.seed, split, index). Throws GenerationError when the per-bucket
// retry budget runs out.
Sample generate_sample(const GenConfig& config, const std::string& split,
                       int index, const Bucket& bucket);

// Deterministic bucket assignment for a split: depth counts by largest
// remainder, strategy by the per-depth fail share, answers balanced.
std::vector<Bucket> plan_buckets(const GenConfig& config, const std::string& split);

struct Manifest {
  GenConfig config;
  std::map<std::string, std::filesystem::path> files;
  std::map<std::string, int> counts;

  nlohmann::ordered_json to_json() const;
};

// Writes <split>.jsonl files plus manifest.json into out_dir.
Manifest generate_dataset(const GenConfig& config,
                          const std::filesystem::path& out_dir);

struct DepthStats {
  int depth = 0;
  int count = 0;
  int proof_count = 0;
  int fail_count = 0;
  double avg_proof_nodes = 0.0;  // over the first gold proof per sample
};

std::vector<DepthStats> dataset_stats(const std::vector<Sample>& samples);
std::vector<DepthStats> dataset_stats(const std::filesystem::path& file);
std::string format_stats(const std::vector<DepthStats>& rows);

}  // namespace proofgen
