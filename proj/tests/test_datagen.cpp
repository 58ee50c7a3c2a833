#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "proofgen/datagen.hpp"
#include "proofgen/grammar.hpp"
#include "proofgen/jsonl.hpp"
#include "proofgen/layout.hpp"

using namespace proofgen;

namespace {

GenConfig tiny_config() {
  GenConfig c;
  c.samples_per_split = {{"train", 60}, {"dev", 12}};
  c.workers = 2;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("proofgen-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("generated samples hit their bucket and verify") {
  GenConfig config = tiny_config();
  for (const Bucket& bucket :
       {Bucket{0, Strategy::kProof, true}, Bucket{2, Strategy::kProof, true},
        Bucket{1, Strategy::kFailProof, false},
        Bucket{0, Strategy::kProof, false}}) {
    Sample s = generate_sample(config, "t", 0, bucket);
    CHECK(s.depth == bucket.depth);
    CHECK(s.strategy == bucket.strategy);
    CHECK(s.answer == bucket.answer);
    REQUIRE(!s.gold_proofs.empty());
    for (const auto& g : s.gold_proofs)
      CHECK(verify_proof(s.theory, s.question, g, s.strategy));
    auto [answer, strategy] = answer_and_strategy(s.theory, s.question);
    CHECK(answer == s.answer);
    CHECK(strategy == s.strategy);
    // Depth-0 proof buckets produce single-fact proofs.
    if (bucket.depth == 0 && bucket.strategy == Strategy::kProof) {
      CHECK(s.gold_proofs.front().nodes.size() == 1);
      CHECK(s.gold_proofs.front().nodes.front().kind == NodeKind::kFact);
    }
  }
}

TEST_CASE("fail-proof samples carry rule-only chains") {
  GenConfig config = tiny_config();
  Sample s = generate_sample(config, "t", 3, {1, Strategy::kFailProof, false});
  const ProofGraph& g = s.gold_proofs.front();
  for (const auto& n : g.nodes) CHECK(n.kind == NodeKind::kRule);
  CHECK(proof_depth(g) == 1);
}

TEST_CASE("negation produces NAF gold proofs at a reasonable rate") {
  GenConfig config = tiny_config();
  int with_naf = 0;
  for (int i = 0; i < 40; ++i) {
    Sample s = generate_sample(config, "naf-scan", i, {1, Strategy::kProof, true});
    if (s.gold_proofs.front().has_node(kNafId)) {
      ++with_naf;
      // NAF nodes are proof start nodes: no incoming edge.
      for (const auto& e : s.gold_proofs.front().edges) CHECK(e.second != kNafId);
    }
  }
  CHECK(with_naf > 0);
}

TEST_CASE("dataset generation is deterministic and correctly sized") {
  GenConfig config = tiny_config();
  auto dir1 = temp_dir("gen1");
  auto dir2 = temp_dir("gen2");
  Manifest m1 = generate_dataset(config, dir1);
  Manifest m2 = generate_dataset(config, dir2);

  CHECK(m1.counts.at("train") == 60);
  CHECK(m1.counts.at("dev") == 12);
  CHECK(slurp(dir1 / "train.jsonl") == slurp(dir2 / "train.jsonl"));
  CHECK(slurp(dir1 / "dev.jsonl") == slurp(dir2 / "dev.jsonl"));

  auto samples = read_samples(dir1 / "train.jsonl", Vocabulary::defaults());
  REQUIRE(samples.size() == 60);

  // Depth counts within +-1 of the configured fractions.
  std::map<int, int> per_depth;
  for (const auto& s : samples) per_depth[s.depth]++;
  for (const auto& [depth, frac] : config.depth_distribution) {
    double target = frac * 60;
    CHECK(std::abs(per_depth[depth] - target) <= 1.0);
  }

  // Round-trip through JSONL preserves every sample.
  for (size_t i = 0; i < samples.size(); ++i) {
    Json j = sample_to_json(samples[i]);
    Sample back = sample_from_json(j, Vocabulary::defaults());
    CHECK(back.theory == samples[i].theory);
    CHECK(back.answer == samples[i].answer);
    CHECK(back.strategy == samples[i].strategy);
    CHECK(back.depth == samples[i].depth);
    CHECK(back.gold_proofs == samples[i].gold_proofs);
  }

  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("every generated sample verifies and fits the encoder budget") {
  GenConfig config = tiny_config();
  auto dir = temp_dir("gen3");
  generate_dataset(config, dir);
  auto samples = read_samples(dir / "train.jsonl", Vocabulary::defaults());
  TokenVocab tokens = TokenVocab::from(Vocabulary::defaults());
  for (const auto& s : samples) {
    CHECK(s.theory.validate().empty());
    for (const auto& g : s.gold_proofs)
      CHECK(verify_proof(s.theory, s.question, g, s.strategy));
    LayoutConfig lc;
    lc.max_tokens = config.max_tokens;
    CHECK_NOTHROW(build_input_layout(s.question, s.theory, tokens, lc));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("dataset_stats arithmetic") {
  Sample a;
  a.depth = 0;
  a.strategy = Strategy::kProof;
  a.gold_proofs = {ProofGraph::make({NodeRef::fact("F1")}, {})};
  auto rows = dataset_stats(std::vector<Sample>{a});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].avg_proof_nodes == doctest::Approx(1.0));

  Sample b = a;
  b.gold_proofs = {ProofGraph::make(
      {NodeRef::fact("F1"), NodeRef::rule("R1"), NodeRef::rule("R2")},
      {{"F1", "R1"}, {"R1", "R2"}})};
  rows = dataset_stats(std::vector<Sample>{a, b});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].count == 2);
  CHECK(rows[0].avg_proof_nodes == doctest::Approx(2.0));
}

TEST_CASE("fail-proof share decreases with depth on defaults") {
  GenConfig config = tiny_config();
  config.samples_per_split = {{"train", 150}};
  auto dir = temp_dir("gen4");
  generate_dataset(config, dir);
  auto rows = dataset_stats(dir / "train.jsonl");
  REQUIRE(rows.size() >= 3);
  double prev = 1.0;
  for (const auto& r : rows) {
    double share = static_cast<double>(r.fail_count) / r.count;
    CHECK(share <= prev + 0.05);  // trend check, small slack for rounding
    prev = share;
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed dataset lines are reported with their line number") {
  auto dir = temp_dir("gen5");
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "bad.jsonl");
    out << "{\"id\": \"ok-but-incomplete\"}\n";
  }
  try {
    dataset_stats(dir / "bad.jsonl");
    FAIL("expected a DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find(":1:") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("config validation rejects bad inputs") {
  GenConfig c = tiny_config();
  CHECK(c.validate().empty());
  c.depth_distribution = {{0, 0.5}, {1, 0.2}};
  CHECK(!c.validate().empty());
  c = tiny_config();
  c.entity_count = 0;
  CHECK(!c.validate().empty());
  c = tiny_config();
  c.workers = 0;
  CHECK(!c.validate().empty());
}

TEST_CASE("config JSON round-trips") {
  GenConfig c = tiny_config();
  c.negation_enabled = false;
  c.depth_distribution = {{0, 0.5}, {2, 0.5}};
  GenConfig back = gen_config_from_json(gen_config_to_json(c));
  CHECK(back.negation_enabled == false);
  CHECK(back.depth_distribution == c.depth_distribution);
  CHECK(back.samples_per_split == c.samples_per_split);
  CHECK(back.seed == c.seed);
}
