#include "proofgen/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "proofgen/grammar.hpp"
#include "proofgen/jsonl.hpp"
#include "proofgen/layout.hpp"
#include "proofgen/rng.hpp"

namespace proofgen {

std::string GenConfig::validate() const {
  if (entity_count < 1 || entity_count > static_cast<int>(Vocabulary::defaults().entities.size()))
    return "entity_count out of range";
  if (attribute_count < 2 ||
      attribute_count > static_cast<int>(Vocabulary::defaults().attributes.size()))
    return "attribute_count out of range";
  if (min_facts < 1 || max_facts < min_facts) return "bad fact count range";
  if (min_rules < 0 || max_rules < min_rules) return "bad rule count range";
  if (max_antecedents < 1) return "max_antecedents must be >= 1";
  double total = 0;
  for (const auto& [d, f] : depth_distribution) {
    if (d < 0 || f < 0) return "bad depth distribution entry";
    total += f;
  }
  if (std::abs(total - 1.0) > 1e-9) return "depth fractions must sum to 1";
  for (const auto& [d, f] : fail_share) {
    (void)d;
    if (f < 0 || f > 1) return "fail share must lie in [0,1]";
  }
  if (rejection_budget < 1) return "rejection_budget must be positive";
  if (workers < 1) return "workers must be positive";
  return "";
}

nlohmann::ordered_json gen_config_to_json(const GenConfig& c) {
  auto map_to_json = [](const std::map<int, double>& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
  };
  nlohmann::ordered_json splits = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.samples_per_split) splits[k] = v;
  return nlohmann::ordered_json{{"entity_count", c.entity_count},
                                {"attribute_count", c.attribute_count},
                                {"min_facts", c.min_facts},
                                {"max_facts", c.max_facts},
                                {"min_rules", c.min_rules},
                                {"max_rules", c.max_rules},
                                {"max_antecedents", c.max_antecedents},
                                {"negation_enabled", c.negation_enabled},
                                {"depth_distribution", map_to_json(c.depth_distribution)},
                                {"fail_share", map_to_json(c.fail_share)},
                                {"samples_per_split", splits},
                                {"seed", c.seed},
                                {"max_tokens", c.max_tokens},
                                {"rejection_budget", c.rejection_budget},
                                {"enumeration_node_bound", c.enumeration_node_bound},
                                {"workers", c.workers}};
}

GenConfig gen_config_from_json(const nlohmann::ordered_json& j) {
  GenConfig c;
  auto get = [&](const char* key, auto& slot) {
    if (j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
  };
  get("entity_count", c.entity_count);
  get("attribute_count", c.attribute_count);
  get("min_facts", c.min_facts);
  get("max_facts", c.max_facts);
  get("min_rules", c.min_rules);
  get("max_rules", c.max_rules);
  get("max_antecedents", c.max_antecedents);
  get("negation_enabled", c.negation_enabled);
  get("seed", c.seed);
  get("max_tokens", c.max_tokens);
  get("rejection_budget", c.rejection_budget);
  get("enumeration_node_bound", c.enumeration_node_bound);
  get("workers", c.workers);
  if (j.contains("depth_distribution")) {
    c.depth_distribution.clear();
    for (const auto& [k, v] : j.at("depth_distribution").items())
      c.depth_distribution[std::stoi(k)] = v.get<double>();
  }
  if (j.contains("fail_share")) {
    c.fail_share.clear();
    for (const auto& [k, v] : j.at("fail_share").items())
      c.fail_share[std::stoi(k)] = v.get<double>();
  }
  if (j.contains("samples_per_split")) {
    c.samples_per_split.clear();
    for (const auto& [k, v] : j.at("samples_per_split").items())
      c.samples_per_split[k] = v.get<int>();
  }
  return c;
}

namespace {

template <typename T>
std::vector<T> sample_distinct(Rng& rng, const std::vector<T>& pool, int count) {
  std::vector<T> items = pool;
  for (int i = 0; i < count; ++i)
    std::swap(items[i], items[i + rand_int(rng, 0, static_cast<int>(items.size()) - i - 1)]);
  items.resize(count);
  return items;
}

// Random theory with a bias toward attribute chains so that multi-step
// derivations actually occur at useful rates.
Theory sample_theory(const GenConfig& config, const Vocabulary& vocab, Rng& rng) {
  std::vector<std::string> entities = sample_distinct(rng, vocab.entities, config.entity_count);
  std::vector<std::string> attrs = sample_distinct(rng, vocab.attributes, config.attribute_count);

  Theory theory;
  int n_facts = rand_int(rng, config.min_facts, config.max_facts);
  std::set<std::pair<std::string, std::string>> fact_keys;
  // Base facts concentrate on the first few attributes; rules chain upward
  // from there.
  int base_attrs = std::max(2, static_cast<int>(attrs.size()) / 3);
  for (int i = 0; i < n_facts; ++i) {
    for (int tries = 0; tries < 20; ++tries) {
      std::string e = entities[rand_int(rng, 0, static_cast<int>(entities.size()) - 1)];
      std::string a = attrs[rand_int(rng, 0, base_attrs - 1)];
      if (!fact_keys.emplace(e, a).second) continue;
      bool positive = !config.negation_enabled || rand_real(rng) > 0.12;
      theory.facts.push_back(make_fact("F" + std::to_string(theory.facts.size() + 1),
                                       {e, a, positive}, vocab));
      break;
    }
  }

  int n_rules = rand_int(rng, config.min_rules, config.max_rules);
  std::set<std::pair<std::string, bool>> concluded;  // avoid duplicate heads
  for (int i = 0; i < n_rules; ++i) {
    for (int tries = 0; tries < 30; ++tries) {
      bool variable = rand_real(rng) < 0.8;
      std::string entity = variable
                               ? std::string(kVarEntity)
                               : entities[rand_int(rng, 0, static_cast<int>(entities.size()) - 1)];
      int n_ants = 1;
      if (config.max_antecedents > 1 && rand_real(rng) < 0.3)
        n_ants = rand_int(rng, 2, config.max_antecedents);

      std::vector<Atom> ants;
      std::set<std::string> used_attrs;
      for (int k = 0; k < n_ants; ++k) {
        // Chain bias: antecedents mostly draw from lower attribute indices.
        int hi = static_cast<int>(attrs.size()) - 1;
        int idx = std::min(rand_int(rng, 0, hi), rand_int(rng, 0, hi));
        if (!used_attrs.insert(attrs[idx]).second) {
          --k;
          continue;
        }
        bool positive = !config.negation_enabled || rand_real(rng) > 0.22;
        ants.push_back({entity, attrs[idx], positive});
      }
      int max_ant_idx = 0;
      for (const auto& a : ants)
        max_ant_idx = std::max(max_ant_idx,
                               static_cast<int>(std::find(attrs.begin(), attrs.end(), a.attribute) -
                                                attrs.begin()));
      // Consequent prefers a later attribute than any antecedent.
      int lo = std::min(max_ant_idx + 1, static_cast<int>(attrs.size()) - 1);
      int cidx = rand_real(rng) < 0.85
                     ? rand_int(rng, lo, static_cast<int>(attrs.size()) - 1)
                     : rand_int(rng, 0, static_cast<int>(attrs.size()) - 1);
      bool c_positive = !config.negation_enabled || rand_real(rng) > 0.12;
      Atom consequent{entity, attrs[cidx], c_positive};
      if (std::any_of(ants.begin(), ants.end(),
                      [&](const Atom& a) { return a.attribute == consequent.attribute; }))
        continue;
      if (!concluded.emplace(consequent.attribute, c_positive).second &&
          rand_real(rng) < 0.5)
        continue;  // keep some head diversity
      theory.rules.push_back(make_rule("R" + std::to_string(theory.rules.size() + 1),
                                       std::move(ants), consequent, vocab));
      break;
    }
  }
  return theory;
}

struct Candidate {
  Atom atom;
  bool answer;
  Strategy strategy;
  int depth;
};

std::vector<Candidate> scan_candidates(const Theory& theory,
                                       const DerivationTable& table,
                                       const Vocabulary& vocab) {
  std::vector<Candidate> out;
  std::set<std::string> attrs;
  for (const auto& f : theory.facts) attrs.insert(f.atom.attribute);
  for (const auto& r : theory.rules) {
    for (const auto& a : r.antecedents) attrs.insert(a.attribute);
    attrs.insert(r.consequent.attribute);
  }
  for (const auto& e : theory.entities()) {
    for (const auto& a : attrs) {
      for (bool pol : {true, false}) {
        Atom atom{e, a, pol};
        Candidate c{atom, false, Strategy::kProof, 0};
        if (table.contains(atom)) {
          c.answer = true;
          c.depth = table.depth_of(atom);
        } else if (table.contains(atom.negated())) {
          c.answer = false;
          c.depth = table.depth_of(atom.negated());
        } else {
          c.strategy = Strategy::kFailProof;
          c.answer = !pol;
          Question q = make_question(atom, vocab);
          c.depth = proof_depth(fail_chain(theory, q, table));
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace

Sample generate_sample(const GenConfig& config, const std::string& split,
                       int index, const Bucket& bucket) {
  const Vocabulary vocab = Vocabulary::defaults();
  const TokenVocab token_vocab = TokenVocab::from(vocab);
  Rng rng = make_rng(config.seed, "sample", hash_tag(split), index);

  for (int attempt = 0; attempt < config.rejection_budget; ++attempt) {
    Theory theory = sample_theory(config, vocab, rng);
    DerivationTable table;
    try {
      table = forward_chain(theory);
    } catch (const StratificationError&) {
      continue;
    } catch (const ConsistencyError&) {
      continue;
    }

    std::vector<Candidate> candidates = scan_candidates(theory, table, vocab);
    std::vector<const Candidate*> hits;
    for (const auto& c : candidates)
      if (c.depth == bucket.depth && c.strategy == bucket.strategy &&
          c.answer == bucket.answer)
        hits.push_back(&c);
    if (hits.empty()) continue;
    const Candidate& pick = *hits[rand_int(rng, 0, static_cast<int>(hits.size()) - 1)];

    Sample sample;
    sample.id = split + "-" + std::to_string(index);
    sample.theory = theory;
    sample.question = make_question(pick.atom, vocab);
    sample.answer = pick.answer;
    sample.strategy = pick.strategy;
    sample.depth = pick.depth;
    if (pick.strategy == Strategy::kProof) {
      EnumerationResult en =
          enumerate_proofs_ex(theory, sample.question, config.enumeration_node_bound);
      if (!en.minimal.empty()) {
        sample.gold_proofs = en.minimal;
      } else {
        sample.gold_proofs = {extract_gold_proof(theory, sample.question).first};
      }
    } else {
      sample.gold_proofs = {fail_chain(theory, sample.question, table)};
    }

    try {
      LayoutConfig layout_config;
      layout_config.max_tokens = config.max_tokens;
      build_input_layout(sample.question, theory, token_vocab, layout_config);
    } catch (const InputTooLongError&) {
      continue;
    }

    bool all_verified = true;
    for (const auto& g : sample.gold_proofs)
      all_verified &= verify_proof(theory, sample.question, g, sample.strategy);
    if (!all_verified) continue;  // should not happen; rejected defensively
    return sample;
  }
  std::ostringstream what;
  what << "rejection budget exhausted for bucket (depth=" << bucket.depth
       << ", strategy=" << to_string(bucket.strategy)
       << ", answer=" << (bucket.answer ? "true" : "false") << ") at " << split
       << "[" << index << "]";
  throw GenerationError(what.str());
}

std::vector<Bucket> plan_buckets(const GenConfig& config, const std::string& split) {
  int total = config.samples_per_split.at(split);
  // Depth counts by largest remainder.
  std::vector<std::pair<int, double>> fracs(config.depth_distribution.begin(),
                                            config.depth_distribution.end());
  std::vector<int> depth_counts(fracs.size(), 0);
  std::vector<std::pair<double, size_t>> remainders;
  int assigned = 0;
  for (size_t i = 0; i < fracs.size(); ++i) {
    double exact = fracs[i].second * total;
    depth_counts[i] = static_cast<int>(exact);
    assigned += depth_counts[i];
    remainders.emplace_back(-(exact - depth_counts[i]), i);
  }
  std::sort(remainders.begin(), remainders.end());
  for (int i = 0; i < total - assigned; ++i)
    ++depth_counts[remainders[i % remainders.size()].second];

  std::vector<Bucket> buckets;
  for (size_t i = 0; i < fracs.size(); ++i) {
    int depth = fracs[i].first;
    int n = depth_counts[i];
    double share = 0.0;
    auto it = config.fail_share.find(depth);
    if (it != config.fail_share.end()) share = it->second;
    int n_fail = static_cast<int>(std::lround(n * share));
    int n_proof = n - n_fail;
    for (int k = 0; k < n_proof; ++k)
      buckets.push_back({depth, Strategy::kProof, k % 2 == 0});
    for (int k = 0; k < n_fail; ++k)
      buckets.push_back({depth, Strategy::kFailProof, k % 2 == 0});
  }
  // Spread buckets through the file; per-sample rng streams keep this
  // deterministic regardless of worker count.
  Rng rng = make_rng(config.seed, "bucket-order", hash_tag(split));
  std::shuffle(buckets.begin(), buckets.end(), rng);
  return buckets;
}

nlohmann::ordered_json Manifest::to_json() const {
  nlohmann::ordered_json files_json = nlohmann::ordered_json::object();
  for (const auto& [split, path] : files) files_json[split] = path.string();
  nlohmann::ordered_json counts_json = nlohmann::ordered_json::object();
  for (const auto& [split, n] : counts) counts_json[split] = n;
  return nlohmann::ordered_json{{"config", gen_config_to_json(config)},
                                {"files", files_json},
                                {"counts", counts_json}};
}

Manifest generate_dataset(const GenConfig& config,
                          const std::filesystem::path& out_dir) {
  {
    std::string err = config.validate();
    if (!err.empty()) throw GenerationError("invalid generator config: " + err);
  }
  std::filesystem::create_directories(out_dir);

  Manifest manifest;
  manifest.config = config;
  for (const auto& [split, total] : config.samples_per_split) {
    std::vector<Bucket> buckets = plan_buckets(config, split);
    std::vector<Sample> samples(buckets.size());
    std::vector<std::string> errors(config.workers);

    int n = static_cast<int>(buckets.size());
    int workers = std::min(config.workers, std::max(1, n));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (int i = w; i < n; i += workers)
            samples[i] = generate_sample(config, split, i, buckets[i]);
        } catch (const std::exception& e) {
          errors[w] = e.what();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (!err.empty()) throw GenerationError(err);

    std::filesystem::path file = out_dir / (split + ".jsonl");
    write_samples(file, samples);
    manifest.files[split] = file;
    manifest.counts[split] = n;
    (void)total;
  }

  std::ofstream mf(out_dir / "manifest.json", std::ios::trunc);
  if (!mf) throw GenerationError("cannot write manifest");
  mf << manifest.to_json().dump(2) << '\n';
  return manifest;
}

std::vector<DepthStats> dataset_stats(const std::vector<Sample>& samples) {
  std::map<int, DepthStats> rows;
  for (const auto& s : samples) {
    DepthStats& row = rows[s.depth];
    row.depth = s.depth;
    row.count += 1;
    if (s.strategy == Strategy::kProof)
      row.proof_count += 1;
    else
      row.fail_count += 1;
    if (!s.gold_proofs.empty())
      row.avg_proof_nodes += static_cast<double>(s.gold_proofs.front().nodes.size());
  }
  std::vector<DepthStats> out;
  for (auto& [depth, row] : rows) {
    (void)depth;
    if (row.count > 0) row.avg_proof_nodes /= row.count;
    out.push_back(row);
  }
  return out;
}

std::vector<DepthStats> dataset_stats(const std::filesystem::path& file) {
  return dataset_stats(read_samples(file, Vocabulary::defaults()));
}

std::string format_stats(const std::vector<DepthStats>& rows) {
  std::ostringstream os;
  os << "depth   count   proof    fail   avg-nodes\n";
  DepthStats all;
  double node_sum = 0;
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%5d %7d %7d %7d %11.2f\n", r.depth, r.count,
                  r.proof_count, r.fail_count, r.avg_proof_nodes);
    os << buf;
    all.count += r.count;
    all.proof_count += r.proof_count;
    all.fail_count += r.fail_count;
    node_sum += r.avg_proof_nodes * r.count;
  }
  std::snprintf(buf, sizeof(buf), "  all %7d %7d %7d %11.2f\n", all.count,
                all.proof_count, all.fail_count,
                all.count ? node_sum / all.count : 0.0);
  os << buf;
  return os.str();
}

}  // namespace proofgen
