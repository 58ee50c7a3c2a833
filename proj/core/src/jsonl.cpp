#include "proofgen/jsonl.hpp"

#include <fstream>

#include "proofgen/grammar.hpp"

namespace proofgen {

namespace {

Json atom_to_json(const Atom& a) {
  return Json{{"entity", a.entity}, {"attribute", a.attribute}, {"polarity", a.positive}};
}

Atom atom_from_json(const Json& j) {
  return Atom{j.at("entity").get<std::string>(),
              j.at("attribute").get<std::string>(), j.at("polarity").get<bool>()};
}

Json proof_to_json(const ProofGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(n.id);
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.first, e.second}));
  return Json{{"nodes", nodes}, {"edges", edges}};
}

ProofGraph proof_from_json(const Json& j) {
  std::vector<NodeRef> nodes;
  for (const auto& n : j.at("nodes")) nodes.push_back(NodeRef::from_id(n.get<std::string>()));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return ProofGraph::make(std::move(nodes), std::move(edges));
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "proof") return Strategy::kProof;
  if (s == "fail") return Strategy::kFailProof;
  throw DataError("unknown strategy: " + s);
}

}  // namespace

Json sample_to_json(const Sample& sample) {
  Json context = Json::array();
  for (const auto& f : sample.theory.facts)
    context.push_back(Json{{"id", f.id},
                           {"type", "fact"},
                           {"text", f.text},
                           {"logic", atom_to_json(f.atom)}});
  for (const auto& r : sample.theory.rules) {
    Json ants = Json::array();
    for (const auto& a : r.antecedents) ants.push_back(atom_to_json(a));
    context.push_back(Json{{"id", r.id},
                           {"type", "rule"},
                           {"text", r.text},
                           {"logic", Json{{"antecedents", ants},
                                          {"consequent", atom_to_json(r.consequent)}}}});
  }
  Json proofs = Json::array();
  for (const auto& g : sample.gold_proofs) proofs.push_back(proof_to_json(g));
  return Json{{"id", sample.id},
              {"context", context},
              {"question", Json{{"text", sample.question.text},
                                {"entity", sample.question.atom.entity},
                                {"attribute", sample.question.atom.attribute},
                                {"polarity", sample.question.atom.positive}}},
              {"answer", sample.answer},
              {"strategy", to_string(sample.strategy)},
              {"depth", sample.depth},
              {"proofs", proofs}};
}

Sample sample_from_json(const Json& j, const Vocabulary& vocab) {
  Sample s;
  s.id = j.at("id").get<std::string>();
  for (const auto& c : j.at("context")) {
    std::string type = c.at("type").get<std::string>();
    std::string id = c.at("id").get<std::string>();
    std::string text = c.at("text").get<std::string>();
    const Json& logic = c.at("logic");
    if (type == "fact") {
      s.theory.facts.push_back(Fact{id, atom_from_json(logic), text});
    } else if (type == "rule") {
      Rule r{id, {}, atom_from_json(logic.at("consequent")), text};
      for (const auto& a : logic.at("antecedents"))
        r.antecedents.push_back(atom_from_json(a));
      s.theory.rules.push_back(std::move(r));
    } else {
      throw DataError("unknown context item type: " + type);
    }
  }
  const Json& q = j.at("question");
  Atom qa{q.at("entity").get<std::string>(), q.at("attribute").get<std::string>(),
          q.at("polarity").get<bool>()};
  s.question = Question{qa, q.at("text").get<std::string>()};
  s.answer = j.at("answer").get<bool>();
  s.strategy = strategy_from_string(j.at("strategy").get<std::string>());
  s.depth = j.at("depth").get<int>();
  for (const auto& p : j.at("proofs")) s.gold_proofs.push_back(proof_from_json(p));
  std::string err = s.theory.validate();
  if (!err.empty()) throw DataError("sample " + s.id + ": " + err);
  (void)vocab;
  return s;
}

Json prediction_to_json(const Prediction& p) {
  Json steps = Json::array();
  for (const auto& st : p.steps)
    steps.push_back(Json{{"parent", st.parent},
                         {"child", st.child},
                         {"p_parent", st.p_parent},
                         {"p_child", st.p_child}});
  return Json{{"id", p.id},
              {"answer", p.answer},
              {"strategy", to_string(p.strategy)},
              {"proof", proof_to_json(p.proof)},
              {"truncated", p.truncated},
              {"steps", steps}};
}

Prediction prediction_from_json(const Json& j) {
  Prediction p;
  p.id = j.at("id").get<std::string>();
  p.answer = j.at("answer").get<bool>();
  p.strategy = strategy_from_string(j.at("strategy").get<std::string>());
  p.proof = proof_from_json(j.at("proof"));
  p.truncated = j.at("truncated").get<bool>();
  if (j.contains("steps")) {
    for (const auto& st : j.at("steps"))
      p.steps.push_back(StepLog{st.at("parent").get<std::string>(),
                                st.at("child").get<std::string>(),
                                st.at("p_parent").get<double>(),
                                st.at("p_child").get<double>()});
  }
  return p;
}

namespace {

template <typename T, typename FromJson>
std::vector<T> read_jsonl(const std::filesystem::path& path, FromJson from) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<T> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(from(Json::parse(line)));
    } catch (const std::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " +
                      e.what());
    }
  }
  return out;
}

template <typename T, typename ToJson>
void write_jsonl(const std::filesystem::path& path, const std::vector<T>& items,
                 ToJson to) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  for (const auto& item : items) out << to(item).dump() << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

}  // namespace

std::vector<Sample> read_samples(const std::filesystem::path& path,
                                 const Vocabulary& vocab) {
  return read_jsonl<Sample>(
      path, [&](const Json& j) { return sample_from_json(j, vocab); });
}

void write_samples(const std::filesystem::path& path,
                   const std::vector<Sample>& samples) {
  write_jsonl(path, samples, [](const Sample& s) { return sample_to_json(s); });
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  return read_jsonl<Prediction>(
      path, [](const Json& j) { return prediction_from_json(j); });
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<Prediction>& predictions) {
  write_jsonl(path, predictions,
              [](const Prediction& p) { return prediction_to_json(p); });
}

}  // namespace proofgen
