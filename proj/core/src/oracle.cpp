#include "proofgen/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace proofgen {

namespace {

using SignedAttr = std::pair<std::string, bool>;

struct GroundRule {
  const Rule* rule;
  std::vector<Atom> antecedents;
  Atom consequent;
};

std::vector<std::string> grounding_domain(const Theory& theory,
                                          const std::vector<std::string>& extra) {
  std::vector<std::string> domain = theory.entities();
  for (const auto& e : extra)
    if (std::find(domain.begin(), domain.end(), e) == domain.end())
      domain.push_back(e);
  return domain;
}

std::vector<GroundRule> ground_rules(const Theory& theory,
                                     const std::vector<std::string>& domain) {
  std::vector<GroundRule> out;
  for (const auto& r : theory.rules) {
    if (!r.has_variable()) {
      out.push_back({&r, r.antecedents, r.consequent});
      continue;
    }
    for (const auto& e : domain) {
      GroundRule g{&r, {}, r.consequent.grounded_at(e)};
      g.antecedents.reserve(r.antecedents.size());
      for (const auto& a : r.antecedents) g.antecedents.push_back(a.grounded_at(e));
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Stratification over signed attributes. A rule contributes a positive
// dependency from every antecedent's signed attribute to the consequent's,
// and a negation dependency from the *positive* form of every negated
// antecedent (the atom NAF inspects). A cycle through a negation dependency
// has no stratified least model and is rejected.
struct Strata {
  std::map<SignedAttr, int> stratum;
  int of(const SignedAttr& s) const {
    auto it = stratum.find(s);
    return it == stratum.end() ? 0 : it->second;
  }
};

Strata stratify(const Theory& theory) {
  std::vector<SignedAttr> nodes;
  std::map<SignedAttr, int> index;
  auto intern = [&](const SignedAttr& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int i = static_cast<int>(nodes.size());
    index.emplace(s, i);
    nodes.push_back(s);
    return i;
  };
  for (const auto& f : theory.facts)
    intern({f.atom.attribute, f.atom.positive});

  struct Edge {
    int from, to;
    bool negation;
  };
  std::vector<Edge> edges;
  for (const auto& r : theory.rules) {
    int to = intern({r.consequent.attribute, r.consequent.positive});
    for (const auto& a : r.antecedents) {
      edges.push_back({intern({a.attribute, a.positive}), to, false});
      if (!a.positive)
        edges.push_back({intern({a.attribute, true}), to, true});
    }
  }

  // Kosaraju SCC.
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> adj(n), radj(n);
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    radj[e.to].push_back(e.from);
  }
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::function<void(int)> dfs1 = [&](int v) {
    seen[v] = 1;
    for (int w : adj[v])
      if (!seen[w]) dfs1(w);
    order.push_back(v);
  };
  for (int v = 0; v < n; ++v)
    if (!seen[v]) dfs1(v);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  std::function<void(int, int)> dfs2 = [&](int v, int c) {
    comp[v] = c;
    for (int w : radj[v])
      if (comp[w] < 0) dfs2(w, c);
  };
  for (int i = n - 1; i >= 0; --i)
    if (comp[order[i]] < 0) dfs2(order[i], ncomp++);

  for (const auto& e : edges)
    if (e.negation && comp[e.from] == comp[e.to])
      throw StratificationError(
          "negation cycle through attribute '" + nodes[e.from].first + "'");

  // Longest-path strata over the condensation: positive edges keep the
  // stratum, negation edges raise it.
  std::vector<int> stratum(ncomp, 0);
  bool changed = true;
  while (changed) {  // ncomp iterations at most; the condensation is a DAG
    changed = false;
    for (const auto& e : edges) {
      int need = stratum[comp[e.from]] + (e.negation ? 1 : 0);
      if (stratum[comp[e.to]] < need) {
        stratum[comp[e.to]] = need;
        changed = true;
      }
    }
  }

  Strata out;
  for (int v = 0; v < n; ++v) out.stratum[nodes[v]] = stratum[comp[v]];
  return out;
}

constexpr int kInf = 1 << 28;

}  // namespace

DerivationTable forward_chain(const Theory& theory, int max_depth,
                              const std::vector<std::string>& extra_entities) {
  {
    std::string err = theory.validate();
    if (!err.empty()) throw DataError("invalid theory: " + err);
  }
  Strata strata = stratify(theory);
  auto domain = grounding_domain(theory, extra_entities);
  auto grules = ground_rules(theory, domain);

  int max_stratum = 0;
  for (const auto& [sa, s] : strata.stratum) max_stratum = std::max(max_stratum, s);

  std::map<Atom, int> depth;  // full fixpoint, unbounded depth
  for (const auto& f : theory.facts) {
    auto it = depth.find(f.atom);
    if (it == depth.end() || it->second > 0) depth[f.atom] = 0;
  }

  auto naf_holds = [&](const Atom& neg) {
    return !depth.count(neg.negated());
  };

  for (int s = 0; s <= max_stratum; ++s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : grules) {
        if (strata.of({g.consequent.attribute, g.consequent.positive}) != s)
          continue;
        int worst = 0;
        bool ok = true;
        for (const auto& a : g.antecedents) {
          int cost = kInf;
          auto it = depth.find(a);
          if (it != depth.end()) cost = it->second;
          if (!a.positive && naf_holds(a)) cost = std::min(cost, 0);
          if (cost >= kInf) {
            ok = false;
            break;
          }
          worst = std::max(worst, cost);
        }
        if (!ok) continue;
        int candidate = worst + 1;
        auto it = depth.find(g.consequent);
        if (it == depth.end() || it->second > candidate) {
          depth[g.consequent] = candidate;
          changed = true;
        }
      }
    }
  }

  for (const auto& [atom, d] : depth) {
    (void)d;
    if (atom.positive && depth.count(atom.negated()))
      throw ConsistencyError("both polarities derivable for " + atom.entity +
                             " / " + atom.attribute);
  }

  DerivationTable table;
  for (const auto& [atom, d] : depth)
    if (d <= max_depth) table.min_depth[atom] = d;
  for (const auto& f : theory.facts)
    if (table.min_depth.count(f.atom)) table.fact_supports[f.atom].push_back(f.id);
  for (const auto& g : grules) {
    if (!table.min_depth.count(g.consequent)) continue;
    bool ok = true;
    for (const auto& a : g.antecedents) {
      bool satisfiable = depth.count(a) || (!a.positive && naf_holds(a));
      if (!satisfiable) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Derivation der{g.rule->id, g.antecedents};
    auto& list = table.rule_supports[g.consequent];
    if (std::find(list.begin(), list.end(), der) == list.end())
      list.push_back(std::move(der));
  }
  return table;
}

std::pair<bool, Strategy> answer_and_strategy(const Theory& theory,
                                              const Question& question) {
  DerivationTable table = forward_chain(theory, 64, {question.atom.entity});
  if (table.contains(question.atom)) return {true, Strategy::kProof};
  if (table.contains(question.atom.negated())) return {false, Strategy::kProof};
  return {!question.atom.positive, Strategy::kFailProof};
}

namespace {

bool consequent_matches(const Rule& rule, const Atom& goal) {
  if (rule.consequent.is_variable())
    return rule.consequent.attribute == goal.attribute &&
           rule.consequent.positive == goal.positive;
  return rule.consequent == goal;
}

bool fact_satisfies(const Theory& theory, const Atom& goal) {
  return std::any_of(theory.facts.begin(), theory.facts.end(),
                     [&](const Fact& f) { return f.atom == goal; });
}

bool fact_or_naf_satisfies(const Theory& theory, const DerivationTable& table,
                           const Atom& goal) {
  if (fact_satisfies(theory, goal)) return true;
  return !goal.positive && table.naf_eligible(goal);
}

std::string canonical_key(const ProofGraph& g) {
  std::ostringstream os;
  for (const auto& n : g.nodes) os << n.id << ',';
  os << '|';
  for (const auto& e : g.edges) os << e.first << '>' << e.second << ';';
  return os.str();
}

}  // namespace

ProofGraph fail_chain(const Theory& theory, const Question& question) {
  return fail_chain(theory, question,
                    forward_chain(theory, 64, {question.atom.entity}));
}

ProofGraph fail_chain(const Theory& theory, const Question& question,
                      const DerivationTable& table) {
  if (table.contains(question.atom) || table.contains(question.atom.negated()))
    throw StrategyError("fail_chain called on a PROOF question");

  std::vector<const Rule*> chain;
  std::set<Atom> visited;
  std::set<std::string> used_rules;
  Atom goal = question.atom;
  while (visited.insert(goal).second) {
    const Rule* matched = nullptr;
    for (const auto& r : theory.rules) {
      if (consequent_matches(r, goal) && !used_rules.count(r.id)) {
        matched = &r;
        break;
      }
    }
    if (!matched) break;
    chain.push_back(matched);
    used_rules.insert(matched->id);

    const Atom* next = nullptr;
    for (const auto& a : matched->antecedents) {
      Atom grounded = a.grounded_at(goal.entity);
      if (!fact_or_naf_satisfies(theory, table, grounded)) {
        next = &a;
        goal = grounded;
        break;
      }
    }
    if (!next) break;
  }

  std::vector<NodeRef> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i < chain.size(); ++i) {
    nodes.push_back(NodeRef::rule(chain[i]->id));
    if (i + 1 < chain.size())
      edges.emplace_back(chain[i + 1]->id, chain[i]->id);  // deeper -> shallower
  }
  return ProofGraph::make(std::move(nodes), std::move(edges));
}

namespace {

// Verification context for PROOF graphs: assigns each node the grounded atom
// it must prove, walking top-down from the sink, with backtracking over the
// antecedent-to-support matching.
struct ProofChecker {
  const Theory& theory;
  const DerivationTable& table;
  const ProofGraph& proof;
  std::map<std::string, std::vector<std::string>> incoming;
  std::map<std::string, Atom> required;

  ProofChecker(const Theory& t, const DerivationTable& tab, const ProofGraph& p)
      : theory(t), table(tab), proof(p) {
    for (const auto& e : p.edges) incoming[e.second].push_back(e.first);
  }

  bool support_feasible(const std::string& id, const Atom& goal) const {
    NodeRef ref = NodeRef::from_id(id);
    if (ref.kind == NodeKind::kFact) {
      const Fact* f = theory.find_fact(id);
      return f && f->atom == goal;
    }
    if (ref.kind == NodeKind::kRule) {
      const Rule* r = theory.find_rule(id);
      return r && consequent_matches(*r, goal);
    }
    return false;
  }

  bool assign(const std::string& id, const Atom& goal) {
    auto it = required.find(id);
    if (it != required.end()) return it->second == goal;
    NodeRef ref = NodeRef::from_id(id);
    if (ref.kind == NodeKind::kFact) {
      const Fact* f = theory.find_fact(id);
      if (!f || f->atom != goal) return false;
      required.emplace(id, goal);
      if (!incoming[id].empty()) return false;  // facts take no support
      return true;
    }
    if (ref.kind != NodeKind::kRule) return false;
    const Rule* r = theory.find_rule(id);
    if (!r || !consequent_matches(*r, goal)) return false;
    required.emplace(id, goal);

    std::vector<Atom> antecedents;
    for (const auto& a : r->antecedents)
      antecedents.push_back(a.grounded_at(goal.entity));
    const auto& supports = incoming[id];
    std::vector<char> used(supports.size(), 0);
    bool naf_used = false;
    bool has_naf = std::find(supports.begin(), supports.end(), kNafId) !=
                   supports.end();

    std::function<bool(size_t)> match = [&](size_t k) -> bool {
      if (k == antecedents.size()) {
        // No junk edges: every support must serve an antecedent.
        for (size_t i = 0; i < supports.size(); ++i) {
          if (supports[i] == kNafId) {
            if (!naf_used) return false;
          } else if (!used[i]) {
            return false;
          }
        }
        return true;
      }
      const Atom& a = antecedents[k];
      // NAF first keeps the search cheap; it is shareable, facts are not.
      if (has_naf && !a.positive && table.naf_eligible(a)) {
        bool prev = naf_used;
        naf_used = true;
        if (match(k + 1)) return true;
        naf_used = prev;
      }
      for (size_t i = 0; i < supports.size(); ++i) {
        if (used[i] || supports[i] == kNafId) continue;
        if (!support_feasible(supports[i], a)) continue;
        used[i] = 1;
        auto snapshot = required;
        if (assign(supports[i], a) && match(k + 1)) return true;
        required = std::move(snapshot);
        used[i] = 0;
      }
      return false;
    };
    return match(0);
  }
};

bool verify_proof_graph(const Theory& theory, const DerivationTable& table,
                        const Question& question, const ProofGraph& proof) {
  if (proof.empty()) return false;
  auto sinks = proof.sink_ids();
  if (sinks.size() != 1) return false;
  for (const Atom& target :
       {question.atom, question.atom.negated()}) {
    ProofChecker checker(theory, table, proof);
    if (checker.assign(sinks[0], target)) {
      // Every node must have been reached from the sink.
      if (checker.required.size() + (proof.has_node(kNafId) ? 1 : 0) ==
          proof.nodes.size())
        return true;
    }
  }
  return false;
}

bool verify_fail_chain(const Theory& theory, const DerivationTable& table,
                       const Question& question, const ProofGraph& proof) {
  if (proof.empty()) return true;
  for (const auto& n : proof.nodes)
    if (n.kind != NodeKind::kRule) return false;
  if (proof.edges.size() + 1 != proof.nodes.size()) return false;
  auto sinks = proof.sink_ids();
  if (sinks.size() != 1) return false;

  // Walk sink -> source; each node has at most one incoming edge.
  std::map<std::string, std::string> pred;
  for (const auto& e : proof.edges) {
    if (pred.count(e.second)) return false;
    pred[e.second] = e.first;
  }
  std::vector<std::string> order{sinks[0]};
  while (pred.count(order.back())) order.push_back(pred[order.back()]);
  if (order.size() != proof.nodes.size()) return false;

  Atom goal = question.atom;
  for (size_t i = 0; i < order.size(); ++i) {
    const Rule* r = theory.find_rule(order[i]);
    if (!r || !consequent_matches(*r, goal)) return false;
    if (i + 1 == order.size()) break;
    const Atom* next = nullptr;
    for (const auto& a : r->antecedents) {
      Atom grounded = a.grounded_at(goal.entity);
      if (!fact_or_naf_satisfies(theory, table, grounded)) {
        next = &a;
        goal = grounded;
        break;
      }
    }
    if (!next) return false;  // chain continues past a fully satisfied rule
  }
  return true;
}

}  // namespace

bool verify_proof(const Theory& theory, const Question& question,
                  const ProofGraph& proof, Strategy strategy) {
  try {
    if (!proof.validate().empty()) return false;
    for (const auto& n : proof.nodes) {
      if (n.kind == NodeKind::kFact && !theory.find_fact(n.id)) return false;
      if (n.kind == NodeKind::kRule && !theory.find_rule(n.id)) return false;
    }
    DerivationTable table = forward_chain(theory, 64, {question.atom.entity});
    if (strategy == Strategy::kFailProof)
      return verify_fail_chain(theory, table, question, proof);
    return verify_proof_graph(theory, table, question, proof);
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

// A partially assembled derivation DAG used during enumeration.
struct SubProof {
  std::map<std::string, Atom> atom_of;  // node id -> grounded atom it proves
  std::set<std::pair<std::string, std::string>> edges;
  std::string root;
  bool has_naf = false;

  size_t node_count() const { return atom_of.size() + (has_naf ? 1 : 0); }
};

struct Enumerator {
  const Theory& theory;
  const DerivationTable& table;
  int node_bound;
  int candidate_cap;
  int produced = 0;
  bool overflowed = false;
  std::map<std::pair<Atom, int>, std::vector<SubProof>> memo;

  // Merges b into a; returns false on an instantiation conflict.
  static bool merge(SubProof& a, const SubProof& b) {
    for (const auto& [id, atom] : b.atom_of) {
      auto it = a.atom_of.find(id);
      if (it != a.atom_of.end()) {
        if (it->second != atom) return false;
      } else {
        a.atom_of.emplace(id, atom);
      }
    }
    a.edges.insert(b.edges.begin(), b.edges.end());
    a.has_naf |= b.has_naf;
    return true;
  }

  std::vector<SubProof> expand(const Atom& goal, int budget) {
    if (budget <= 0) return {};
    auto key = std::make_pair(goal, budget);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    memo[key] = {};  // settled below; budget strictly decreases, no cycles

    std::vector<SubProof> out;
    for (const auto& f : theory.facts) {
      if (f.atom == goal) {
        SubProof sp;
        sp.atom_of.emplace(f.id, goal);
        sp.root = f.id;
        out.push_back(std::move(sp));
      }
    }
    auto ders = table.rule_supports.find(goal);
    if (ders != table.rule_supports.end()) {
      for (const auto& der : ders->second) {
        std::vector<SubProof> partial;
        SubProof base;
        base.atom_of.emplace(der.rule_id, goal);
        base.root = der.rule_id;
        partial.push_back(std::move(base));

        for (const auto& ant : der.antecedents) {
          std::vector<SubProof> next;
          std::vector<SubProof> choices = expand(ant, budget - 1);
          bool naf_ok = !ant.positive && table.naf_eligible(ant);
          for (const auto& p : partial) {
            if (naf_ok) {
              SubProof q = p;
              q.has_naf = true;
              q.edges.emplace(kNafId, der.rule_id);
              if (q.node_count() <= static_cast<size_t>(node_bound))
                next.push_back(std::move(q));
            }
            for (const auto& c : choices) {
              if (c.atom_of.count(der.rule_id)) continue;  // would self-support
              SubProof q = p;
              if (!merge(q, c)) continue;
              q.edges.emplace(c.root, der.rule_id);
              if (q.node_count() <= static_cast<size_t>(node_bound))
                next.push_back(std::move(q));
            }
            if (static_cast<int>(next.size()) + produced > candidate_cap) {
              overflowed = true;
              break;
            }
          }
          partial = std::move(next);
          if (overflowed) break;
        }
        for (auto& p : partial) out.push_back(std::move(p));
        if (overflowed) break;
      }
    }
    produced += static_cast<int>(out.size());
    if (produced > candidate_cap) overflowed = true;
    memo[key] = out;
    return out;
  }
};

ProofGraph to_proof_graph(const SubProof& sp) {
  std::vector<NodeRef> nodes;
  for (const auto& [id, atom] : sp.atom_of) {
    (void)atom;
    nodes.push_back(NodeRef::from_id(id));
  }
  if (sp.has_naf) nodes.push_back(NodeRef::naf());
  std::vector<std::pair<std::string, std::string>> edges(sp.edges.begin(),
                                                         sp.edges.end());
  return ProofGraph::make(std::move(nodes), std::move(edges));
}

}  // namespace

EnumerationResult enumerate_proofs_ex(const Theory& theory,
                                      const Question& question, int node_bound,
                                      int candidate_cap) {
  auto [answer, strategy] = answer_and_strategy(theory, question);
  (void)answer;
  if (strategy != Strategy::kProof)
    throw StrategyError("enumerate_proofs called on a FAIL_PROOF question");
  DerivationTable table = forward_chain(theory, 64, {question.atom.entity});
  Atom target = table.contains(question.atom) ? question.atom
                                              : question.atom.negated();

  Enumerator en{theory, table, node_bound, candidate_cap};
  std::vector<SubProof> raw = en.expand(target, node_bound);

  EnumerationResult result;
  result.overflowed = en.overflowed;
  std::set<std::string> seen;
  for (const auto& sp : raw) {
    ProofGraph g = to_proof_graph(sp);
    if (!seen.insert(canonical_key(g)).second) continue;
    if (!verify_proof(theory, question, g, Strategy::kProof)) continue;
    result.proofs.push_back(std::move(g));
  }
  std::sort(result.proofs.begin(), result.proofs.end(),
            [](const ProofGraph& a, const ProofGraph& b) {
              int da = proof_depth(a), db = proof_depth(b);
              if (da != db) return da < db;
              if (a.nodes.size() != b.nodes.size())
                return a.nodes.size() < b.nodes.size();
              return canonical_key(a) < canonical_key(b);
            });
  if (!result.proofs.empty()) {
    int best = proof_depth(result.proofs.front());
    for (const auto& g : result.proofs)
      if (proof_depth(g) == best) result.minimal.push_back(g);
  }
  return result;
}

std::vector<ProofGraph> enumerate_proofs(const Theory& theory,
                                         const Question& question,
                                         int node_bound) {
  return enumerate_proofs_ex(theory, question, node_bound).proofs;
}

namespace {

// Fallback assembly for proofs too large to enumerate: per-atom cheapest
// derivation, supports shared through memoization.
struct GreedyBuilder {
  const Theory& theory;
  const DerivationTable& table;
  std::map<Atom, std::string> built;  // atom -> root node id
  std::map<std::string, Atom> atom_of;
  std::set<std::pair<std::string, std::string>> edges;
  bool has_naf = false;

  std::string build(const Atom& goal) {
    auto it = built.find(goal);
    if (it != built.end()) return it->second;

    auto facts = table.fact_supports.find(goal);
    if (facts != table.fact_supports.end() && !facts->second.empty()) {
      std::string id = *std::min_element(facts->second.begin(), facts->second.end());
      built[goal] = id;
      atom_of.emplace(id, goal);
      return id;
    }

    const Derivation* best = nullptr;
    int best_depth = kInf;
    auto ders = table.rule_supports.find(goal);
    if (ders == table.rule_supports.end())
      throw StrategyError("no derivation for a fixpoint atom");
    for (const auto& der : ders->second) {
      int worst = 0;
      bool ok = true;
      for (const auto& a : der.antecedents) {
        int cost = kInf;
        if (table.contains(a)) cost = table.depth_of(a);
        if (!a.positive && table.naf_eligible(a)) cost = std::min(cost, 0);
        if (cost >= kInf) {
          ok = false;
          break;
        }
        worst = std::max(worst, cost);
      }
      if (!ok) continue;
      int d = worst + 1;
      if (d < best_depth ||
          (d == best_depth && best && der.rule_id < best->rule_id)) {
        best_depth = d;
        best = &der;
      }
    }
    if (!best) throw StrategyError("no usable derivation for a fixpoint atom");

    built[goal] = best->rule_id;
    atom_of.emplace(best->rule_id, goal);
    for (const auto& a : best->antecedents) {
      bool have_fact = table.fact_supports.count(a) &&
                       !table.fact_supports.at(a).empty();
      if (have_fact) {
        edges.emplace(build(a), best->rule_id);
      } else if (!a.positive && table.naf_eligible(a)) {
        has_naf = true;
        edges.emplace(kNafId, best->rule_id);
      } else {
        edges.emplace(build(a), best->rule_id);
      }
    }
    return best->rule_id;
  }
};

}  // namespace

std::pair<ProofGraph, int> extract_gold_proof(const Theory& theory,
                                              const Question& question) {
  auto [answer, strategy] = answer_and_strategy(theory, question);
  (void)answer;
  if (strategy != Strategy::kProof)
    throw StrategyError("extract_gold_proof called on a FAIL_PROOF question");

  EnumerationResult en = enumerate_proofs_ex(theory, question, 12);
  if (!en.minimal.empty()) {
    const ProofGraph& best = en.minimal.front();
    return {best, proof_depth(best)};
  }
  // Enumeration bound exceeded: assemble the cheapest derivation directly.
  DerivationTable table = forward_chain(theory, 64, {question.atom.entity});
  Atom target = table.contains(question.atom) ? question.atom
                                              : question.atom.negated();
  GreedyBuilder builder{theory, table};
  builder.build(target);
  std::vector<NodeRef> nodes;
  for (const auto& [id, atom] : builder.atom_of) {
    (void)atom;
    nodes.push_back(NodeRef::from_id(id));
  }
  if (builder.has_naf) nodes.push_back(NodeRef::naf());
  std::vector<std::pair<std::string, std::string>> edges(builder.edges.begin(),
                                                         builder.edges.end());
  ProofGraph g = ProofGraph::make(std::move(nodes), std::move(edges));
  return {g, proof_depth(g)};
}

}  // namespace proofgen
