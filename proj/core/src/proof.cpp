#include "proofgen/proof.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace proofgen {

NodeRef NodeRef::from_id(const std::string& id) {
  if (id == kNafId) return naf();
  if (id == kQuestionId) return question();
  if (id == kEndId) return end();
  if (!id.empty() && id[0] == 'F') return fact(id);
  if (!id.empty() && id[0] == 'R') return rule(id);
  throw DataError("unrecognized node identifier: " + id);
}

ProofGraph ProofGraph::make(std::vector<NodeRef> nodes,
                            std::vector<std::pair<std::string, std::string>> edges) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return ProofGraph{std::move(nodes), std::move(edges)};
}

bool ProofGraph::has_node(const std::string& id) const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [&](const NodeRef& n) { return n.id == id; });
}

bool ProofGraph::has_edge(const std::string& from, const std::string& to) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

std::vector<std::string> ProofGraph::sink_ids() const {
  std::vector<std::string> out;
  for (const auto& n : nodes) {
    bool outgoing = std::any_of(edges.begin(), edges.end(),
                                [&](const auto& e) { return e.first == n.id; });
    if (!outgoing) out.push_back(n.id);
  }
  return out;
}

std::vector<std::string> ProofGraph::source_ids() const {
  std::vector<std::string> out;
  for (const auto& n : nodes) {
    bool incoming = std::any_of(edges.begin(), edges.end(),
                                [&](const auto& e) { return e.second == n.id; });
    if (!incoming) out.push_back(n.id);
  }
  return out;
}

bool ProofGraph::is_acyclic() const {
  std::map<std::string, int> indeg;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& n : nodes) indeg[n.id] = 0;
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    ++indeg[e.second];
  }
  std::deque<std::string> q;
  for (const auto& [id, d] : indeg)
    if (d == 0) q.push_back(id);
  size_t seen = 0;
  while (!q.empty()) {
    std::string id = q.front();
    q.pop_front();
    ++seen;
    for (const auto& to : adj[id])
      if (--indeg[to] == 0) q.push_back(to);
  }
  return seen == nodes.size();
}

std::string ProofGraph::validate() const {
  std::set<std::string> ids;
  int naf_count = 0;
  for (const auto& n : nodes) {
    if (!ids.insert(n.id).second) return "duplicate node: " + n.id;
    switch (n.kind) {
      case NodeKind::kQuestion:
        return "question node present in final proof";
      case NodeKind::kEnd:
        return "END node present in final proof";
      case NodeKind::kNaf:
        ++naf_count;
        break;
      default:
        break;
    }
  }
  if (naf_count > 1) return "multiple NAF nodes";
  for (const auto& e : edges) {
    if (!ids.count(e.first) || !ids.count(e.second))
      return "edge endpoint not in node set: " + e.first + "->" + e.second;
    if (e.second == kNafId) return "NAF node has an incoming edge";
    if (e.first == e.second) return "self edge on " + e.first;
  }
  if (!is_acyclic()) return "proof graph has a cycle";
  if (!nodes.empty() && sink_ids().size() != 1)
    return "non-empty proof must have exactly one sink";
  return "";
}

int proof_depth(const ProofGraph& g) {
  if (g.nodes.empty()) return 0;
  // Longest path in the DAG, counting RULE nodes along it.
  std::map<std::string, NodeKind> kind;
  std::map<std::string, std::vector<std::string>> preds;
  for (const auto& n : g.nodes) kind[n.id] = n.kind;
  for (const auto& e : g.edges) preds[e.second].push_back(e.first);

  std::map<std::string, int> memo;
  // cost(n) = rule nodes on the heaviest path ending at n (inclusive).
  std::function<int(const std::string&)> cost = [&](const std::string& id) -> int {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const auto& p : preds[id]) best = std::max(best, cost(p));
    int self = kind[id] == NodeKind::kRule ? 1 : 0;
    return memo[id] = best + self;
  };
  int best = 0;
  for (const auto& n : g.nodes) best = std::max(best, cost(n.id));
  return best;
}

PartialProof::PartialProof() {
  nodes_.push_back(NodeRef::question());
  children_.emplace_back();
}

int PartialProof::find(const NodeRef& ref) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[i] == ref) return i;
  return -1;
}

bool PartialProof::has_edge(int parent, int child) const {
  return std::find(edges_.begin(), edges_.end(), std::make_pair(parent, child)) !=
         edges_.end();
}

bool PartialProof::reaches(int anc, int node) const {
  if (anc == node) return true;
  for (int c : children_[anc])
    if (reaches(c, node)) return true;
  return false;
}

int PartialProof::add_child(int parent, const NodeRef& child) {
  if (parent < 0 || parent >= size())
    throw StructuralError("parent index out of range");
  if (child.kind == NodeKind::kQuestion || child.kind == NodeKind::kEnd)
    throw StructuralError("cannot add " + child.id + " as a proof node");
  int idx = find(child);
  if (idx < 0) {
    idx = size();
    nodes_.push_back(child);
    children_.emplace_back();
  }
  if (!has_edge(parent, idx)) {
    children_[parent].push_back(idx);
    edges_.emplace_back(parent, idx);
  }
  last_added_ = idx;
  return idx;
}

std::vector<int> PartialProof::level_order() const {
  std::vector<int> order;
  std::vector<bool> seen(nodes_.size(), false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    order.push_back(i);
    for (int c : children_[i]) {
      if (!seen[c]) {
        seen[c] = true;
        q.push_back(c);
      }
    }
  }
  return order;
}

std::vector<NodeRef> level_traversal_order(const PartialProof& p) {
  if (p.size() == 0 || p.node(0).kind != NodeKind::kQuestion)
    throw StructuralError("partial proof is not rooted at Q");
  std::vector<NodeRef> out;
  for (int i : p.level_order()) out.push_back(p.node(i));
  return out;
}

ProofGraph finalize_proof(const PartialProof& p) {
  std::vector<NodeRef> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < p.size(); ++i) nodes.push_back(p.node(i));
  for (const auto& [parent, child] : p.edges()) {
    if (parent == 0) continue;  // drop Q and its incident edges
    edges.emplace_back(p.node(child).id, p.node(parent).id);  // reverse
  }
  return ProofGraph::make(std::move(nodes), std::move(edges));
}

}  // namespace proofgen
