#pragma once

#include <string>
#include <utility>
#include <vector>

#include "proofgen/theory.hpp"

namespace proofgen {

enum class NodeKind { kFact, kRule, kNaf, kQuestion, kEnd };

inline constexpr const char* kNafId = "NAF";
inline constexpr const char* kQuestionId = "Q";
inline constexpr const char* kEndId = "END";

struct NodeRef {
  NodeKind kind = NodeKind::kFact;
  std::string id;

  static NodeRef fact(std::string id) { return {NodeKind::kFact, std::move(id)}; }
  static NodeRef rule(std::string id) { return {NodeKind::kRule, std::move(id)}; }
  static NodeRef naf() { return {NodeKind::kNaf, kNafId}; }
  static NodeRef question() { return {NodeKind::kQuestion, kQuestionId}; }
  static NodeRef end() { return {NodeKind::kEnd, kEndId}; }

  // Builds a ref from a bare identifier (F3, R1, NAF, Q, END).
  static NodeRef from_id(const std::string& id);

  auto operator<=>(const NodeRef&) const = default;
};

// A proof in its final orientation: edges run from supporting node to the
// node they support. Nodes and edges are kept sorted and unique so that two
// graphs compare equal exactly when their node and edge sets match.
struct ProofGraph {
  std::vector<NodeRef> nodes;                              // sorted, unique
  std::vector<std::pair<std::string, std::string>> edges;  // sorted, unique

  static ProofGraph make(std::vector<NodeRef> nodes,
                         std::vector<std::pair<std::string, std::string>> edges);

  bool empty() const { return nodes.empty(); }
  bool has_node(const std::string& id) const;
  bool has_edge(const std::string& from, const std::string& to) const;
  std::vector<std::string> sink_ids() const;    // nodes with no outgoing edge
  std::vector<std::string> source_ids() const;  // nodes with no incoming edge
  bool is_acyclic() const;

  // Structural invariants of a final-form proof (acyclicity, single sink,
  // singleton NAF with no incoming edges, endpoint containment). Returns an
  // error message or empty when valid.
  std::string validate() const;

  bool operator==(const ProofGraph&) const = default;
};

// Number of RULE nodes on the longest source-to-sink path; 0 for fact-only
// proofs and for the empty proof.
int proof_depth(const ProofGraph& g);

// The in-construction backward proof: rooted at Q, edges run parent -> child
// in prediction order. Children of each node keep insertion order, which is
// what level traversal is defined over.
class PartialProof {
 public:
  PartialProof();

  int size() const { return static_cast<int>(nodes_.size()); }
  const NodeRef& node(int i) const { return nodes_[i]; }
  const std::vector<int>& children(int i) const { return children_[i]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int last_added() const { return last_added_; }

  int find(const NodeRef& ref) const;
  bool has_edge(int parent, int child) const;
  // True if `anc` equals `node` or lies on a parent->...->node path.
  bool reaches(int anc, int node) const;

  // Adds the edge parent->child, creating the child node when new. Duplicate
  // edges are ignored. Returns the child index.
  int add_child(int parent, const NodeRef& child);

  // Breadth-first node indices from Q, children in insertion order.
  std::vector<int> level_order() const;

 private:
  std::vector<NodeRef> nodes_;
  std::vector<std::vector<int>> children_;
  std::vector<std::pair<int, int>> edges_;
  int last_added_ = 0;
};

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Breadth-first ordering of the partial proof from the question root.
// Throws StructuralError when the root is not Q.
std::vector<NodeRef> level_traversal_order(const PartialProof& p);

// Removes Q with its incident edges and reverses the remaining edges,
// producing the final-form proof.
ProofGraph finalize_proof(const PartialProof& p);

}  // namespace proofgen
