#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proofgen/proof.hpp"
#include "proofgen/theory.hpp"

namespace proofgen {

struct StratificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One way a rule derives an atom: the rule id plus its grounded antecedents.
struct Derivation {
  std::string rule_id;
  std::vector<Atom> antecedents;  // grounded

  auto operator<=>(const Derivation&) const = default;
};

// Least fixpoint of the theory under stratified negation-as-failure.
// Negative antecedents are satisfied by an explicitly derived negative atom
// or by NAF when the positive form is absent from the final fixpoint.
struct DerivationTable {
  std::map<Atom, int> min_depth;                      // derived atoms only
  std::map<Atom, std::vector<std::string>> fact_supports;
  std::map<Atom, std::vector<Derivation>> rule_supports;

  bool contains(const Atom& a) const { return min_depth.count(a) > 0; }
  int depth_of(const Atom& a) const { return min_depth.at(a); }
  // NAF holds for a negative goal when its positive form is underivable.
  bool naf_eligible(const Atom& negative_goal) const {
    return !negative_goal.positive && !contains(negative_goal.negated());
  }
};

// Runs the stratified fixpoint. Atoms deeper than max_depth are excluded
// from the table; NAF eligibility is always judged against the full
// fixpoint. extra_entities join the grounding domain (used to include the
// question entity). Throws StratificationError / ConsistencyError.
DerivationTable forward_chain(const Theory& theory, int max_depth = 64,
                              const std::vector<std::string>& extra_entities = {});

// Closed-world answer and proof strategy for the question.
std::pair<bool, Strategy> answer_and_strategy(const Theory& theory,
                                              const Question& question);

// Canonical minimal proof: least depth, then fewest nodes, then
// lexicographically least node/edge listing. Requires strategy PROOF.
std::pair<ProofGraph, int> extract_gold_proof(const Theory& theory,
                                              const Question& question);

// Deterministic goal-directed rule chain for a Fail-proof question: repeat
// { match the lowest-index rule whose consequent fits the goal; descend into
// its first antecedent unsatisfiable by fact or NAF } until no rule matches,
// no antecedent is unsatisfiable, or a goal or rule repeats. May be empty.
ProofGraph fail_chain(const Theory& theory, const Question& question);
// Table-reusing variant for callers that scan many questions per theory.
ProofGraph fail_chain(const Theory& theory, const Question& question,
                      const DerivationTable& table);

// Independent checker. PROOF: every rule's grounded antecedents are covered
// one-to-one by incoming supports (NAF shared among NAF-eligible negatives),
// facts match the theory, the unique sink entails or contradicts the
// question, and the graph is acyclic. FAIL_PROOF: a rule-only chain
// consistent with goal-directed matching toward the question. Malformed
// input returns false, never throws.
bool verify_proof(const Theory& theory, const Question& question,
                  const ProofGraph& proof, Strategy strategy);

struct EnumerationResult {
  std::vector<ProofGraph> proofs;   // all valid proofs within node_bound
  std::vector<ProofGraph> minimal;  // the least-depth subset (gold set)
  bool overflowed = false;          // candidate cap hit; listing may be partial
};

// All verify_proof-true proofs with at most node_bound nodes, deduplicated
// by node and edge sets. Requires strategy PROOF.
EnumerationResult enumerate_proofs_ex(const Theory& theory,
                                      const Question& question, int node_bound,
                                      int candidate_cap = 200000);
std::vector<ProofGraph> enumerate_proofs(const Theory& theory,
                                         const Question& question,
                                         int node_bound);

}  // namespace proofgen
