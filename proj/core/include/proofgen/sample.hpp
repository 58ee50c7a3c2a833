#pragma once

#include <string>
#include <vector>

#include "proofgen/proof.hpp"
#include "proofgen/theory.hpp"

namespace proofgen {

// One labeled task instance: a theory, a question about it, the oracle
// answer and proof strategy, and the gold proof set (minimal-depth proofs;
// a single empty graph is allowed for Fail-proof questions that no rule
// chain reaches).
struct Sample {
  std::string id;
  Theory theory;
  Question question;
  bool answer = false;
  Strategy strategy = Strategy::kProof;
  int depth = 0;
  std::vector<ProofGraph> gold_proofs;

  const ProofGraph& canonical_proof() const {
    if (gold_proofs.empty()) throw DataError("sample " + id + " has no gold proof");
    return gold_proofs.front();
  }
};

}  // namespace proofgen
