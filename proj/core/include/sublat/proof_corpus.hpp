#pragma once

#include <string>
#include <vector>

#include "sublat/proof.hpp"

namespace sublat {

struct NamedProof {
  std::string name;
  Proof proof;
};

/// Every tabular derivation shipped as a fixture, with derived-rule citations
/// (IL2 and friends) inlined so each line is a primitive rule application.
const std::vector<NamedProof>& proof_corpus();

/// The fixtures declared for one calculus.
std::vector<NamedProof> fixture_suite(const CalculusSpec& calculus);

const NamedProof& corpus_proof(std::string_view name);

}  // namespace sublat
