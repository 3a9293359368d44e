#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/formula.hpp"

namespace sublat {

struct AxiomScheme {
  std::string label;
  Formula scheme;  // metavariables are the scheme's variables
};

/// A Hilbert-style system: axiom schemes plus a subset of the rules
/// MP (a, a->b / b), T (a / b->a) and C (d->a, d->b / d->(a/\b)).
struct CalculusSpec {
  std::string name;
  std::vector<AxiomScheme> axioms;
  bool rule_mp = true;
  bool rule_t = false;
  bool rule_c = false;

  const AxiomScheme* find_axiom(std::string_view label) const;
};

/// R4: A1-A12 with MP only (rule wT is derived, not primitive).
const CalculusSpec& calculus_r4();
/// IR4: A1-A3 with MP.
const CalculusSpec& calculus_ir4();
/// R4*: Ax1-Ax3, C1-C3, D1-D3, N1, N2, Dist with MP and global T.
const CalculusSpec& calculus_r4star();
/// IR4*: Ax1-Ax3 with MP and T.
const CalculusSpec& calculus_ir4star();
/// R4-dagger: R4* without Dist.
const CalculusSpec& calculus_r4dagger();
/// R4+: R4-dagger without C3, with rule C.
const CalculusSpec& calculus_r4plus();

const std::vector<const CalculusSpec*>& all_calculi();

/// Lookup by canonical name (R4, IR4, R4star, IR4star, R4dagger, R4plus) or
/// the usual aliases (R4*, IR4*, R4+).
const CalculusSpec* find_calculus(std::string_view name);

}  // namespace sublat
