#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sublat/calculus.hpp"
#include "sublat/formula.hpp"

namespace sublat {

/// How one proof line is justified.  Line citations are 1-based (the paper's
/// tabular style); hypothesis indices are 0-based.
struct Justification {
  enum class Kind { Hyp, Axiom, MP, T, C };
  Kind kind = Kind::Hyp;
  int i = 0, j = 0;          // cited lines / hypothesis index
  std::string axiom_label;   // Axiom only

  static Justification hyp(int index) { return {Kind::Hyp, index, 0, {}}; }
  static Justification axiom(std::string label) { return {Kind::Axiom, 0, 0, std::move(label)}; }
  static Justification mp(int i, int j) { return {Kind::MP, i, j, {}}; }
  static Justification t(int i) { return {Kind::T, i, 0, {}}; }
  static Justification c(int i, int j) { return {Kind::C, i, j, {}}; }
};

struct ProofLine {
  Formula formula;
  Justification just;
};

struct Proof {
  std::string calculus;  // must name the rule set the proof is checked in
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct LineDiagnostic {
  int line;  // 1-based; 0 for proof-level problems
  std::string message;
};

struct ProofVerdict {
  bool valid = true;
  std::vector<LineDiagnostic> problems;
};

/// Checks every line: axiom lines must match a scheme of the calculus, MP(i,j)
/// needs line j = (line i) -> this, T(i) needs this = b -> (line i), C(i,j)
/// needs lines d->x, d->y and this = d -> (x /\ y) with the same d.
ProofVerdict check_proof(const CalculusSpec& calculus, const Proof& proof);

/// Small convenience for building proofs line by line.
class ProofBuilder {
 public:
  ProofBuilder(const CalculusSpec& calculus, std::vector<Formula> hypotheses);

  int hyp(int index);                                 // returns the 1-based line number
  int axiom(const std::string& label, const Formula& instance);
  int mp(int i, int j);
  int t(int i, const Formula& antecedent);            // antecedent -> line i
  int c(int i, int j);
  int line_of(const Formula& f) const;                // most recent line with this formula, 0 if none

  const Proof& proof() const { return proof_; }
  Proof take() { return std::move(proof_); }

 private:
  const CalculusSpec& calculus_;
  Proof proof_;
  int push(Formula f, Justification just);
};

/// Weak deduction theorem, line by line: from a valid proof with hypotheses
/// h1..hn (h1..h(n-1) implication-shaped) that never uses rule T or C, builds
/// a valid proof of hn -> conclusion from h1..h(n-1).  In R4/IR4 the lifting
/// step is a direct A2 instance and the output is again T-free; in the
/// R4*-family it inlines a derivation that uses rule T.
Proof deduction_transform(const CalculusSpec& calculus, const Proof& proof);

/// Depth-bounded forward chaining (shallowest derivations first).  Axiom
/// metavariables range over the subformula closure of the sequent plus one
/// extra level of implications on top of it, so the search is incomplete by
/// design: finding nothing within the depth means only "not found".
std::optional<Proof> bounded_search(const CalculusSpec& calculus, const std::vector<Formula>& hypotheses,
                                    const Formula& goal, int depth, int max_depth_cap = 10);

}  // namespace sublat
