#include "sublat/calculus.hpp"

#include <algorithm>

namespace sublat {

const AxiomScheme* CalculusSpec::find_axiom(std::string_view label) const {
  for (const AxiomScheme& ax : axioms)
    if (ax.label == label) return &ax;
  return nullptr;
}

namespace {

AxiomScheme ax(std::string label, std::string_view text) { return {std::move(label), parse_formula(text)}; }

CalculusSpec make_r4() {
  CalculusSpec c;
  c.name = "R4";
  c.rule_mp = true;
  c.axioms = {
      ax("A1", "a -> a"),
      ax("A2", "(a -> b) -> (d -> (a -> b))"),
      ax("A3", "(a -> (b -> d)) -> ((a -> b) -> (a -> d))"),
      ax("A4", "(a /\\ b) -> a"),
      ax("A5", "(a /\\ b) -> b"),
      ax("A6", "(d -> a) -> ((d -> b) -> (d -> (a /\\ b)))"),
      ax("A7", "a -> (a \\/ b)"),
      ax("A8", "b -> (a \\/ b)"),
      ax("A9", "(a -> d) -> ((b -> d) -> ((a \\/ b) -> d))"),
      ax("A10", "(a /\\ (b \\/ d)) -> ((a /\\ b) \\/ (a /\\ d))"),
      ax("A11", "~a -> (a -> b)"),
      ax("A12", "(a -> ~a) -> ~a"),
  };
  return c;
}

CalculusSpec make_ir4() {
  CalculusSpec c = make_r4();
  c.name = "IR4";
  c.axioms.resize(3);
  return c;
}

CalculusSpec make_r4star() {
  CalculusSpec c;
  c.name = "R4star";
  c.rule_mp = true;
  c.rule_t = true;
  c.axioms = {
      ax("Ax1", "a -> a"),
      ax("Ax2", "(a -> b) -> ((b -> d) -> (a -> d))"),
      ax("Ax3", "(a -> (b -> d)) -> ((a -> b) -> (a -> d))"),
      ax("C1", "(a /\\ b) -> a"),
      ax("C2", "(a /\\ b) -> b"),
      ax("C3", "(d -> a) -> ((d -> b) -> (d -> (a /\\ b)))"),
      ax("D1", "a -> (a \\/ b)"),
      ax("D2", "b -> (a \\/ b)"),
      ax("D3", "(a -> d) -> ((b -> d) -> ((a \\/ b) -> d))"),
      ax("N1", "~a -> (a -> b)"),
      ax("N2", "(a -> ~a) -> ~a"),
      ax("Dist", "(a /\\ (b \\/ d)) -> ((a /\\ b) \\/ (a /\\ d))"),
  };
  return c;
}

CalculusSpec make_ir4star() {
  CalculusSpec c = make_r4star();
  c.name = "IR4star";
  c.axioms.resize(3);
  return c;
}

CalculusSpec make_r4dagger() {
  CalculusSpec c = make_r4star();
  c.name = "R4dagger";
  std::erase_if(c.axioms, [](const AxiomScheme& a) { return a.label == "Dist"; });
  return c;
}

CalculusSpec make_r4plus() {
  CalculusSpec c = make_r4dagger();
  c.name = "R4plus";
  std::erase_if(c.axioms, [](const AxiomScheme& a) { return a.label == "C3"; });
  c.rule_c = true;
  return c;
}

}  // namespace

const CalculusSpec& calculus_r4() { static const CalculusSpec c = make_r4(); return c; }
const CalculusSpec& calculus_ir4() { static const CalculusSpec c = make_ir4(); return c; }
const CalculusSpec& calculus_r4star() { static const CalculusSpec c = make_r4star(); return c; }
const CalculusSpec& calculus_ir4star() { static const CalculusSpec c = make_ir4star(); return c; }
const CalculusSpec& calculus_r4dagger() { static const CalculusSpec c = make_r4dagger(); return c; }
const CalculusSpec& calculus_r4plus() { static const CalculusSpec c = make_r4plus(); return c; }

const std::vector<const CalculusSpec*>& all_calculi() {
  static const std::vector<const CalculusSpec*> all = {&calculus_r4(),      &calculus_ir4(),      &calculus_r4star(),
                                                       &calculus_ir4star(), &calculus_r4dagger(), &calculus_r4plus()};
  return all;
}

const CalculusSpec* find_calculus(std::string_view name) {
  for (const CalculusSpec* c : all_calculi())
    if (c->name == name) return c;
  if (name == "R4*") return &calculus_r4star();
  if (name == "IR4*") return &calculus_ir4star();
  if (name == "R4+") return &calculus_r4plus();
  if (name == "R4†") return &calculus_r4dagger();
  return nullptr;
}

}  // namespace sublat
