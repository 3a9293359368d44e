#include "sublat/proof_corpus.hpp"

namespace sublat {

namespace {

Formula F(std::string_view text) { return parse_formula(text); }

// X->Z from lines i: X->Y and j: Y->Z (Ax2 + two MP)
int compose(ProofBuilder& pb, int i, int j) {
  const Formula& xy = pb.proof().lines[i - 1].formula;
  const Formula& yz = pb.proof().lines[j - 1].formula;
  const Formula xz = Formula::imp(xy.left(), yz.right());
  const int k = pb.axiom("Ax2", Formula::imp(xy, Formula::imp(yz, xz)));
  const int l = pb.mp(i, k);
  return pb.mp(j, l);
}

// theorem 0 -> g (with 0 = bot, 1 = top); inlines the (1->g) -> g step
int derive_zero_implies(ProofBuilder& pb, const Formula& g) {
  const Formula top = top_formula();
  const Formula p = Formula::imp(top, g);  // 1 -> g
  const int n1 = pb.axiom("N1", Formula::imp(bot_formula(), p));  // 0 -> (1 -> g)
  const int ax3 =
      pb.axiom("Ax3", Formula::imp(Formula::imp(p, p), Formula::imp(Formula::imp(p, top), Formula::imp(p, g))));
  const int refl = pb.axiom("Ax1", Formula::imp(p, p));
  const int step = pb.mp(refl, ax3);          // (p -> 1) -> (p -> g)
  const int top_line = pb.axiom("Ax1", top);  // top is itself an Ax1 instance
  const int p_top = pb.t(top_line, p);        // p -> 1
  const int unbox = pb.mp(p_top, step);       // (1 -> g) -> g
  return compose(pb, n1, unbox);              // 0 -> g
}

NamedProof transitivity_ir4() {
  ProofBuilder pb(calculus_ir4(), {F("a -> b"), F("b -> d"), F("a")});
  const int l1 = pb.hyp(2);
  const int l2 = pb.hyp(0);
  const int l3 = pb.hyp(1);
  const int l4 = pb.mp(l1, l2);
  pb.mp(l4, l3);
  return {"transitivity", pb.take()};
}

NamedProof derived_rule_1() {
  ProofBuilder pb(calculus_r4star(), {F("a -> b"), F("b -> d")});
  const int l1 = pb.hyp(0);
  const int l2 = pb.hyp(1);
  const int l3 = pb.axiom("Ax2", F("(a -> b) -> ((b -> d) -> (a -> d))"));
  const int l4 = pb.mp(l1, l3);
  pb.mp(l2, l4);
  return {"derived-rule-1", pb.take()};
}

NamedProof derived_rule_2() {
  ProofBuilder pb(calculus_r4star(), {});
  const int l1 = pb.axiom("Ax1", F("b -> b"));
  pb.t(l1, F("a"));
  return {"derived-rule-2", pb.take()};
}

NamedProof derived_rule_3() {
  ProofBuilder pb(calculus_r4star(), {});
  const int l1 = pb.axiom("Ax1", F("b -> b"));
  const int l2 = pb.t(l1, F("a"));
  const int l3 = pb.axiom("Ax2", F("(a -> (b -> b)) -> (((b -> b) -> d) -> (a -> d))"));
  pb.mp(l2, l3);
  return {"derived-rule-3", pb.take()};
}

NamedProof derived_rule_4() {
  ProofBuilder pb(calculus_r4star(), {});
  const int l1 = pb.axiom("Ax2", F("(a -> b) -> ((b -> b) -> (a -> b))"));
  const int l2 = pb.axiom("Ax1", F("b -> b"));
  const int l3 = pb.t(l2, F("d"));
  const int l4 = pb.axiom("Ax2", F("(d -> (b -> b)) -> (((b -> b) -> (a -> b)) -> (d -> (a -> b)))"));
  const int l5 = pb.mp(l3, l4);  // ((b->b) -> (a->b)) -> (d -> (a->b))
  compose(pb, l1, l5);           // (a->b) -> (d -> (a->b))
  return {"derived-rule-4", pb.take()};
}

NamedProof il3_1() {
  ProofBuilder pb(calculus_ir4star(), {F("a -> b"), F("b -> a")});
  pb.hyp(0);
  const int l2 = pb.hyp(1);
  const int l3 = pb.axiom("Ax2", F("(b -> a) -> ((a -> d) -> (b -> d))"));
  pb.mp(l2, l3);
  return {"il3-1", pb.take()};
}

NamedProof il3_2() {
  ProofBuilder pb(calculus_ir4star(), {F("d -> e"), F("e -> d")});
  const int l1 = pb.hyp(0);
  pb.hyp(1);
  const int l3 = pb.t(l1, F("b"));
  const int l4 = pb.axiom("Ax3", F("(b -> (d -> e)) -> ((b -> d) -> (b -> e))"));
  pb.mp(l3, l4);
  return {"il3-2", pb.take()};
}

NamedProof il3() {
  ProofBuilder pb(calculus_ir4star(), {F("a -> b"), F("b -> a"), F("d -> e"), F("e -> d")});
  pb.hyp(0);
  const int l2 = pb.hyp(1);
  const int l3 = pb.hyp(2);
  pb.hyp(3);
  const int l5 = pb.axiom("Ax2", F("(b -> a) -> ((a -> d) -> (b -> d))"));
  const int l6 = pb.mp(l2, l5);  // (a->d) -> (b->d)
  const int l7 = pb.t(l3, F("b"));
  const int l8 = pb.axiom("Ax3", F("(b -> (d -> e)) -> ((b -> d) -> (b -> e))"));
  const int l9 = pb.mp(l7, l8);  // (b->d) -> (b->e)
  compose(pb, l6, l9);           // (a->d) -> (b->e)
  return {"il3", pb.take()};
}

NamedProof il3_and() {
  ProofBuilder pb(calculus_r4star(), {F("a -> b"), F("b -> a")});
  const int l1 = pb.hyp(0);
  pb.hyp(1);
  const int l3 = pb.axiom("C1", F("(a /\\ d) -> a"));
  const int l4 = compose(pb, l3, l1);  // (a /\ d) -> b
  const int l5 = pb.axiom("C2", F("(a /\\ d) -> d"));
  const int l6 = pb.axiom(
      "C3", F("((a /\\ d) -> b) -> (((a /\\ d) -> d) -> ((a /\\ d) -> (b /\\ d)))"));
  const int l7 = pb.mp(l4, l6);
  pb.mp(l5, l7);
  return {"il3-and", pb.take()};
}

NamedProof il3_neg() {
  ProofBuilder pb(calculus_r4star(), {F("a -> b"), F("b -> a")});
  pb.hyp(0);
  const int l2 = pb.hyp(1);
  const int l3 = pb.axiom("Ax2", F("(b -> a) -> ((a -> ~b) -> (b -> ~b))"));
  const int l4 = pb.mp(l2, l3);  // (a -> ~b) -> (b -> ~b)
  const int l5 = pb.axiom("N1", F("~a -> (a -> ~b)"));
  const int l6 = compose(pb, l5, l4);  // ~a -> (b -> ~b)
  const int l7 = pb.axiom("N2", F("(b -> ~b) -> ~b"));
  compose(pb, l6, l7);  // ~a -> ~b
  return {"il3-neg", pb.take()};
}

NamedProof il3_or() {
  ProofBuilder pb(calculus_r4star(), {F("a -> b"), F("b -> a")});
  pb.hyp(0);
  const int l2 = pb.hyp(1);
  const int l3 = pb.axiom("D1", F("a -> (a \\/ d)"));
  const int l4 = compose(pb, l2, l3);  // b -> (a \/ d)
  const int l5 = pb.axiom("D2", F("d -> (a \\/ d)"));
  const int l6 = pb.axiom(
      "D3", F("(b -> (a \\/ d)) -> ((d -> (a \\/ d)) -> ((b \\/ d) -> (a \\/ d)))"));
  const int l7 = pb.mp(l4, l6);
  pb.mp(l5, l7);
  return {"il3-or", pb.take()};
}

NamedProof c4() {
  ProofBuilder pb(calculus_r4star(), {F("a /\\ (a -> b)")});
  const int l1 = pb.hyp(0);
  const int l2 = pb.axiom("C1", F("(a /\\ (a -> b)) -> a"));
  const int l3 = pb.axiom("C2", F("(a /\\ (a -> b)) -> (a -> b)"));
  const int l4 = pb.mp(l1, l3);  // a -> b
  const int l5 = pb.mp(l1, l2);  // a
  pb.mp(l5, l4);                 // b
  return {"c4", pb.take()};
}

NamedProof zero_implies_anything() {
  ProofBuilder pb(calculus_r4star(), {});
  derive_zero_implies(pb, F("b"));
  return {"zero-implies-anything", pb.take()};
}

NamedProof neg_to_imp_zero() {
  ProofBuilder pb(calculus_r4star(), {F("~b")});
  const int l1 = pb.hyp(0);
  const int l2 = pb.axiom("N1", Formula::imp(F("~b"), Formula::imp(F("b"), bot_formula())));
  pb.mp(l1, l2);
  return {"neg-to-imp-zero", pb.take()};
}

NamedProof imp_zero_to_neg() {
  ProofBuilder pb(calculus_r4star(), {Formula::imp(F("b"), bot_formula())});
  const int l1 = pb.hyp(0);                          // b -> 0
  const int l2 = derive_zero_implies(pb, F("~b"));   // 0 -> ~b
  const int l3 = compose(pb, l1, l2);                // b -> ~b
  const int l4 = pb.axiom("N2", F("(b -> ~b) -> ~b"));
  pb.mp(l3, l4);
  return {"imp-zero-to-neg", pb.take()};
}

NamedProof il3_and_r4plus() {
  ProofBuilder pb(calculus_r4plus(), {F("a -> b"), F("b -> a")});
  const int l1 = pb.hyp(0);
  pb.hyp(1);
  const int l3 = pb.axiom("C1", F("(a /\\ d) -> a"));
  const int l4 = pb.axiom("C2", F("(a /\\ d) -> d"));
  const int l5 = compose(pb, l3, l1);  // (a /\ d) -> b
  pb.c(l5, l4);                        // (a /\ d) -> (b /\ d)
  return {"il3-and-r4plus", pb.take()};
}

NamedProof wt_instance(const std::string& name, const std::string& axiom_label, const Formula& gamma) {
  ProofBuilder pb(calculus_r4(), {});
  const int l1 = pb.axiom(axiom_label, gamma);
  const int l2 = pb.axiom("A2", Formula::imp(gamma, Formula::imp(F("q"), gamma)));
  pb.mp(l1, l2);
  return {name, pb.take()};
}

}  // namespace

const std::vector<NamedProof>& proof_corpus() {
  static const std::vector<NamedProof> corpus = [] {
    std::vector<NamedProof> out;
    out.push_back(transitivity_ir4());
    out.push_back(derived_rule_1());
    out.push_back(derived_rule_2());
    out.push_back(derived_rule_3());
    out.push_back(derived_rule_4());
    out.push_back(il3_1());
    out.push_back(il3_2());
    out.push_back(il3());
    out.push_back(il3_and());
    out.push_back(il3_neg());
    out.push_back(il3_or());
    out.push_back(c4());
    out.push_back(zero_implies_anything());
    out.push_back(neg_to_imp_zero());
    out.push_back(imp_zero_to_neg());
    out.push_back(il3_and_r4plus());
    out.push_back(wt_instance("wt-refl", "A1", F("p -> p")));
    out.push_back(wt_instance("wt-proj", "A4", F("(p /\\ r) -> p")));
    return out;
  }();
  return corpus;
}

std::vector<NamedProof> fixture_suite(const CalculusSpec& calculus) {
  std::vector<NamedProof> out;
  for (const NamedProof& p : proof_corpus())
    if (p.proof.calculus == calculus.name) out.push_back(p);
  return out;
}

const NamedProof& corpus_proof(std::string_view name) {
  for (const NamedProof& p : proof_corpus())
    if (p.name == name) return p;
  throw ValidationError("no corpus proof named '" + std::string(name) + "'");
}

}  // namespace sublat
