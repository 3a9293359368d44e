#include "sublat/proof.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sublat {

ProofVerdict check_proof(const CalculusSpec& calculus, const Proof& proof) {
  ProofVerdict verdict;
  auto problem = [&](int line, std::string msg) {
    verdict.valid = false;
    verdict.problems.push_back({line, std::move(msg)});
  };

  if (!proof.calculus.empty()) {
    const CalculusSpec* named = find_calculus(proof.calculus);
    if (named == nullptr)
      problem(0, "unknown calculus '" + proof.calculus + "'");
    else if (named != &calculus)
      problem(0, "proof is declared for " + named->name + ", checked against " + calculus.name);
  }
  if (proof.lines.empty()) {
    problem(0, "proof has no lines");
    return verdict;
  }

  const int n = static_cast<int>(proof.lines.size());
  for (int k = 0; k < n; ++k) {
    const ProofLine& line = proof.lines[k];
    const int number = k + 1;
    auto cited = [&](int i) -> const Formula* {
      if (i < 1 || i > k) {
        problem(number, "citation of line " + std::to_string(i) + " is out of range");
        return nullptr;
      }
      return &proof.lines[i - 1].formula;
    };
    switch (line.just.kind) {
      case Justification::Kind::Hyp: {
        const int h = line.just.i;
        if (h < 0 || h >= static_cast<int>(proof.hypotheses.size()))
          problem(number, "hypothesis index " + std::to_string(h) + " out of range");
        else if (!(proof.hypotheses[h] == line.formula))
          problem(number, "formula differs from hypothesis " + std::to_string(h));
        break;
      }
      case Justification::Kind::Axiom: {
        const AxiomScheme* scheme = calculus.find_axiom(line.just.axiom_label);
        if (scheme == nullptr) {
          problem(number, "no axiom labeled '" + line.just.axiom_label + "' in " + calculus.name);
          break;
        }
        if (!match_scheme(scheme->scheme, line.formula))
          problem(number, "formula is not an instance of " + line.just.axiom_label);
        break;
      }
      case Justification::Kind::MP: {
        if (!calculus.rule_mp) {
          problem(number, "rule MP is not part of " + calculus.name);
          break;
        }
        const Formula* minor = cited(line.just.i);
        const Formula* major = cited(line.just.j);
        if (!minor || !major) break;
        if (major->kind() != Conn::Imp)
          problem(number, "MP major premise (line " + std::to_string(line.just.j) + ") is not an implication");
        else if (!(major->left() == *minor))
          problem(number, "MP premises do not fit: line " + std::to_string(line.just.j) +
                              " is not (line " + std::to_string(line.just.i) + ") -> ...");
        else if (!(major->right() == line.formula))
          problem(number, "MP conclusion differs from the consequent of line " + std::to_string(line.just.j));
        break;
      }
      case Justification::Kind::T: {
        if (!calculus.rule_t) {
          problem(number, "rule T is not part of " + calculus.name);
          break;
        }
        const Formula* prev = cited(line.just.i);
        if (!prev) break;
        if (line.formula.kind() != Conn::Imp || !(line.formula.right() == *prev))
          problem(number, "T conclusion must be b -> (line " + std::to_string(line.just.i) + ")");
        break;
      }
      case Justification::Kind::C: {
        if (!calculus.rule_c) {
          problem(number, "rule C is not part of " + calculus.name);
          break;
        }
        const Formula* first = cited(line.just.i);
        const Formula* second = cited(line.just.j);
        if (!first || !second) break;
        const bool shapes_ok = first->kind() == Conn::Imp && second->kind() == Conn::Imp &&
                               line.formula.kind() == Conn::Imp && line.formula.right().kind() == Conn::And;
        if (!shapes_ok || !(first->left() == second->left()) || !(line.formula.left() == first->left()) ||
            !(line.formula.right().left() == first->right()) ||
            !(line.formula.right().right() == second->right()))
          problem(number, "C premises must be d->x, d->y with conclusion d -> (x /\\ y)");
        break;
      }
    }
  }
  return verdict;
}

ProofBuilder::ProofBuilder(const CalculusSpec& calculus, std::vector<Formula> hypotheses) : calculus_(calculus) {
  proof_.calculus = calculus.name;
  proof_.hypotheses = std::move(hypotheses);
}

int ProofBuilder::push(Formula f, Justification just) {
  proof_.lines.push_back({std::move(f), just});
  return static_cast<int>(proof_.lines.size());
}

int ProofBuilder::hyp(int index) {
  if (index < 0 || index >= static_cast<int>(proof_.hypotheses.size()))
    throw ValidationError("ProofBuilder: hypothesis index out of range");
  return push(proof_.hypotheses[index], Justification::hyp(index));
}

int ProofBuilder::axiom(const std::string& label, const Formula& instance) {
  const AxiomScheme* scheme = calculus_.find_axiom(label);
  if (!scheme || !match_scheme(scheme->scheme, instance))
    throw ValidationError("ProofBuilder: '" + instance.to_string() + "' is not an instance of " + label);
  return push(instance, Justification::axiom(label));
}

int ProofBuilder::mp(int i, int j) {
  const Formula& major = proof_.lines[j - 1].formula;
  if (major.kind() != Conn::Imp || !(major.left() == proof_.lines[i - 1].formula))
    throw ValidationError("ProofBuilder: MP premises do not fit");
  return push(major.right(), Justification::mp(i, j));
}

int ProofBuilder::t(int i, const Formula& antecedent) {
  if (!calculus_.rule_t) throw ValidationError("ProofBuilder: rule T is not part of " + calculus_.name);
  return push(Formula::imp(antecedent, proof_.lines[i - 1].formula), Justification::t(i));
}

int ProofBuilder::c(int i, int j) {
  if (!calculus_.rule_c) throw ValidationError("ProofBuilder: rule C is not part of " + calculus_.name);
  const Formula& a = proof_.lines[i - 1].formula;
  const Formula& b = proof_.lines[j - 1].formula;
  if (a.kind() != Conn::Imp || b.kind() != Conn::Imp || !(a.left() == b.left()))
    throw ValidationError("ProofBuilder: C premises do not fit");
  return push(Formula::imp(a.left(), Formula::conj(a.right(), b.right())), Justification::c(i, j));
}

int ProofBuilder::line_of(const Formula& f) const {
  for (int k = static_cast<int>(proof_.lines.size()); k >= 1; --k)
    if (proof_.lines[k - 1].formula == f) return k;
  return 0;
}

namespace {

// (X -> Y) -> (delta -> (X -> Y)) without using an A2-style axiom: the
// R4*-family derivation, which leans on rule T.
int derive_weakening_r4star_family(ProofBuilder& pb, const Formula& gamma, const Formula& delta) {
  const Formula y = gamma.right();
  const Formula yy = Formula::imp(y, y);
  const Formula d_to_g = Formula::imp(delta, gamma);
  const int l1 = pb.axiom("Ax1", yy);
  const int l2 = pb.t(l1, delta);  // delta -> (y -> y)
  const int l3 = pb.axiom("Ax2", Formula::imp(pb.proof().lines[l2 - 1].formula,
                                              Formula::imp(Formula::imp(yy, gamma), d_to_g)));
  const int l4 = pb.mp(l2, l3);  // ((y->y) -> gamma) -> (delta -> gamma)
  const int l5 = pb.axiom("Ax2", Formula::imp(gamma, Formula::imp(yy, gamma)));
  const int l6 = pb.axiom("Ax2", Formula::imp(pb.proof().lines[l5 - 1].formula,
                                              Formula::imp(pb.proof().lines[l4 - 1].formula,
                                                           Formula::imp(gamma, d_to_g))));
  const int l7 = pb.mp(l5, l6);
  return pb.mp(l4, l7);  // gamma -> (delta -> gamma)
}

}  // namespace

Proof deduction_transform(const CalculusSpec& calculus, const Proof& proof) {
  ProofVerdict input_ok = check_proof(calculus, proof);
  if (!input_ok.valid) throw ValidationError("deduction_transform: input proof is not valid");
  if (proof.hypotheses.empty()) throw ValidationError("deduction_transform: no hypothesis to discharge");
  for (const ProofLine& line : proof.lines) {
    if (line.just.kind == Justification::Kind::T)
      throw ValidationError("deduction_transform: input uses rule T");
    if (line.just.kind == Justification::Kind::C)
      throw ValidationError("deduction_transform: rule C lines are not supported");
  }
  const int keep = static_cast<int>(proof.hypotheses.size()) - 1;
  for (int h = 0; h < keep; ++h)
    if (proof.hypotheses[h].kind() != Conn::Imp)
      throw ValidationError("deduction_transform: hypothesis " + std::to_string(h) + " is not an implication");

  const Formula discharged = proof.hypotheses.back();
  const bool r4_family = calculus.find_axiom("A2") != nullptr;

  ProofBuilder pb(calculus, std::vector<Formula>(proof.hypotheses.begin(), proof.hypotheses.end() - 1));
  std::vector<int> lifted(proof.lines.size(), 0);  // old line -> new line proving discharged -> gamma

  // gamma must already be a proof line; returns the line for discharged -> gamma
  auto lift_via_weakening = [&](int gamma_line) {
    const Formula gamma = pb.proof().lines[gamma_line - 1].formula;
    if (r4_family) {
      const int a2 = pb.axiom("A2", Formula::imp(gamma, Formula::imp(discharged, gamma)));
      return pb.mp(gamma_line, a2);
    }
    const int weak = derive_weakening_r4star_family(pb, gamma, discharged);
    return pb.mp(gamma_line, weak);
  };

  for (size_t k = 0; k < proof.lines.size(); ++k) {
    const ProofLine& line = proof.lines[k];
    switch (line.just.kind) {
      case Justification::Kind::Hyp: {
        if (line.just.i == keep) {
          // the discharged hypothesis becomes an a -> a axiom instance
          lifted[k] = pb.axiom(r4_family ? "A1" : "Ax1", Formula::imp(discharged, discharged));
        } else {
          const int base = pb.hyp(line.just.i);
          lifted[k] = lift_via_weakening(base);
        }
        break;
      }
      case Justification::Kind::Axiom: {
        const int base = pb.axiom(line.just.axiom_label, line.formula);
        lifted[k] = lift_via_weakening(base);
        break;
      }
      case Justification::Kind::MP: {
        const int minor = lifted[line.just.i - 1];
        const int major = lifted[line.just.j - 1];
        const Formula& x = proof.lines[line.just.i - 1].formula;
        const Formula& consequent = line.formula;
        // Ax3/A3 instance: (d -> (x -> y)) -> ((d -> x) -> (d -> y))
        const Formula inst =
            Formula::imp(Formula::imp(discharged, Formula::imp(x, consequent)),
                         Formula::imp(Formula::imp(discharged, x), Formula::imp(discharged, consequent)));
        const int s = pb.axiom(r4_family ? "A3" : "Ax3", inst);
        const int step = pb.mp(major, s);
        lifted[k] = pb.mp(minor, step);
        break;
      }
      case Justification::Kind::T:
      case Justification::Kind::C:
        throw ValidationError("deduction_transform: unreachable rule");  // filtered above
    }
  }

  Proof out = pb.take();
  ProofVerdict v = check_proof(calculus, out);
  if (!v.valid) throw Error("internal: deduction_transform produced an invalid proof");
  if (!(out.conclusion() == Formula::imp(discharged, proof.conclusion())))
    throw Error("internal: deduction_transform produced the wrong conclusion");
  return out;
}

namespace {

struct SearchEntry {
  Formula formula;
  Justification just;  // line citations refer to entry indices + 1
};

}  // namespace

std::optional<Proof> bounded_search(const CalculusSpec& calculus, const std::vector<Formula>& hypotheses,
                                    const Formula& goal, int depth, int max_depth_cap) {
  if (depth > max_depth_cap)
    throw CapExceeded("bounded_search: depth " + std::to_string(depth) + " exceeds cap " +
                      std::to_string(max_depth_cap));

  // instantiation universe: subformula closure plus one extra -> level
  std::vector<Formula> closure;
  {
    std::set<Formula> acc;
    for (const Formula& h : hypotheses)
      for (const Formula& s : subformulas(h)) acc.insert(s);
    for (const Formula& s : subformulas(goal)) acc.insert(s);
    std::set<Formula> extra = acc;
    for (const Formula& a : acc)
      for (const Formula& b : acc) extra.insert(Formula::imp(a, b));
    closure.assign(extra.begin(), extra.end());
  }

  std::map<Formula, int> index_of;  // formula -> entry index
  std::vector<SearchEntry> entries;
  auto add = [&](const Formula& f, Justification just) -> bool {
    if (index_of.count(f)) return false;
    index_of[f] = static_cast<int>(entries.size());
    entries.push_back({f, just});
    return true;
  };

  for (size_t h = 0; h < hypotheses.size(); ++h) add(hypotheses[h], Justification::hyp(static_cast<int>(h)));
  // depth 0: hypotheses and axiom instances
  for (const AxiomScheme& scheme : calculus.axioms) {
    std::vector<std::string> metas = variables(scheme.scheme);
    std::vector<size_t> pick(metas.size(), 0);
    while (true) {
      Substitution sigma;
      for (size_t i = 0; i < metas.size(); ++i) sigma[metas[i]] = closure[pick[i]];
      add(substitute(sigma, scheme.scheme), Justification::axiom(scheme.label));
      int k = static_cast<int>(pick.size()) - 1;
      while (k >= 0 && pick[k] + 1 == closure.size()) pick[k--] = 0;
      if (k < 0) break;
      ++pick[k];
    }
  }

  auto found = [&]() { return index_of.count(goal) != 0; };

  for (int level = 0; level < depth && !found(); ++level) {
    const size_t frozen = entries.size();
    bool grew = false;
    for (size_t i = 0; i < frozen; ++i) {
      // MP: entries[j] = entries[i] -> f
      if (calculus.rule_mp)
        for (size_t j = 0; j < frozen; ++j) {
          const Formula& major = entries[j].formula;
          if (major.kind() == Conn::Imp && major.left() == entries[i].formula)
            grew |= add(major.right(), Justification::mp(static_cast<int>(i) + 1, static_cast<int>(j) + 1));
        }
      if (calculus.rule_t)
        for (const Formula& b : closure)
          grew |= add(Formula::imp(b, entries[i].formula), Justification::t(static_cast<int>(i) + 1));
      if (calculus.rule_c && entries[i].formula.kind() == Conn::Imp)
        for (size_t j = 0; j < frozen; ++j) {
          const Formula& other = entries[j].formula;
          if (other.kind() == Conn::Imp && other.left() == entries[i].formula.left())
            grew |= add(Formula::imp(other.left(), Formula::conj(entries[i].formula.right(), other.right())),
                        Justification::c(static_cast<int>(i) + 1, static_cast<int>(j) + 1));
        }
    }
    if (!grew) break;
  }

  if (!found()) return std::nullopt;

  // walk back from the goal, keeping only the lines a proof of it needs
  std::vector<int> needed;
  std::vector<uint8_t> mark(entries.size(), 0);
  std::vector<int> stack = {index_of.at(goal)};
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    if (mark[e]) continue;
    mark[e] = 1;
    const Justification& just = entries[e].just;
    if (just.kind == Justification::Kind::MP || just.kind == Justification::Kind::C) {
      stack.push_back(just.i - 1);
      stack.push_back(just.j - 1);
    } else if (just.kind == Justification::Kind::T) {
      stack.push_back(just.i - 1);
    }
  }
  for (size_t e = 0; e < entries.size(); ++e)
    if (mark[e]) needed.push_back(static_cast<int>(e));

  std::vector<int> new_number(entries.size(), 0);
  for (size_t k = 0; k < needed.size(); ++k) new_number[needed[k]] = static_cast<int>(k) + 1;

  Proof out;
  out.calculus = calculus.name;
  out.hypotheses = hypotheses;
  for (int e : needed) {
    Justification just = entries[e].just;
    if (just.kind == Justification::Kind::MP || just.kind == Justification::Kind::C) {
      just.i = new_number[just.i - 1];
      just.j = new_number[just.j - 1];
    } else if (just.kind == Justification::Kind::T) {
      just.i = new_number[just.i - 1];
    }
    out.lines.push_back({entries[e].formula, just});
  }
  ProofVerdict v = check_proof(calculus, out);
  if (!v.valid) throw Error("internal: bounded_search produced an invalid proof");
  return out;
}

}  // namespace sublat
