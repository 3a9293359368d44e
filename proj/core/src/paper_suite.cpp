#include "sublat/paper_suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "sublat/enumerate.hpp"
#include "sublat/filters.hpp"
#include "sublat/fixtures.hpp"
#include "sublat/fmp.hpp"
#include "sublat/pairs.hpp"
#include "sublat/proof_corpus.hpp"
#include "sublat/representation.hpp"
#include "sublat/semantics.hpp"

namespace sublat {

namespace {

void expect(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

std::string count_note(size_t checked, const char* what) {
  return std::to_string(checked) + " " + what + " checked";
}

// enumeration caches shared across suite items
const std::vector<FiniteAlgebra>& sha_up_to(int n) {
  static std::map<int, std::vector<FiniteAlgebra>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_class_up_to(n, ClassTag::sha, true)).first;
  return it->second;
}

const std::vector<FiniteAlgebra>& class_up_to(ClassTag tag, int n) {
  static std::map<std::pair<ClassTag, int>, std::vector<FiniteAlgebra>> cache;
  auto key = std::make_pair(tag, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_class_up_to(n, tag, true)).first;
  return it->second;
}

bool le_nat(const FiniteAlgebra& a, int x, int y) { return a.imp(x, y) == a.top; }

// ---- criterion 1: fixture classifications -------------------------------

std::string run_fixture_m_n() {
  for (const char* name : {"M", "N"}) {
    const Fixture& fx = fixture(name);
    expect(check_srlbs(fx.algebra).member, std::string(name) + " must pass check_srlbs");
    AlgebraPair pair = extract_pair(fx.algebra);
    std::pair<int, int> cell;
    auto rebuilt = try_build_implication(pair, &cell);
    expect(rebuilt.has_value(), std::string(name) + ": NoMaximum raised while rebuilding");
    expect(rebuilt->imp == fx.algebra.imp, std::string(name) + ": rebuilt table differs");
  }
  return "M and N verified and rebuilt from their extracted pairs";
}

std::string run_fixture_b2() {
  const Fixture& fx = fixture("B2");
  expect(check_shs(fx.algebra).member, "B2 must pass check_shs");
  ClassVerdict srs = check_srs(fx.algebra);
  expect(!srs.member, "B2 must fail check_srs");
  expect(srs.violations.size() == 1 && srs.violations[0].axiom == "SR4", "B2 must fail exactly at SR4");
  const std::vector<int>& w = srs.violations[0].witness;
  expect(!axiom_holds(fx.algebra, ClassTag::srs, "SR4", w), "SR4 witness must re-evaluate to a violation");
  // the witness is z = a applied to a /\ b
  expect(w == std::vector<int>({1, 2, 1}), "SR4 witness should be (x,y,z) = (a,b,a)");
  return "B2 is a shs and fails SR4 at (a, a/\\b)";
}

std::string run_fixture_chain3() {
  expect(check_srl(fixture("chain3-pair").algebra).member, "chain3-pair must pass check_srl");
  return "chain3-pair passes check_srl";
}

std::string run_fixture_collapse() {
  const Fixture& fx = fixture("two-elt-collapse");
  ClassVerdict v = check_sha(fx.algebra);
  expect(!v.member, "two-elt-collapse must fail check_sha");
  expect(v.violations.size() == 1 && v.violations[0].axiom == "A", "the only violation must be (A)");
  expect(!axiom_holds(fx.algebra, ClassTag::sha, "A", v.violations[0].witness),
         "(A) witness must re-evaluate to a violation");
  return "two-elt-collapse fails check_sha exactly at (A)";
}

std::string run_fixture_homomorphism() {
  Signature arrow_only;  // imp + top
  FiniteAlgebra source = reduct(fixture("chain3-pair").algebra, arrow_only);
  const FiniteAlgebra& target = fixture("two-elt-collapse").algebra;
  expect(is_homomorphism(collapse_map(), source, target), "the collapse map must be a homomorphism");
  return "collapse map 0,1 |-> a, m |-> b is a homomorphism of type (2,0)";
}

// ---- criterion 2: soundness scans ----------------------------------------

std::string run_soundness(const CalculusSpec& calculus, ClassTag tag, int max_size, bool with_c) {
  size_t checked = 0;
  std::vector<FiniteAlgebra> algebras;
  if (tag == ClassTag::alg_r4star || tag == ClassTag::alg_plus) {
    algebras = class_up_to(tag, max_size);
  } else {
    for (const FiniteAlgebra& a : class_up_to(tag, max_size)) algebras.push_back(with_derived_neg(a));
  }
  for (const FiniteAlgebra& a : algebras) {
    for (const AxiomScheme& ax : calculus.axioms) {
      expect(scheme_valid_in(ax.scheme, a),
             calculus.name + " axiom " + ax.label + " fails in an enumerated algebra");
      ++checked;
    }
    expect(mp_preserves_top(a), "MP does not preserve top");
    expect(t_preserves_top(a), "T does not preserve top");
    if (with_c) expect(c_preserves_top(a), "C does not preserve top");
  }
  return count_note(checked, "axiom/algebra pairs");
}

std::string run_separating_scheme() {
  const Formula scheme = parse_formula("((z -> x) /\\ (z -> y)) -> (z -> (x /\\ y))");
  size_t checked = 0;
  for (const FiniteAlgebra& a : class_up_to(ClassTag::srlbs, 5)) {
    expect(scheme_valid_in(scheme, a), "the separating scheme must hold in every srlbs of size <= 5");
    ++checked;
  }
  expect(!scheme_valid_in(scheme, fixture("B2").algebra), "the separating scheme must fail on B2");
  return count_note(checked, "srlbs algebras") + "; fails on B2";
}

// ---- criterion 3: representation instances --------------------------------

std::string run_representation(ClassTag tag, FilterKind kind) {
  size_t checked = 0;
  for (const FiniteAlgebra& a : class_up_to(tag, 3)) {
    RepresentationReport report = verify_representation(a, kind);
    expect(report.pass, "representation failure: " + (report.failures.empty() ? "?" : report.failures.front()));
    ++checked;
  }
  return count_note(checked, "algebras");
}

// ---- criterion 4: bracket calculus ----------------------------------------

void for_each_tuple(int size, int arity, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(arity, 0);
  while (true) {
    fn(t);
    int k = arity - 1;
    while (k >= 0 && t[k] == size - 1) t[k--] = 0;
    if (k < 0) return;
    ++t[k];
  }
}

std::string run_bracket_laws() {
  size_t checked = 0;
  for (const FiniteAlgebra& a : sha_up_to(4)) {
    const std::vector<int> box = box_set(a);
    for (int len = 0; len <= 3; ++len) {
      // permutation invariance for box arguments
      std::vector<int> xs(len);
      for_each_tuple(static_cast<int>(box.size()), len, [&](const std::vector<int>& pick) {
        for (int i = 0; i < len; ++i) xs[i] = box[pick[i]];
        for (int target = 0; target < a.size; ++target) {
          const int base = bracket(xs, target, a);
          std::vector<int> perm = xs;
          std::sort(perm.begin(), perm.end());
          do {
            expect(bracket(perm, target, a) == base, "bracket permutation invariance fails");
            ++checked;
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      });
      // monotony in the last slot, over arbitrary arguments
      for_each_tuple(a.size, len, [&](const std::vector<int>& ys) {
        for (int u = 0; u < a.size; ++u)
          for (int v = 0; v < a.size; ++v)
            if (le_nat(a, u, v)) {
              expect(le_nat(a, bracket(ys, u, a), bracket(ys, v, a)), "bracket monotony fails");
              ++checked;
            }
      });
      // [xs, a, b, c, d] <= [xs, [a,b,c], a, b, d]
      for_each_tuple(a.size, len, [&](const std::vector<int>& ys) {
        for_each_tuple(a.size, 4, [&](const std::vector<int>& q) {
          std::vector<int> lhs_list = ys;
          lhs_list.insert(lhs_list.end(), {q[0], q[1], q[2]});
          const int lhs = bracket(lhs_list, q[3], a);
          std::vector<int> rhs_list = ys;
          const int abc = bracket({q[0], q[1]}, q[2], a);
          rhs_list.insert(rhs_list.end(), {abc, q[0], q[1]});
          const int rhs = bracket(rhs_list, q[3], a);
          expect(le_nat(a, lhs, rhs), "bracket S-expansion fails");
          ++checked;
        });
      });
      // [xs, u, v] = [[xs, u], xs, v] for box arguments
      for_each_tuple(static_cast<int>(box.size()), len, [&](const std::vector<int>& pick) {
        for (int i = 0; i < len; ++i) xs[i] = box[pick[i]];
        for (int bu : box)
          for (int bv : box) {
            std::vector<int> lhs_list = xs;
            lhs_list.push_back(bu);
            const int lhs = bracket(lhs_list, bv, a);
            std::vector<int> rhs_list;
            rhs_list.push_back(bracket(xs, bu, a));
            rhs_list.insert(rhs_list.end(), xs.begin(), xs.end());
            expect(bracket(rhs_list, bv, a) == lhs, "bracket distribution fails");
            ++checked;
          }
      });
    }
  }
  return count_note(checked, "bracket instances");
}

std::string run_filter_generation() {
  size_t checked = 0;
  for (const FiniteAlgebra& a : sha_up_to(4)) {
    const std::vector<int> box = box_set(a);
    const int m = static_cast<int>(box.size());
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> x;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) x.push_back(box[i]);
      if (std::find(x.begin(), x.end(), a.top) == x.end()) continue;  // stated for 1 in X
      for (int extra = 0; extra < a.size; ++extra) {
        std::vector<int> seed = x;
        seed.push_back(extra);
        expect(generated_implicative_filter(a, seed) == bracket_generated_filter(a, x, extra),
               "bracket filter formula disagrees with closure generation");
        ++checked;
      }
    }
  }
  return count_note(checked, "generated filters");
}

// ---- criterion 5: proof corpus --------------------------------------------

std::string run_proof_corpus() {
  for (const NamedProof& np : proof_corpus()) {
    const CalculusSpec* calculus = find_calculus(np.proof.calculus);
    expect(calculus != nullptr, np.name + ": unknown calculus");
    ProofVerdict v = check_proof(*calculus, np.proof);
    expect(v.valid, np.name + ": " + (v.problems.empty() ? "invalid" : v.problems.front().message));
  }
  return count_note(proof_corpus().size(), "fixture proofs");
}

std::string run_deduction_iterated() {
  Proof proof = corpus_proof("transitivity").proof;
  for (int round = 0; round < 3; ++round) proof = deduction_transform(calculus_ir4(), proof);
  expect(proof.hypotheses.empty(), "three transforms must discharge all hypotheses");
  const Formula expected = parse_formula("(a -> b) -> ((b -> d) -> (a -> d))");
  expect(proof.conclusion() == expected, "iterated deduction must yield the transitivity scheme");
  expect(check_proof(calculus_ir4(), proof).valid, "the final proof must check");
  return "three applications yield the transitivity scheme, " + std::to_string(proof.lines.size()) + " lines";
}

// ---- criterion 6: FMP end to end -------------------------------------------

std::string run_fmp_sha() {
  const Formula h1 = parse_formula("p -> (q -> p)");
  auto cm = find_countermodel(h1, ClassTag::sha, 3);
  expect(cm.has_value(), "h1 must fail in some sha of size <= 3");
  ShrinkResult shrunk = fmp_shrink_sha(*cm);
  expect(check_srl(shrunk.cm.algebra).member, "the shrunk countermodel must be an srl");
  Valuation v{&shrunk.cm.algebra, shrunk.cm.valuation};
  expect(evaluate(h1, v) == shrunk.cm.value && shrunk.cm.value != shrunk.cm.algebra.top,
         "the shrunk countermodel must still falsify h1");
  return "h1 countermodel (size " + std::to_string(cm->algebra.size) + ") shrinks to an srl of size " +
         std::to_string(shrunk.carrier_size) + ", " + std::to_string(shrunk.residuum_agreements) +
         " residuum agreements";
}

std::string run_fmp_srlbs_n() {
  const Formula h1 = parse_formula("p -> (q -> p)");
  const FiniteAlgebra& n = fixture("N").algebra;
  std::optional<Countermodel> cm;
  for (int p = 0; p < n.size && !cm; ++p)
    for (int q = 0; q < n.size && !cm; ++q) {
      Valuation v{&n, {{"p", p}, {"q", q}}};
      if (evaluate(h1, v) != n.top) cm = Countermodel{ClassTag::srlbs, n, v.map, h1, evaluate(h1, v)};
    }
  expect(cm.has_value(), "h1 must be falsifiable on N");
  ShrinkResult shrunk = fmp_shrink_srlbs(*cm);
  expect(check_srlbs(shrunk.cm.algebra).member, "the shrunk countermodel must be an srlbs");
  expect(shrunk.join_agreements > 0 && shrunk.residuum_agreements > 0, "agreement audits must run");
  return "N countermodel shrinks to size " + std::to_string(shrunk.carrier_size) + " with " +
         std::to_string(shrunk.residuum_agreements) + "+" + std::to_string(shrunk.join_agreements) +
         " agreement checks";
}

std::string run_fmp_agreement_scan() {
  // every shrink construction audits its own agreements and throws on a miss;
  // run them across all falsifiable arrow formulas of modest depth on sha <= 3
  const std::vector<Formula> shapes = {
      parse_formula("p -> (q -> p)"),
      parse_formula("(p -> q) -> ((q -> p) -> (q -> p))"),
      parse_formula("((p -> q) -> p) -> p"),
      parse_formula("p -> (p -> p)"),
      parse_formula("(p -> (q -> r)) -> (q -> (p -> r))"),
  };
  size_t shrunk_count = 0;
  for (const Formula& f : shapes) {
    auto cm = find_countermodel(f, ClassTag::sha, 3);
    if (!cm) continue;
    fmp_shrink_sha(*cm);
    ++shrunk_count;
  }
  expect(shrunk_count > 0, "at least one formula must be falsifiable");
  return count_note(shrunk_count, "shrinks audited");
}

// ---- criterion 7: box laws --------------------------------------------------

std::string run_box_laws() {
  size_t checked = 0;
  for (const FiniteAlgebra& a : sha_up_to(4)) {
    for (int x = 0; x < a.size; ++x) {
      expect(box_of(a, box_of(a, x)) == box_of(a, x), "box must be idempotent");
      expect(le_nat(a, box_of(a, x), x), "box x must be below x");
      for (int y = 0; y < a.size; ++y) {
        expect(a.imp(x, y) == box_of(a, a.imp(x, y)), "x -> y must be a box fixpoint");
        for (int z = 0; z < a.size; ++z) {
          const int bx = box_of(a, x), by = box_of(a, y), bz = box_of(a, z);
          expect(a.imp(bx, a.imp(by, bz)) == a.imp(a.imp(bx, by), a.imp(bx, bz)),
                 "box S-identity fails");
          expect(a.imp(a.imp(bx, a.imp(by, z)), a.imp(by, a.imp(bx, z))) == a.top,
                 "box permutation identity fails");
          ++checked;
        }
      }
    }
    expect(check_box_hilbert(a).member, "box A must be a Hilbert subalgebra");
  }
  return count_note(checked, "box-law instances");
}

std::string run_s1_s2() {
  const Formula s1 = parse_formula("(x -> y) -> (z -> (x -> y))");
  const Formula s2 = parse_formula("(w -> (x -> (y -> z))) -> ((w -> (x -> y)) -> (w -> (x -> z)))");
  const Formula s = parse_formula("(x -> (y -> z)) -> ((x -> y) -> (x -> z))");
  size_t checked = 0;
  for (const FiniteAlgebra& a : class_up_to(ClassTag::srl, 4)) {
    expect(scheme_valid_in(s1, a), "S1 fails in an srl");
    expect(scheme_valid_in(s2, a), "S2 fails in an srl");
    expect(scheme_valid_in(s, a), "S fails in an srl");
    checked += 3;
  }
  return count_note(checked, "scheme/algebra pairs");
}

// ---- criterion 8: the appendix base ----------------------------------------

std::string run_appendix_equivalence() {
  size_t hemi_pass = 0, members = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const FiniteLattice& L : enumerate_bounded_lattices(n)) {
      FiniteAlgebra a;
      a.size = n;
      a.meet = L.meet;
      a.join = L.join;
      a.top = L.top;  // signature kept {->, /\, \/, 1}: bottom not populated
      std::vector<std::pair<int, int>> cells;
      OpTable imp(n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (x == y)
            imp.at(x, y) = L.top;
          else
            cells.emplace_back(x, y);
        }
      std::vector<int> choice(cells.size(), 0);
      while (true) {
        for (size_t i = 0; i < cells.size(); ++i) imp.at(cells[i].first, cells[i].second) = choice[i];
        a.imp = imp;
        // hemi base: x -> x = top (pinned) and x /\ (x -> y) <= x /\ y
        bool hemi = true;
        for (int x = 0; x < n && hemi; ++x)
          for (int y = 0; y < n && hemi; ++y) {
            const int lhs = L.meet(x, a.imp(x, y));
            hemi = L.meet(lhs, L.meet(x, y)) == lhs;
          }
        if (hemi) {
          ++hemi_pass;
          ClassVerdict shs = check_shs(a);
          ClassVerdict appendix = check_shrl_appendix(a);
          expect(shs.member == appendix.member,
                 "appendix base diverges from SH1-SH4 on a hemi-implicative algebra of size " + std::to_string(n));
          if (shs.member) ++members;
        }
        int k = static_cast<int>(choice.size()) - 1;
        while (k >= 0 && choice[k] == n - 1) choice[k--] = 0;
        if (k < 0) break;
        ++choice[k];
      }
    }
  }
  return std::to_string(hemi_pass) + " hemi-implicative tables compared, " + std::to_string(members) + " members";
}

}  // namespace

const std::vector<SuiteItem>& paper_suite_items() {
  static const std::vector<SuiteItem> items = {
      {1, "fixture-M-N-srlbs", run_fixture_m_n},
      {1, "fixture-B2-shs-not-srs", run_fixture_b2},
      {1, "fixture-chain3-srl", run_fixture_chain3},
      {1, "fixture-collapse-not-sha", run_fixture_collapse},
      {1, "fixture-collapse-homomorphism", run_fixture_homomorphism},
      {2, "r4star-sound-srl", [] { return run_soundness(calculus_r4star(), ClassTag::alg_r4star, 4, false); }},
      {2, "r4dagger-sound-srlbs", [] { return run_soundness(calculus_r4dagger(), ClassTag::srlbs, 4, false); }},
      {2, "r4plus-sound-shs", [] { return run_soundness(calculus_r4plus(), ClassTag::alg_plus, 4, true); }},
      {2, "separating-scheme", run_separating_scheme},
      {3, "representation-sha3", [] { return run_representation(ClassTag::sha, FilterKind::implicative); }},
      {3, "representation-srs3", [] { return run_representation(ClassTag::srs, FilterKind::lattice); }},
      {4, "bracket-laws", run_bracket_laws},
      {4, "bracket-filter-generation", run_filter_generation},
      {5, "proof-corpus", run_proof_corpus},
      {5, "deduction-iterated", run_deduction_iterated},
      {6, "fmp-h1-sha-shrink", run_fmp_sha},
      {6, "fmp-srlbs-N-shrink", run_fmp_srlbs_n},
      {6, "fmp-agreement-scan", run_fmp_agreement_scan},
      {7, "box-laws-sha4", run_box_laws},
      {7, "s1-s2-srl4", run_s1_s2},
      {8, "appendix-equivalence", run_appendix_equivalence},
  };
  return items;
}

std::vector<SuiteItemResult> run_paper_suite() {
  std::vector<SuiteItemResult> results;
  for (const SuiteItem& item : paper_suite_items()) {
    SuiteItemResult r;
    r.criterion = item.criterion;
    r.id = item.id;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = item.run();
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace sublat
