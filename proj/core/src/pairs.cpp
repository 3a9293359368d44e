#include "sublat/pairs.hpp"

#include <algorithm>

#include "sublat/classes.hpp"

namespace sublat {

namespace {

// max E_ab where E_ab = {d in D : d /\ a <= b}; -1 when E_ab has no greatest element
int max_e_ab(const FiniteLattice& L, const std::vector<int>& D, int a, int b) {
  std::vector<int> e;
  for (int d : D)
    if (L.le(L.meet(d, a), b)) e.push_back(d);
  for (int candidate : e) {
    bool above_all = true;
    for (int other : e)
      if (!L.le(other, candidate)) {
        above_all = false;
        break;
      }
    if (above_all) return candidate;
  }
  return -1;
}

FiniteAlgebra assemble(const FiniteLattice& L, const std::vector<int>& D, std::pair<int, int>* failed_cell,
                       bool* ok) {
  const int n = L.size();
  FiniteAlgebra out;
  out.size = n;
  out.imp = OpTable(n);
  out.meet = L.meet;
  out.join = L.join;
  out.top = L.top;
  out.bottom = L.bottom;
  *ok = true;
  for (int a = 0; a < n && *ok; ++a)
    for (int b = 0; b < n; ++b) {
      int m = max_e_ab(L, D, a, b);
      if (m < 0) {
        if (failed_cell) *failed_cell = {a, b};
        *ok = false;
        break;
      }
      out.imp.at(a, b) = m;
    }
  return out;
}

}  // namespace

std::optional<FiniteAlgebra> try_build_implication(const AlgebraPair& pair, std::pair<int, int>* failed_cell) {
  const FiniteLattice& L = pair.lattice;
  L.validate();
  if (!L.join || !L.bottom) throw ValidationError("build_implication needs a bounded lattice");
  if (!is_sublattice(L, pair.designated, /*bounded=*/true))
    throw ValidationError("designated set is not a bounded sublattice");
  bool ok = false;
  FiniteAlgebra out = assemble(L, pair.designated, failed_cell, &ok);
  if (!ok) return std::nullopt;
  ClassVerdict verdict = is_distributive(L) ? check_srl(out) : check_srlbs(out);
  if (!verdict.member)
    throw Error("internal: pair construction produced a non-member (" + verdict.violations.front().axiom + ")");
  return out;
}

FiniteAlgebra build_implication(const AlgebraPair& pair) {
  std::pair<int, int> cell{-1, -1};
  auto out = try_build_implication(pair, &cell);
  if (!out) throw NoMaximumError(cell.first, cell.second);
  return *out;
}

std::optional<FiniteAlgebra> try_build_srs_pair(const AlgebraPair& pair, std::pair<int, int>* failed_cell) {
  const FiniteLattice& L = pair.lattice;
  L.validate();
  if (!is_subsemilattice_with_top(L, pair.designated))
    throw ValidationError("designated set is not a sub-meet-semilattice containing top");
  bool ok = false;
  FiniteAlgebra out = assemble(L, pair.designated, failed_cell, &ok);
  if (!ok) return std::nullopt;
  out.join.reset();
  out.bottom.reset();
  ClassVerdict verdict = check_srs(out);
  if (!verdict.member)
    throw Error("internal: SRS-pair construction produced a non-member (" + verdict.violations.front().axiom + ")");
  return out;
}

FiniteAlgebra build_srs_pair(const AlgebraPair& pair) {
  std::pair<int, int> cell{-1, -1};
  auto out = try_build_srs_pair(pair, &cell);
  if (!out) throw NoMaximumError(cell.first, cell.second);
  return *out;
}

FiniteAlgebra two_srl(const FiniteLattice& lattice) {
  lattice.validate();
  if (!lattice.join || !lattice.bottom) throw ValidationError("two_srl needs a bounded lattice");
  const int n = lattice.size();
  FiniteAlgebra out;
  out.size = n;
  out.imp = OpTable(n);
  out.meet = lattice.meet;
  out.join = lattice.join;
  out.top = lattice.top;
  out.bottom = lattice.bottom;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.imp.at(a, b) = lattice.le(a, b) ? lattice.top : *lattice.bottom;
  for (const char* label : {"A1", "A2", "A3", "A4", "A5", "A6"}) {
    for (const AxiomDef& ax : class_axioms(ClassTag::srl))
      if (ax.label == label) {
        std::vector<int> tuple(ax.arity, 0);
        while (true) {
          if (!ax.holds(out, tuple.data()))
            throw Error(std::string("internal: two_srl output violates ") + label);
          int k = ax.arity - 1;
          while (k >= 0 && tuple[k] == n - 1) tuple[k--] = 0;
          if (k < 0) break;
          ++tuple[k];
        }
      }
  }
  return out;
}

AlgebraPair extract_pair(const FiniteAlgebra& algebra) {
  AlgebraPair pair;
  pair.lattice = underlying_lattice(algebra);
  pair.designated = box_set(algebra);
  return pair;
}

}  // namespace sublat
