#pragma once

#include <string>
#include <vector>

#include "sublat/algebra.hpp"
#include "sublat/filters.hpp"
#include "sublat/lattice.hpp"

namespace sublat {

struct RepresentationCaps {
  int filter_carrier = 6;  // carrier size for filter enumeration
  int upsets_base = 20;    // filter-poset size for the upset lattice
};

/// The upset algebra over the filter poset: the lattice of upsets, the
/// designated sublattice D generated by j(box A), and the relative residuum
/// U => V = max{W in D : W n U subseteq V}.
struct UpsetAlgebra {
  FilterFamily filters;
  UpsetFamily upset_family;   // upsets of the filter poset (ordered by inclusion)
  std::vector<int> designated;  // indices into the upset lattice
  FiniteAlgebra algebra;        // lattice ops + the residuum table
  std::vector<int> j;           // j[a] = upset-lattice index of {F : a in F}
};

/// Builds the representation target for a sha (implicative filters) or an srs
/// (lattice filters).  Asserts along the way: D is closed and distributive,
/// every => cell is both the max-scan and the union of qualifying W, and the
/// (upset lattice, D) pair passes check_srl.
UpsetAlgebra build_upset_algebra(const FiniteAlgebra& algebra, FilterKind kind,
                                 const RepresentationCaps& caps = {});

struct RepresentationReport {
  bool pass = true;
  int filter_count = 0;
  int upset_count = 0;
  int designated_count = 0;
  std::vector<std::string> failures;  // expected empty; a failure is a bug, not a refutation
};

/// Checks j is injective, an order embedding, and commutes with -> (and with
/// /\ for the lattice kind) on all pairs.
RepresentationReport verify_representation(const FiniteAlgebra& algebra, FilterKind kind,
                                           const RepresentationCaps& caps = {});

}  // namespace sublat
