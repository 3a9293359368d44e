#pragma once

#include <optional>
#include <vector>

#include "sublat/algebra.hpp"
#include "sublat/lattice.hpp"

namespace sublat {

/// A carrier lattice (or bounded meet-semilattice) with a designated subset D.
struct AlgebraPair {
  FiniteLattice lattice;
  std::vector<int> designated;  // sorted element indices
};

/// a -> b := max{d in D : d /\ a <= b}.  D must be a bounded sublattice; the
/// result passes check_srl when the lattice is distributive and check_srlbs
/// otherwise.  Throws NoMaximumError when some E_ab has no greatest element
/// (possible only for non-distributive lattices).
FiniteAlgebra build_implication(const AlgebraPair& pair);

/// Non-throwing variant; on failure returns nullopt and reports the cell.
std::optional<FiniteAlgebra> try_build_implication(const AlgebraPair& pair, std::pair<int, int>* failed_cell = nullptr);

/// Semilattice version: the lattice may lack a join table, D only needs to be
/// a sub-meet-semilattice containing top.  The result passes check_srs.
FiniteAlgebra build_srs_pair(const AlgebraPair& pair);
std::optional<FiniteAlgebra> try_build_srs_pair(const AlgebraPair& pair, std::pair<int, int>* failed_cell = nullptr);

/// a -> b := top if a <= b else bottom.  Satisfies A1-A6 on every bounded
/// lattice, distributive or not; equals build_implication with D = {0, 1}.
FiniteAlgebra two_srl(const FiniteLattice& lattice);

/// Recovers the pair from an srl/srlbs member: underlying lattice plus
/// D = box A.  Round trip: build_implication(extract_pair(A)) == A on imp.
AlgebraPair extract_pair(const FiniteAlgebra& algebra);

}  // namespace sublat
