#pragma once

#include <vector>

#include "sublat/classes.hpp"
#include "sublat/lattice.hpp"

namespace sublat {

struct EnumerationCaps {
  int arrow_only = 4;     // sha, hilbert
  int lattice_backed = 5; // everything with a meet table
};

/// All partial orders on {0..n-1} with greatest element n-1, ascending
/// relation-mask order.
std::vector<FinitePoset> enumerate_posets_with_top(int n);

/// All lattices on {0..n-1} with bottom 0 and top n-1.
std::vector<FiniteLattice> enumerate_bounded_lattices(int n, int cap = 7);

/// All meet-semilattices on {0..n-1} with top n-1 and least element 0.
/// join is populated exactly when the order happens to be a lattice.
std::vector<FiniteLattice> enumerate_meet_semilattices(int n, int cap = 7);

/// Every algebra of carrier size n in the class, constants at canonical
/// indices (top = n-1, bottom = 0 where the class forces one), sorted by
/// flattened-table lexicographic order.  up_to_iso keeps one representative
/// per canonical_key.  Throws CapExceeded past the configured cap.
std::vector<FiniteAlgebra> enumerate_class(int n, ClassTag tag, bool up_to_iso, const EnumerationCaps& caps = {});

/// enumerate_class for every size 1..max_size, concatenated.
std::vector<FiniteAlgebra> enumerate_class_up_to(int max_size, ClassTag tag, bool up_to_iso,
                                                 const EnumerationCaps& caps = {});

}  // namespace sublat
