#pragma once

#include <cstdint>
#include <vector>

#include "sublat/algebra.hpp"

namespace sublat {

enum class FilterKind { implicative, lattice };

/// The complete family of (implicative or lattice) filters of a finite
/// algebra, each as a carrier bitmask, in ascending bitmask order.
struct FilterFamily {
  FilterKind kind = FilterKind::implicative;
  int carrier_size = 0;
  std::vector<uint32_t> filters;

  int index_of(uint32_t filter) const;
  std::vector<int> elements(int filter_index) const;
};

/// [x1, ..., xk, a] = x1 -> (x2 -> (... -> (xk -> a))).  bracket({}, a) = a.
int bracket(const std::vector<int>& xs, int a, const FiniteAlgebra& algebra);

/// Subsets containing top and closed under modus ponens, by subset scan.
/// Throws CapExceeded when the carrier exceeds cap.
FilterFamily all_implicative_filters(const FiniteAlgebra& algebra, int cap = 6);

/// Nonempty up-closed meet-closed subsets (the order comes from meet).
FilterFamily all_lattice_filters(const FiniteAlgebra& algebra, int cap = 6);

bool is_implicative_filter(const FiniteAlgebra& algebra, uint32_t subset);
bool is_lattice_filter(const FiniteAlgebra& algebra, uint32_t subset);

/// Least implicative filter containing seed, by closure iteration.
std::vector<int> generated_implicative_filter(const FiniteAlgebra& algebra, const std::vector<int>& seed);

/// Least lattice filter containing seed (up-closure + meet-closure).
std::vector<int> generated_lattice_filter(const FiniteAlgebra& algebra, const std::vector<int>& seed);

/// The bracket characterization of <X u {a}> for X subseteq box A with top in
/// X: {b : [x1..xk, a, b] = top for some x1..xk in X}.  Computed as a
/// fixpoint; compared against closure-based generation in tests.
std::vector<int> bracket_generated_filter(const FiniteAlgebra& algebra, const std::vector<int>& box_subset, int a);

/// Given a->b not in F, the filter G = <(F n box A) u {a}>; asserts a in G,
/// b not in G, F n box A subseteq G and throws on precondition violation.
std::vector<int> separate(const FiniteAlgebra& algebra, const std::vector<int>& filter, int a, int b);

}  // namespace sublat
