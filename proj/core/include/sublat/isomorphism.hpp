#pragma once

#include <optional>
#include <vector>

#include "sublat/algebra.hpp"

namespace sublat {

/// A bijection commuting with all operations and constants, or nullopt.
/// Requires equal signatures; algebras of different size have none.
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Canonical key for dedup up to isomorphism: the lexicographically minimal
/// flattening of the operation tables over all carrier permutations fixing the
/// constants.  Equal keys iff constant-compatible isomorphic.
std::vector<int> canonical_key(const FiniteAlgebra& algebra);

/// Flattening used by canonical_key, in signature order imp, meet, join, neg.
std::vector<int> flatten_ops(const FiniteAlgebra& algebra);

/// Relabel the algebra along perm (perm[i] = new index of element i).
FiniteAlgebra relabel(const FiniteAlgebra& algebra, const std::vector<int>& perm);

}  // namespace sublat
