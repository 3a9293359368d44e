#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sublat/op_table.hpp"
#include "sublat/poset.hpp"

namespace sublat {

/// Finite (semi)lattice: an order plus explicit operation tables.
///
/// meet is always present; join and bottom are optional so that bounded
/// meet-semilattices fit the same type.  Tables are validated against the
/// order by validate(), never derived lazily.
class FiniteLattice {
 public:
  FinitePoset poset;
  OpTable meet;
  std::optional<OpTable> join;
  int top = 0;
  std::optional<int> bottom;

  int size() const { return poset.size(); }
  bool le(int a, int b) const { return poset.le(a, b); }
  bool has_join() const { return join.has_value(); }

  /// Checks meet = infimum, join = supremum, top greatest, bottom least.
  /// Throws ValidationError with the offending pair on mismatch.
  void validate() const;

  friend auto operator<=>(const FiniteLattice&, const FiniteLattice&) = default;
};

/// Derives meet/join tables from the order.  require_join=false accepts bounded
/// meet-semilattices; otherwise every pair must have both bounds.
FiniteLattice lattice_from_poset(const FinitePoset& poset, bool require_join = true);

/// True iff a /\ (b \/ c) = (a /\ b) \/ (a /\ c) for all triples.  Requires join.
bool is_distributive(const FiniteLattice& lattice);

/// Least subset of the carrier containing seed (plus top and bottom when
/// bounded) closed under meet and join (join only when present), by closure
/// iteration to fixpoint.  Returned sorted ascending.
std::vector<int> generated_sublattice(const FiniteLattice& lattice, const std::vector<int>& seed, bool bounded);

/// Meet-closure only; used for semilattice subalgebras.
std::vector<int> generated_subsemilattice(const FiniteLattice& lattice, const std::vector<int>& seed);

/// True iff subset is closed under meet and join (and contains top/bottom when
/// bounded = true).
bool is_sublattice(const FiniteLattice& lattice, const std::vector<int>& subset, bool bounded);

/// True iff subset is meet-closed and contains top.
bool is_subsemilattice_with_top(const FiniteLattice& lattice, const std::vector<int>& subset);

/// The lattice of all upsets of a poset, ordered by inclusion with meet =
/// intersection and join = union.  sets[i] is the bitmask of element i.
struct UpsetFamily {
  std::vector<uint32_t> sets;  // ascending bitmask order
  FiniteLattice lattice;

  int index_of(uint32_t set) const;
};

/// Enumerates all up-closed subsets.  Throws CapExceeded when poset.size() > cap.
UpsetFamily upsets(const FinitePoset& poset, int cap = 20);

/// Order restricted to a subset of the carrier, reindexed by sorted position.
FinitePoset restrict_poset(const FinitePoset& poset, const std::vector<int>& carrier);

}  // namespace sublat
