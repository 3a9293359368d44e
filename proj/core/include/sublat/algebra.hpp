#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sublat/lattice.hpp"
#include "sublat/op_table.hpp"
#include "sublat/poset.hpp"

namespace sublat {

/// Which operations and constants an algebra populates.
struct Signature {
  bool imp = true;  // always present
  bool meet = false;
  bool join = false;
  bool neg = false;
  bool top = true;  // always present
  bool bottom = false;

  bool covers(const Signature& needed) const {
    return (!needed.imp || imp) && (!needed.meet || meet) && (!needed.join || join) && (!needed.neg || neg) &&
           (!needed.top || top) && (!needed.bottom || bottom);
  }
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string signature_to_string(const Signature& sig);

/// Finite algebra on {0, ..., size-1}: -> is mandatory, everything else per
/// signature.  Tables are plain data; structural laws (lattice axioms, order
/// recovery) are the business of the class checkers and loaders.
class FiniteAlgebra {
 public:
  int size = 0;
  OpTable imp;
  std::optional<OpTable> meet;
  std::optional<OpTable> join;
  std::optional<UnTable> neg;
  int top = 0;
  std::optional<int> bottom;
  std::optional<std::vector<std::string>> names;

  Signature signature() const {
    return Signature{true, meet.has_value(), join.has_value(), neg.has_value(), true, bottom.has_value()};
  }

  /// Shape-level validation: table sizes, value ranges, constant indices.
  void validate_shape() const;

  std::string element_name(int i) const;

  friend auto operator<=>(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

/// Copy with only the operations of `keep` populated.  Dropping imp or top is
/// not possible.
FiniteAlgebra reduct(const FiniteAlgebra& algebra, const Signature& keep);

/// Copy extended with the derived negation ~x := x -> bottom (and the derived
/// bottom when absent but a least lattice element exists).  Throws when no
/// bottom can be found.
FiniteAlgebra with_derived_neg(const FiniteAlgebra& algebra);

/// The relation a <= b iff a->b = top.  Throws NotAnOrderError naming the
/// broken law (reflexivity/antisymmetry/transitivity) with a witness.
FinitePoset natural_order(const FiniteAlgebra& algebra);

/// Non-throwing variant; defect (when present) carries the broken law.
std::optional<FinitePoset> try_natural_order(const FiniteAlgebra& algebra, std::string* reason = nullptr,
                                             std::vector<int>* witness = nullptr);

/// View of the algebra's meet/join/top/bottom as a FiniteLattice, with the
/// order derived from meet.  Throws ValidationError if meet is absent or the
/// tables do not form a (semi)lattice consistent with that order.
FiniteLattice underlying_lattice(const FiniteAlgebra& algebra);

}  // namespace sublat
