#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sublat/algebra.hpp"

namespace sublat {

struct Fixture {
  std::string name;
  std::string description;
  FiniteAlgebra algebra;
  std::vector<std::string> member_of;      // class tags this fixture belongs to
  std::vector<std::string> not_member_of;  // class tags it provably fails
};

/// Built-in algebras: chain3-pair, two-elt-collapse, M, N, B2, boole2.
const std::vector<Fixture>& fixtures();

const Fixture& fixture(std::string_view name);

/// The collapse homomorphism from the ->-reduct of chain3-pair onto
/// two-elt-collapse: 0, 1 |-> a and m |-> b.
std::vector<int> collapse_map();

}  // namespace sublat
