#include "sublat/fixtures.hpp"

namespace sublat {

namespace {

// 3-chain 0 < m < 1 with D = {0, 1}
Fixture chain3_pair() {
  Fixture f;
  f.name = "chain3-pair";
  f.description = "three-element chain 0 < m < 1 with designated sublattice {0, 1}";
  FiniteAlgebra& a = f.algebra;
  a.size = 3;
  a.names = std::vector<std::string>{"0", "m", "1"};
  a.top = 2;
  a.bottom = 0;
  a.meet = OpTable(3, {0, 0, 0, 0, 1, 1, 0, 1, 2});
  a.join = OpTable(3, {0, 1, 2, 1, 1, 2, 2, 2, 2});
  a.imp = OpTable(3, {2, 2, 2, 0, 2, 2, 0, 0, 2});
  f.member_of = {"sha", "srs", "srl", "srlbs", "shs", "shrl-appendix"};
  f.not_member_of = {"hilbert"};
  return f;
}

// two-element algebra with constant implication a; the collapse image
Fixture two_elt_collapse() {
  Fixture f;
  f.name = "two-elt-collapse";
  f.description = "carrier {a, b} with x -> y = a everywhere and 1 = a";
  FiniteAlgebra& a = f.algebra;
  a.size = 2;
  a.names = std::vector<std::string>{"a", "b"};
  a.top = 0;
  a.imp = OpTable(2, {0, 0, 0, 0});
  f.member_of = {};
  f.not_member_of = {"sha", "hilbert"};
  return f;
}

// diamond 0 < a, b, c < 1 (pairwise incomparable atoms), D = {0, b, 1}
Fixture m_algebra() {
  Fixture f;
  f.name = "M";
  f.description = "modular non-distributive five-element lattice with the designated sublattice {0, b, 1}";
  FiniteAlgebra& a = f.algebra;
  a.size = 5;
  a.names = std::vector<std::string>{"0", "a", "b", "c", "1"};
  a.top = 4;
  a.bottom = 0;
  // indices: 0, a=1, b=2, c=3, 1=4
  a.meet = OpTable(5, {0, 0, 0, 0, 0,
                       0, 1, 0, 0, 1,
                       0, 0, 2, 0, 2,
                       0, 0, 0, 3, 3,
                       0, 1, 2, 3, 4});
  a.join = OpTable(5, {0, 1, 2, 3, 4,
                       1, 1, 4, 4, 4,
                       2, 4, 2, 4, 4,
                       3, 4, 4, 3, 4,
                       4, 4, 4, 4, 4});
  a.imp = OpTable(5, {4, 4, 4, 4, 4,
                      2, 4, 2, 2, 4,
                      0, 0, 4, 0, 4,
                      2, 2, 2, 4, 4,
                      0, 0, 2, 0, 4});
  f.member_of = {"sha", "srs", "srlbs", "shs", "shrl-appendix"};
  f.not_member_of = {"srl", "hilbert"};
  return f;
}

// pentagon 0 < a < c < 1, 0 < b < 1, D = {0, a, 1}
Fixture n_algebra() {
  Fixture f;
  f.name = "N";
  f.description = "non-modular five-element lattice (pentagon) with the designated sublattice {0, a, 1}";
  FiniteAlgebra& a = f.algebra;
  a.size = 5;
  a.names = std::vector<std::string>{"0", "a", "b", "c", "1"};
  a.top = 4;
  a.bottom = 0;
  // indices: 0, a=1, b=2, c=3, 1=4; order 0 < a < c < 1 and 0 < b < 1
  a.meet = OpTable(5, {0, 0, 0, 0, 0,
                       0, 1, 0, 1, 1,
                       0, 0, 2, 0, 2,
                       0, 1, 0, 3, 3,
                       0, 1, 2, 3, 4});
  a.join = OpTable(5, {0, 1, 2, 3, 4,
                       1, 1, 4, 3, 4,
                       2, 4, 2, 4, 4,
                       3, 3, 4, 3, 4,
                       4, 4, 4, 4, 4});
  a.imp = OpTable(5, {4, 4, 4, 4, 4,
                      0, 4, 0, 4, 4,
                      1, 1, 4, 1, 4,
                      0, 1, 0, 4, 4,
                      0, 1, 0, 1, 4});
  f.member_of = {"sha", "srs", "srlbs", "shs", "shrl-appendix"};
  f.not_member_of = {"srl", "hilbert"};
  return f;
}

// 2x2 Boolean lattice with x -> y = (1 if x <= y else y)
Fixture b2_algebra() {
  Fixture f;
  f.name = "B2";
  f.description = "four-element Boolean lattice with the order-Hilbert implication x -> y = y off the order";
  FiniteAlgebra& a = f.algebra;
  a.size = 4;
  a.names = std::vector<std::string>{"0", "a", "b", "1"};
  a.top = 3;
  a.bottom = 0;
  // indices: 0, a=1, b=2, 1=3; a, b incomparable
  a.meet = OpTable(4, {0, 0, 0, 0,
                       0, 1, 0, 1,
                       0, 0, 2, 2,
                       0, 1, 2, 3});
  a.join = OpTable(4, {0, 1, 2, 3,
                       1, 1, 3, 3,
                       2, 3, 2, 3,
                       3, 3, 3, 3});
  a.imp = OpTable(4, {3, 3, 3, 3,
                      0, 3, 2, 3,
                      0, 1, 3, 3,
                      0, 1, 2, 3});
  f.member_of = {"sha", "hilbert", "shs", "shrl-appendix"};
  f.not_member_of = {"srs", "srlbs", "srl"};
  return f;
}

// two-element Boolean algebra, full signature
Fixture boole2() {
  Fixture f;
  f.name = "boole2";
  f.description = "two-element Boolean algebra with the classical implication";
  FiniteAlgebra& a = f.algebra;
  a.size = 2;
  a.names = std::vector<std::string>{"0", "1"};
  a.top = 1;
  a.bottom = 0;
  a.meet = OpTable(2, {0, 0, 0, 1});
  a.join = OpTable(2, {0, 1, 1, 1});
  a.imp = OpTable(2, {1, 1, 0, 1});
  a.neg = UnTable(std::vector<int>{1, 0});
  f.member_of = {"sha", "hilbert", "srs", "srl", "srlbs", "shs", "shrl-appendix", "alg-r4star", "alg-plus"};
  f.not_member_of = {};
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {chain3_pair(), two_elt_collapse(), m_algebra(),
                                           n_algebra(),  b2_algebra(),      boole2()};
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  throw ValidationError("no fixture named '" + std::string(name) + "'");
}

std::vector<int> collapse_map() { return {0, 1, 0}; }

}  // namespace sublat
