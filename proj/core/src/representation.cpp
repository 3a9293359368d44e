#include "sublat/representation.hpp"

#include <algorithm>

#include "sublat/classes.hpp"
#include "sublat/pairs.hpp"

namespace sublat {

UpsetAlgebra build_upset_algebra(const FiniteAlgebra& algebra, FilterKind kind, const RepresentationCaps& caps) {
  UpsetAlgebra ua;
  ua.filters = (kind == FilterKind::implicative) ? all_implicative_filters(algebra, caps.filter_carrier)
                                                 : all_lattice_filters(algebra, caps.filter_carrier);
  const int fcount = static_cast<int>(ua.filters.filters.size());

  // filter poset under inclusion
  std::vector<uint8_t> leq(static_cast<size_t>(fcount) * fcount, 0);
  for (int i = 0; i < fcount; ++i)
    for (int k = 0; k < fcount; ++k)
      if ((ua.filters.filters[i] & ua.filters.filters[k]) == ua.filters.filters[i])
        leq[static_cast<size_t>(i) * fcount + k] = 1;
  FinitePoset filter_poset(fcount, std::move(leq));

  ua.upset_family = upsets(filter_poset, caps.upsets_base);
  const FiniteLattice& lat = ua.upset_family.lattice;

  // j(a) = {F : a in F}
  ua.j.assign(algebra.size, -1);
  for (int a = 0; a < algebra.size; ++a) {
    uint32_t mask = 0;
    for (int i = 0; i < fcount; ++i)
      if ((ua.filters.filters[i] >> a) & 1u) mask |= 1u << i;
    ua.j[a] = ua.upset_family.index_of(mask);
    if (ua.j[a] < 0) throw Error("internal: j(a) is not an upset of the filter poset");
  }

  // D = bounded sublattice generated by j(box A)
  std::vector<int> seed;
  for (int d : box_set(algebra)) seed.push_back(ua.j[d]);
  ua.designated = generated_sublattice(lat, seed, /*bounded=*/true);

  FiniteLattice d_lattice = lattice_from_poset(restrict_poset(lat.poset, ua.designated));
  if (!is_distributive(d_lattice)) throw Error("internal: generated D is not distributive");

  // residuum by max-scan over D, cross-checked against the union formula
  const int m = lat.size();
  OpTable residuum(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      const uint32_t us = ua.upset_family.sets[u], vs = ua.upset_family.sets[v];
      int best = -1;
      uint32_t union_of_candidates = 0;
      for (int w : ua.designated) {
        const uint32_t ws = ua.upset_family.sets[w];
        if ((ws & us & ~vs) != 0) continue;  // W n U not inside V
        union_of_candidates |= ws;
        if (best < 0 || (ua.upset_family.sets[best] & ws) == ua.upset_family.sets[best]) best = w;
      }
      if (best < 0 || ua.upset_family.sets[best] != union_of_candidates)
        throw Error("internal: residuum max-scan disagrees with the union formula");
      residuum.at(u, v) = best;
    }

  ua.algebra.size = m;
  ua.algebra.imp = std::move(residuum);
  ua.algebra.meet = lat.meet;
  ua.algebra.join = lat.join;
  ua.algebra.top = lat.top;
  ua.algebra.bottom = lat.bottom;

  ClassVerdict verdict = check_srl(ua.algebra);
  if (!verdict.member)
    throw Error("internal: (upset lattice, D) fails check_srl at " + verdict.violations.front().axiom);
  return ua;
}

RepresentationReport verify_representation(const FiniteAlgebra& algebra, FilterKind kind,
                                           const RepresentationCaps& caps) {
  UpsetAlgebra ua = build_upset_algebra(algebra, kind, caps);
  RepresentationReport report;
  report.filter_count = static_cast<int>(ua.filters.filters.size());
  report.upset_count = ua.algebra.size;
  report.designated_count = static_cast<int>(ua.designated.size());

  auto fail = [&](std::string msg) {
    report.pass = false;
    report.failures.push_back(std::move(msg));
  };

  const FiniteLattice& lat = ua.upset_family.lattice;
  for (int a = 0; a < algebra.size; ++a)
    for (int b = 0; b < algebra.size; ++b) {
      if (a != b && ua.j[a] == ua.j[b]) fail("j not injective at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      const bool le_a = algebra.imp(a, b) == algebra.top;
      if (le_a != lat.le(ua.j[a], ua.j[b]))
        fail("j not an order embedding at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (ua.j[algebra.imp(a, b)] != ua.algebra.imp(ua.j[a], ua.j[b]))
        fail("j(a->b) != j(a) => j(b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (kind == FilterKind::lattice) {
        if (ua.j[(*algebra.meet)(a, b)] != (*ua.algebra.meet)(ua.j[a], ua.j[b]))
          fail("j(a/\\b) != j(a) n j(b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  return report;
}

}  // namespace sublat
