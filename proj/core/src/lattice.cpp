#include "sublat/lattice.hpp"

#include <algorithm>
#include <set>

namespace sublat {

void FiniteLattice::validate() const {
  poset.validate();
  const int n = size();
  if (meet.size() != n || !meet.in_range()) throw ValidationError("meet table has wrong shape or range");
  if (join && (join->size() != n || !join->in_range()))
    throw ValidationError("join table has wrong shape or range");
  if (top < 0 || top >= n) throw ValidationError("top index out of range");
  if (bottom && (*bottom < 0 || *bottom >= n)) throw ValidationError("bottom index out of range");

  for (int a = 0; a < n; ++a) {
    if (!poset.le(a, top)) throw ValidationError("top is not greatest: misses " + std::to_string(a));
    if (bottom && !poset.le(*bottom, a))
      throw ValidationError("bottom is not least: misses " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto g = poset.glb(a, b);
      if (!g || meet(a, b) != *g)
        throw ValidationError("meet(" + std::to_string(a) + "," + std::to_string(b) +
                              ") is not the infimum under leq");
      if (join) {
        auto l = poset.lub(a, b);
        if (!l || (*join)(a, b) != *l)
          throw ValidationError("join(" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not the supremum under leq");
      }
    }
}

FiniteLattice lattice_from_poset(const FinitePoset& poset, bool require_join) {
  poset.validate();
  const int n = poset.size();
  FiniteLattice out;
  out.poset = poset;
  out.meet = OpTable(n);
  bool have_join = true;
  OpTable join(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto g = poset.glb(a, b);
      if (!g)
        throw ValidationError("no infimum for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      out.meet.at(a, b) = *g;
      auto l = poset.lub(a, b);
      if (l)
        join.at(a, b) = *l;
      else if (require_join)
        throw ValidationError("no supremum for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      else
        have_join = false;
    }
  if (have_join) out.join = std::move(join);
  auto t = poset.greatest();
  if (!t) throw ValidationError("poset has no greatest element");
  out.top = *t;
  out.bottom = poset.least();
  return out;
}

bool is_distributive(const FiniteLattice& lattice) {
  const int n = lattice.size();
  const OpTable& m = lattice.meet;
  const OpTable& j = *lattice.join;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) return false;
  return true;
}

std::vector<int> generated_sublattice(const FiniteLattice& lattice, const std::vector<int>& seed, bool bounded) {
  std::set<int> closure(seed.begin(), seed.end());
  if (bounded) {
    closure.insert(lattice.top);
    if (lattice.bottom) closure.insert(*lattice.bottom);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int a : current)
      for (int b : current) {
        if (closure.insert(lattice.meet(a, b)).second) grew = true;
        if (lattice.join && closure.insert((*lattice.join)(a, b)).second) grew = true;
      }
  }
  return {closure.begin(), closure.end()};
}

std::vector<int> generated_subsemilattice(const FiniteLattice& lattice, const std::vector<int>& seed) {
  std::set<int> closure(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int a : current)
      for (int b : current)
        if (closure.insert(lattice.meet(a, b)).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

bool is_sublattice(const FiniteLattice& lattice, const std::vector<int>& subset, bool bounded) {
  std::set<int> in(subset.begin(), subset.end());
  for (int x : subset)
    if (x < 0 || x >= lattice.size()) return false;
  if (bounded) {
    if (!in.count(lattice.top)) return false;
    if (lattice.bottom && !in.count(*lattice.bottom)) return false;
  }
  for (int a : subset)
    for (int b : subset) {
      if (!in.count(lattice.meet(a, b))) return false;
      if (lattice.join && !in.count((*lattice.join)(a, b))) return false;
    }
  return true;
}

bool is_subsemilattice_with_top(const FiniteLattice& lattice, const std::vector<int>& subset) {
  std::set<int> in(subset.begin(), subset.end());
  if (!in.count(lattice.top)) return false;
  for (int a : subset)
    for (int b : subset)
      if (!in.count(lattice.meet(a, b))) return false;
  return true;
}

int UpsetFamily::index_of(uint32_t set) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), set);
  if (it == sets.end() || *it != set) return -1;
  return static_cast<int>(it - sets.begin());
}

UpsetFamily upsets(const FinitePoset& poset, int cap) {
  const int n = poset.size();
  if (n > cap || n > 31)
    throw CapExceeded("upsets: base poset size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  // closure masks: up[i] = {j : i <= j}
  std::vector<uint32_t> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (poset.le(i, j)) up[i] |= (1u << j);

  UpsetFamily fam;
  const uint32_t full = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);
  for (uint32_t s = 0;; ++s) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      if ((s >> i) & 1u) closed = (s & up[i]) == up[i];
    if (closed) fam.sets.push_back(s);
    if (s == full) break;
  }

  const int m = static_cast<int>(fam.sets.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((fam.sets[a] & fam.sets[b]) == fam.sets[a]) leq[static_cast<size_t>(a) * m + b] = 1;
  fam.lattice.poset = FinitePoset(m, std::move(leq));
  fam.lattice.meet = OpTable(m);
  OpTable join(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      fam.lattice.meet.at(a, b) = fam.index_of(fam.sets[a] & fam.sets[b]);
      join.at(a, b) = fam.index_of(fam.sets[a] | fam.sets[b]);
    }
  fam.lattice.join = std::move(join);
  fam.lattice.top = fam.index_of(full);
  fam.lattice.bottom = fam.index_of(0);
  return fam;
}

FinitePoset restrict_poset(const FinitePoset& poset, const std::vector<int>& carrier) {
  std::vector<int> sorted = carrier;
  std::sort(sorted.begin(), sorted.end());
  const int m = static_cast<int>(sorted.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (poset.le(sorted[a], sorted[b])) leq[static_cast<size_t>(a) * m + b] = 1;
  return FinitePoset(m, std::move(leq));
}

}  // namespace sublat
