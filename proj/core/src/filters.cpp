#include "sublat/filters.hpp"

#include <algorithm>

#include "sublat/classes.hpp"

namespace sublat {

int FilterFamily::index_of(uint32_t filter) const {
  auto it = std::lower_bound(filters.begin(), filters.end(), filter);
  if (it == filters.end() || *it != filter) return -1;
  return static_cast<int>(it - filters.begin());
}

std::vector<int> FilterFamily::elements(int filter_index) const {
  std::vector<int> out;
  for (int i = 0; i < carrier_size; ++i)
    if ((filters[filter_index] >> i) & 1u) out.push_back(i);
  return out;
}

int bracket(const std::vector<int>& xs, int a, const FiniteAlgebra& algebra) {
  int acc = a;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = algebra.imp(*it, acc);
  return acc;
}

bool is_implicative_filter(const FiniteAlgebra& algebra, uint32_t subset) {
  if (!((subset >> algebra.top) & 1u)) return false;
  for (int a = 0; a < algebra.size; ++a) {
    if (!((subset >> a) & 1u)) continue;
    for (int b = 0; b < algebra.size; ++b)
      if (((subset >> algebra.imp(a, b)) & 1u) && !((subset >> b) & 1u)) return false;
  }
  return true;
}

bool is_lattice_filter(const FiniteAlgebra& algebra, uint32_t subset) {
  if (subset == 0) return false;
  const OpTable& meet = *algebra.meet;
  for (int a = 0; a < algebra.size; ++a) {
    if (!((subset >> a) & 1u)) continue;
    for (int b = 0; b < algebra.size; ++b) {
      if ((subset >> b) & 1u) {
        if (!((subset >> meet(a, b)) & 1u)) return false;  // meet-closed
      }
      if (meet(a, b) == a && !((subset >> b) & 1u)) return false;  // up-closed: a <= b
    }
  }
  return true;
}

namespace {

FilterFamily scan_filters(const FiniteAlgebra& algebra, FilterKind kind, int cap) {
  if (algebra.size > cap)
    throw CapExceeded("filter enumeration: carrier size " + std::to_string(algebra.size) + " exceeds cap " +
                      std::to_string(cap));
  if (kind == FilterKind::lattice && !algebra.meet)
    throw ValidationError("lattice filters need a meet table");
  FilterFamily fam;
  fam.kind = kind;
  fam.carrier_size = algebra.size;
  const uint32_t full = (1u << algebra.size) - 1;
  for (uint32_t s = 0;; ++s) {
    const bool ok =
        (kind == FilterKind::implicative) ? is_implicative_filter(algebra, s) : is_lattice_filter(algebra, s);
    if (ok) fam.filters.push_back(s);
    if (s == full) break;
  }
  return fam;
}

}  // namespace

FilterFamily all_implicative_filters(const FiniteAlgebra& algebra, int cap) {
  return scan_filters(algebra, FilterKind::implicative, cap);
}

FilterFamily all_lattice_filters(const FiniteAlgebra& algebra, int cap) {
  return scan_filters(algebra, FilterKind::lattice, cap);
}

std::vector<int> generated_implicative_filter(const FiniteAlgebra& algebra, const std::vector<int>& seed) {
  std::vector<uint8_t> in(algebra.size, 0);
  in[algebra.top] = 1;
  for (int x : seed) in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < algebra.size; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < algebra.size; ++b)
        if (in[algebra.imp(a, b)] && !in[b]) {
          in[b] = 1;
          grew = true;
        }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < algebra.size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<int> generated_lattice_filter(const FiniteAlgebra& algebra, const std::vector<int>& seed) {
  const OpTable& meet = *algebra.meet;
  std::vector<uint8_t> in(algebra.size, 0);
  in[algebra.top] = 1;
  for (int x : seed) in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < algebra.size; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < algebra.size; ++b) {
        if (in[b] && !in[meet(a, b)]) {
          in[meet(a, b)] = 1;
          grew = true;
        }
        if (meet(a, b) == a && !in[b]) {  // up-closure
          in[b] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < algebra.size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<int> bracket_generated_filter(const FiniteAlgebra& algebra, const std::vector<int>& box_subset, int a) {
  // liftable[t]: some [x1..xk, t] = top with xi in box_subset (k >= 0)
  std::vector<uint8_t> liftable(algebra.size, 0);
  liftable[algebra.top] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int t = 0; t < algebra.size; ++t) {
      if (liftable[t]) continue;
      for (int x : box_subset)
        if (liftable[algebra.imp(x, t)]) {
          liftable[t] = 1;
          grew = true;
          break;
        }
    }
  }
  std::vector<int> out;
  for (int b = 0; b < algebra.size; ++b)
    if (liftable[algebra.imp(a, b)]) out.push_back(b);
  return out;
}

std::vector<int> separate(const FiniteAlgebra& algebra, const std::vector<int>& filter, int a, int b) {
  std::vector<uint8_t> in_f(algebra.size, 0);
  uint32_t mask = 0;
  for (int x : filter) {
    in_f[x] = 1;
    mask |= 1u << x;
  }
  if (!is_implicative_filter(algebra, mask))
    throw ValidationError("separate: F is not an implicative filter");
  if (in_f[algebra.imp(a, b)])
    throw ValidationError("separate: a->b already lies in the filter");
  std::vector<int> box = box_set(algebra);
  std::vector<int> seed;
  for (int x : box)
    if (in_f[x]) seed.push_back(x);
  seed.push_back(a);
  std::vector<int> g = generated_implicative_filter(algebra, seed);
  // postconditions of the separation lemma
  std::vector<uint8_t> in_g(algebra.size, 0);
  for (int x : g) in_g[x] = 1;
  if (!in_g[a] || in_g[b])
    throw Error("internal: separation postcondition failed");
  for (int x : box)
    if (in_f[x] && !in_g[x]) throw Error("internal: separation lost part of F n box A");
  return g;
}

}  // namespace sublat
