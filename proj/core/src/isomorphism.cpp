#include "sublat/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace sublat {

FiniteAlgebra relabel(const FiniteAlgebra& algebra, const std::vector<int>& perm) {
  const int n = algebra.size;
  FiniteAlgebra out;
  out.size = n;
  out.imp = OpTable(n);
  if (algebra.meet) out.meet = OpTable(n);
  if (algebra.join) out.join = OpTable(n);
  if (algebra.neg) out.neg = UnTable(n);
  for (int x = 0; x < n; ++x) {
    if (algebra.neg) out.neg->at(perm[x]) = perm[(*algebra.neg)(x)];
    for (int y = 0; y < n; ++y) {
      out.imp.at(perm[x], perm[y]) = perm[algebra.imp(x, y)];
      if (algebra.meet) out.meet->at(perm[x], perm[y]) = perm[(*algebra.meet)(x, y)];
      if (algebra.join) out.join->at(perm[x], perm[y]) = perm[(*algebra.join)(x, y)];
    }
  }
  out.top = perm[algebra.top];
  if (algebra.bottom) out.bottom = perm[*algebra.bottom];
  if (algebra.names) {
    out.names = std::vector<std::string>(n);
    for (int i = 0; i < n; ++i) (*out.names)[perm[i]] = (*algebra.names)[i];
  }
  return out;
}

std::vector<int> flatten_ops(const FiniteAlgebra& algebra) {
  std::vector<int> flat = algebra.imp.cells();
  auto add = [&](const std::vector<int>& cells) { flat.insert(flat.end(), cells.begin(), cells.end()); };
  if (algebra.meet) add(algebra.meet->cells());
  if (algebra.join) add(algebra.join->cells());
  if (algebra.neg) add(algebra.neg->cells());
  return flat;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature()) throw ValidationError("find_isomorphism: signatures differ");
  if (a.size != b.size) return std::nullopt;
  const int n = a.size;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // carriers are tiny; try every bijection in lexicographic order
  do {
    if (perm[a.top] != b.top) continue;
    if (a.bottom && perm[*a.bottom] != *b.bottom) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (a.neg && perm[(*a.neg)(x)] != (*b.neg)(perm[x])) ok = false;
      for (int y = 0; y < n && ok; ++y) {
        if (perm[a.imp(x, y)] != b.imp(perm[x], perm[y])) ok = false;
        if (a.meet && perm[(*a.meet)(x, y)] != (*b.meet)(perm[x], perm[y])) ok = false;
        if (a.join && perm[(*a.join)(x, y)] != (*b.join)(perm[x], perm[y])) ok = false;
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<int> canonical_key(const FiniteAlgebra& algebra) {
  const int n = algebra.size;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<int>> best;
  do {
    if (perm[algebra.top] != algebra.top) continue;
    if (algebra.bottom && perm[*algebra.bottom] != *algebra.bottom) continue;
    std::vector<int> key = flatten_ops(relabel(algebra, perm));
    if (!best || key < *best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace sublat
