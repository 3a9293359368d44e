#include "sublat/poset.hpp"

namespace sublat {

FinitePoset FinitePoset::from_pairs(int size, const std::vector<std::pair<int, int>>& pairs) {
  if (size <= 0) throw ValidationError("poset size must be positive");
  std::vector<uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (int i = 0; i < size; ++i) leq[static_cast<size_t>(i) * size + i] = 1;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw ValidationError("leq pair out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    leq[static_cast<size_t>(a) * size + b] = 1;
  }
  // transitive closure (Warshall)
  for (int k = 0; k < size; ++k)
    for (int a = 0; a < size; ++a)
      if (leq[static_cast<size_t>(a) * size + k])
        for (int b = 0; b < size; ++b)
          if (leq[static_cast<size_t>(k) * size + b]) leq[static_cast<size_t>(a) * size + b] = 1;
  FinitePoset p(size, std::move(leq));
  p.validate();
  return p;
}

std::optional<std::string> FinitePoset::defect() const {
  if (size_ <= 0) return "poset size must be positive";
  if (leq_.size() != static_cast<size_t>(size_) * size_) return "relation table has wrong shape";
  for (int a = 0; a < size_; ++a)
    if (!le(a, a)) return "reflexivity fails at " + std::to_string(a);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      if (a != b && le(a, b) && le(b, a))
        return "antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (le(a, b))
        for (int c = 0; c < size_; ++c)
          if (le(b, c) && !le(a, c))
            return "transitivity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
    }
  return std::nullopt;
}

void FinitePoset::validate() const {
  if (auto d = defect()) throw ValidationError(*d);
}

std::optional<int> FinitePoset::greatest() const {
  for (int t = 0; t < size_; ++t) {
    bool all = true;
    for (int a = 0; a < size_ && all; ++a) all = le(a, t);
    if (all) return t;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::least() const {
  for (int b = 0; b < size_; ++b) {
    bool all = true;
    for (int a = 0; a < size_ && all; ++a) all = le(b, a);
    if (all) return b;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::glb(int a, int b) const {
  for (int m = 0; m < size_; ++m) {
    if (!le(m, a) || !le(m, b)) continue;
    bool greatest_lb = true;
    for (int x = 0; x < size_ && greatest_lb; ++x)
      if (le(x, a) && le(x, b) && !le(x, m)) greatest_lb = false;
    if (greatest_lb) return m;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::lub(int a, int b) const {
  for (int j = 0; j < size_; ++j) {
    if (!le(a, j) || !le(b, j)) continue;
    bool least_ub = true;
    for (int x = 0; x < size_ && least_ub; ++x)
      if (le(a, x) && le(b, x) && !le(j, x)) least_ub = false;
    if (least_ub) return j;
  }
  return std::nullopt;
}

}  // namespace sublat
