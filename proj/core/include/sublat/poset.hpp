#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sublat/errors.hpp"

namespace sublat {

/// Finite partial order on {0, ..., size-1} with an explicit relation table.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(int size, std::vector<uint8_t> leq) : size_(size), leq_(std::move(leq)) {}

  /// Builds the reflexive-transitive closure of the given pairs, then validates
  /// antisymmetry.  Throws ValidationError on a cycle.
  static FinitePoset from_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return size_; }
  bool le(int a, int b) const { return leq_[static_cast<size_t>(a) * size_ + b] != 0; }
  void set_le(int a, int b, bool v) { leq_[static_cast<size_t>(a) * size_ + b] = v ? 1 : 0; }
  const std::vector<uint8_t>& relation() const { return leq_; }

  /// nullopt when the relation is a partial order, otherwise a description.
  std::optional<std::string> defect() const;
  void validate() const;  // throws ValidationError on defect

  std::optional<int> greatest() const;
  std::optional<int> least() const;

  /// Greatest lower / least upper bound of {a, b}, if one exists.
  std::optional<int> glb(int a, int b) const;
  std::optional<int> lub(int a, int b) const;

  friend auto operator<=>(const FinitePoset&, const FinitePoset&) = default;

 private:
  int size_ = 0;
  std::vector<uint8_t> leq_;  // row-major size*size
};

}  // namespace sublat
