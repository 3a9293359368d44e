#pragma once

#include <compare>
#include <vector>

namespace sublat {

/// Total binary operation on a carrier {0, ..., size-1}, stored row-major.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(int size, int fill = 0) : size_(size), cells_(static_cast<size_t>(size) * size, fill) {}
  OpTable(int size, std::vector<int> cells) : size_(size), cells_(std::move(cells)) {}

  int size() const { return size_; }
  int operator()(int a, int b) const { return cells_[static_cast<size_t>(a) * size_ + b]; }
  int& at(int a, int b) { return cells_[static_cast<size_t>(a) * size_ + b]; }

  const std::vector<int>& cells() const { return cells_; }
  bool in_range() const {
    for (int v : cells_)
      if (v < 0 || v >= size_) return false;
    return true;
  }

  friend auto operator<=>(const OpTable&, const OpTable&) = default;

 private:
  int size_ = 0;
  std::vector<int> cells_;
};

/// Total unary operation on {0, ..., size-1}.
class UnTable {
 public:
  UnTable() = default;
  explicit UnTable(int size, int fill = 0) : cells_(static_cast<size_t>(size), fill) {}
  explicit UnTable(std::vector<int> cells) : cells_(std::move(cells)) {}

  int size() const { return static_cast<int>(cells_.size()); }
  int operator()(int a) const { return cells_[static_cast<size_t>(a)]; }
  int& at(int a) { return cells_[static_cast<size_t>(a)]; }

  const std::vector<int>& cells() const { return cells_; }
  bool in_range() const {
    for (int v : cells_)
      if (v < 0 || v >= size()) return false;
    return true;
  }

  friend auto operator<=>(const UnTable&, const UnTable&) = default;

 private:
  std::vector<int> cells_;
};

}  // namespace sublat
