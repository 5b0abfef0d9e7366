#pragma once

// Integer partitions, Young-diagram cells, skew shapes and enumeration.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sjack/algebra.hpp"

namespace sjack {

/// Weakly decreasing sequence of positive parts.  Trailing zeros are dropped
/// on construction; indexing past the length yields 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless the parts are weakly decreasing and
  /// nonnegative.
  explicit Partition(std::vector<int> parts);

  /// "4,2,1"; the empty partition is "" or "0".
  static Partition parse(std::string_view text);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-indexed part; 0 beyond the length.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Enumeration order: size ascending, then parts lexicographically descending.
bool enumeration_less(const Partition& a, const Partition& b);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// A box (row, col) of a diagram, 1-indexed.
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline Cell transpose(Cell s) { return {s.col, s.row}; }

struct SkewShape {
  Partition outer;
  Partition inner;
};

bool contains(const Partition& outer, const Partition& inner);
Partition conjugate(const Partition& p);

bool has_cell(const Partition& p, Cell s);
/// Throws std::out_of_range when s is not a cell of p.
int arm(const Partition& p, Cell s);
int leg(const Partition& p, Cell s);

/// Product over cells of (alpha*arm + leg + 1).
AlphaPoly hook_H(const Partition& p);
/// Product over cells of (alpha*arm + leg + alpha).
AlphaPoly hook_Hprime(const Partition& p);

/// All partitions obtained by adding one box, top row first.
std::vector<Partition> grow_by_one_box(const Partition& p);
/// All partitions obtained by removing one box, top row first.
std::vector<Partition> shrink_by_one_box(const Partition& p);

/// Throws std::invalid_argument if inner is not contained in outer.
bool is_horizontal_strip(const SkewShape& sk);
bool is_vertical_strip(const SkewShape& sk);

/// Partitions of exactly n, lexicographically descending.
std::vector<Partition> partitions_of(int n);
/// Partitions of size <= n in enumeration order.
std::vector<Partition> partitions_up_to(int n);
/// All rho with inner <= rho <= outer, in enumeration order.
std::vector<Partition> interval(const Partition& inner, const Partition& outer);

}  // namespace sjack

template <>
struct std::hash<sjack::Partition> {
  std::size_t operator()(const sjack::Partition& p) const noexcept { return sjack::PartitionHash{}(p); }
};
