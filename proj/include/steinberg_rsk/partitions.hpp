#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace srsk {

/// Raised when dominance is requested between partitions of different sizes.
class IncomparableSizes : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an integer count does not fit in 64 bits.
class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored; reads past the stored length return 0,
/// which makes componentwise formulas total.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Builds a partition from arbitrary nonnegative parts (sorted, zeros dropped).
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t row) const { return row < parts_.size() ? parts_[row] : 0; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A finite sequence of positive integers (content of a tableau, flag type).
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }
  std::size_t length() const { return parts_.size(); }
  int total() const;
  /// a_1 + ... + a_i
  int prefix_sum(std::size_t i) const;
  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

bool dominance_leq(const Partition& lhs, const Partition& rhs);
bool young_leq(const Partition& lhs, const Partition& rhs);
Partition add(const Partition& lhs, const Partition& rhs);
Partition conjugate(const Partition& p);

/// inner <= outer and at most one box added per row.
bool is_column_strip(const Partition& inner, const Partition& outer);
/// inner <= outer and at most one box added per column.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

/// |l|(|l|+1) - 2 * sum_i i*l(i)
std::int64_t nilpotent_orbit_dim(const Partition& p);

/// Standard Young tableaux of the given shape, counted by dynamic programming
/// over the Young lattice. Throws CountOverflow if the count exceeds 2^63-1.
std::int64_t count_syt(const Partition& p);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace srsk
