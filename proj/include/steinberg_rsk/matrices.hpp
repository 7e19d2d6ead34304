#pragma once

#include <utility>
#include <vector>

#include "steinberg_rsk/partitions.hpp"

namespace srsk {

/// A p x q 0/1 matrix with at most one 1 per row and per column.
/// Positions are 1-based (row in 1..p, column in 1..q).
class PartialPermutation {
 public:
  using Cell = std::pair<int, int>;

  PartialPermutation(int p, int q, std::vector<Cell> ones = {});

  int p() const { return p_; }
  int q() const { return q_; }
  /// Sorted by row.
  const std::vector<Cell>& ones() const { return ones_; }
  int rank() const { return static_cast<int>(ones_.size()); }
  int entry(int row, int col) const;
  std::vector<std::vector<int>> dense() const;

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
  friend auto operator<=>(const PartialPermutation&, const PartialPermutation&) = default;

 private:
  int p_;
  int q_;
  std::vector<Cell> ones_;
};

/// All partial permutations of size p x q; there are sum_k C(p,k) C(q,k) k! of them.
std::vector<PartialPermutation> enumerate_pp(int p, int q);

/// Nonnegative integer matrix with prescribed positive row and column sums.
class MarginMatrix {
 public:
  MarginMatrix() = default;
  explicit MarginMatrix(std::vector<std::vector<int>> entries);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return entries_.empty() ? cols_ : static_cast<int>(entries_[0].size()); }
  int operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  Composition row_margins() const;
  Composition col_margins() const;

  MarginMatrix transposed() const;
  MarginMatrix rows_reversed() const;
  MarginMatrix cols_reversed() const;
  MarginMatrix rotated() const;

  friend bool operator==(const MarginMatrix&, const MarginMatrix&) = default;

 private:
  std::vector<std::vector<int>> entries_;
  int cols_ = 0;
};

/// Every margin matrix with the given row and column sums.
std::vector<MarginMatrix> enumerate_margin_matrices(const Composition& row_margins, const Composition& col_margins);

/// All n x n permutation matrices.
std::vector<MarginMatrix> permutation_matrices(int n);

}  // namespace srsk
