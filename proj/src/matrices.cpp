#include "steinberg_rsk/matrices.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace srsk {

PartialPermutation::PartialPermutation(int p, int q, std::vector<Cell> ones) : p_(p), q_(q), ones_(std::move(ones)) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("partial permutation dimensions must be positive");
  std::vector<bool> row_used(static_cast<std::size_t>(p) + 1, false);
  std::vector<bool> col_used(static_cast<std::size_t>(q) + 1, false);
  for (const auto& [r, c] : ones_) {
    if (r < 1 || r > p || c < 1 || c > q) {
      throw std::invalid_argument("partial permutation entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") out of range");
    }
    if (row_used[static_cast<std::size_t>(r)] || col_used[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("partial permutation has two ones in row " + std::to_string(r) + " or column " +
                                  std::to_string(c));
    }
    row_used[static_cast<std::size_t>(r)] = true;
    col_used[static_cast<std::size_t>(c)] = true;
  }
  std::sort(ones_.begin(), ones_.end());
}

int PartialPermutation::entry(int row, int col) const {
  return std::find(ones_.begin(), ones_.end(), Cell{row, col}) != ones_.end() ? 1 : 0;
}

std::vector<std::vector<int>> PartialPermutation::dense() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(p_), std::vector<int>(static_cast<std::size_t>(q_), 0));
  for (const auto& [r, c] : ones_) out[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 1;
  return out;
}

std::vector<PartialPermutation> enumerate_pp(int p, int q) {
  std::vector<PartialPermutation> out;
  std::vector<PartialPermutation::Cell> ones;
  std::vector<bool> col_used(static_cast<std::size_t>(q) + 1, false);
  std::function<void(int)> rec = [&](int row) {
    if (row > p) {
      out.emplace_back(p, q, ones);
      return;
    }
    rec(row + 1);
    for (int c = 1; c <= q; ++c) {
      if (col_used[static_cast<std::size_t>(c)]) continue;
      col_used[static_cast<std::size_t>(c)] = true;
      ones.emplace_back(row, c);
      rec(row + 1);
      ones.pop_back();
      col_used[static_cast<std::size_t>(c)] = false;
    }
  };
  rec(1);
  return out;
}

MarginMatrix::MarginMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) return;
  cols_ = static_cast<int>(entries_[0].size());
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("margin matrix rows must have equal length");
    for (int v : row) {
      if (v < 0) throw std::invalid_argument("margin matrix entries must be nonnegative");
    }
  }
  // Margins must be compositions (positive).
  (void)row_margins();
  (void)col_margins();
}

Composition MarginMatrix::row_margins() const {
  std::vector<int> sums;
  for (const auto& row : entries_) sums.push_back(std::accumulate(row.begin(), row.end(), 0));
  return Composition(std::move(sums));
}

Composition MarginMatrix::col_margins() const {
  std::vector<int> sums(static_cast<std::size_t>(cols()), 0);
  for (const auto& row : entries_) {
    for (std::size_t c = 0; c < row.size(); ++c) sums[c] += row[c];
  }
  return Composition(std::move(sums));
}

MarginMatrix MarginMatrix::transposed() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(cols()), std::vector<int>(entries_.size()));
  for (std::size_t r = 0; r < entries_.size(); ++r) {
    for (std::size_t c = 0; c < entries_[r].size(); ++c) out[c][r] = entries_[r][c];
  }
  return MarginMatrix(std::move(out));
}

MarginMatrix MarginMatrix::rows_reversed() const {
  return MarginMatrix(std::vector<std::vector<int>>(entries_.rbegin(), entries_.rend()));
}

MarginMatrix MarginMatrix::cols_reversed() const {
  auto out = entries_;
  for (auto& row : out) std::reverse(row.begin(), row.end());
  return MarginMatrix(std::move(out));
}

MarginMatrix MarginMatrix::rotated() const { return rows_reversed().cols_reversed(); }

std::vector<MarginMatrix> enumerate_margin_matrices(const Composition& row_margins, const Composition& col_margins) {
  std::vector<MarginMatrix> out;
  if (row_margins.total() != col_margins.total()) return out;
  const std::size_t m = row_margins.length();
  const std::size_t n = col_margins.length();
  std::vector<std::vector<int>> entries(m, std::vector<int>(n, 0));
  std::vector<int> col_left = col_margins.parts();
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t r, std::size_t c, int row_left) {
    if (r == m) {
      if (std::all_of(col_left.begin(), col_left.end(), [](int v) { return v == 0; })) out.emplace_back(entries);
      return;
    }
    if (c + 1 == n) {
      // Last column takes the remainder of the row.
      if (row_left > col_left[c]) return;
      entries[r][c] = row_left;
      col_left[c] -= row_left;
      rec(r + 1, 0, r + 1 < m ? row_margins[r + 1] : 0);
      col_left[c] += row_left;
      entries[r][c] = 0;
      return;
    }
    for (int v = 0; v <= std::min(row_left, col_left[c]); ++v) {
      entries[r][c] = v;
      col_left[c] -= v;
      rec(r, c + 1, row_left - v);
      col_left[c] += v;
    }
    entries[r][c] = 0;
  };
  if (m == 0 || n == 0) return out;
  rec(0, 0, row_margins[0]);
  return out;
}

std::vector<MarginMatrix> permutation_matrices(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MarginMatrix> out;
  do {
    std::vector<std::vector<int>> entries(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t r = 0; r < perm.size(); ++r) entries[r][static_cast<std::size_t>(perm[r])] = 1;
    out.emplace_back(std::move(entries));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace srsk
