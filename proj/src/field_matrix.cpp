#include "steinberg_rsk/field_matrix.hpp"

#include <algorithm>
#include <string>

namespace srsk {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) result = mulmod64(result, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return result;
}

void require_same_field(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                                   const PrimeField& f, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[r * cols + k], a[pivot * cols + k]);
    }
    const std::uint64_t inv = f.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = f.mul(a[r * cols + k], inv);
    for (std::size_t i = reduced ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a[i * cols + k] = f.sub(a[i * cols + k], f.mul(factor, a[r * cols + k]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (prime >= (1ULL << 32) || !is_prime(prime)) {
    throw std::invalid_argument("field modulus must be a prime below 2^32, got " + std::to_string(prime));
  }
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return powmod64(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero in prime field");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::random(Rng& rng) const { return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng); }

std::uint64_t PrimeField::random_nonzero(Rng& rng) const {
  return std::uniform_int_distribution<std::uint64_t>(1, p_ - 1)(rng);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, PrimeField field) {
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  FieldMatrix m(rows.size(), ncols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t c = 0; c < ncols; ++c) m.data_[r * ncols + c] = field.reduce(rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::identity(std::size_t n, PrimeField field) {
  FieldMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  FieldMatrix out(rows_, rhs.cols_, field_);
  const std::uint64_t p = field_.prime();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto& slot = out.data_[i * rhs.cols_ + j];
        slot = (slot + a * rhs.data_[k * rhs.cols_ + j]) % p;
      }
    }
  }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::scaled(std::uint64_t s) const {
  FieldMatrix out = *this;
  for (auto& v : out.data_) v = field_.mul(v, s % field_.prime());
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  }
  return out;
}

FieldMatrix FieldMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  FieldMatrix out(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = data_[(r0 + r) * cols_ + c0 + c];
  }
  return out;
}

void FieldMatrix::paste(std::size_t r0, std::size_t c0, const FieldMatrix& src) {
  require_same_field(*this, src);
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("matrix paste out of range");
  for (std::size_t r = 0; r < src.rows_; ++r) {
    for (std::size_t c = 0; c < src.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = src.data_[r * src.cols_ + c];
  }
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

std::vector<std::vector<std::uint64_t>> FieldMatrix::to_rows() const {
  std::vector<std::vector<std::uint64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

std::size_t rank(const FieldMatrix& m) {
  std::vector<std::uint64_t> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r * m.cols() + c] = m(r, c);
  }
  return eliminate(a, m.rows(), m.cols(), m.field(), false).size();
}

std::size_t kernel_dim(const FieldMatrix& m) { return m.cols() - rank(m); }

FieldMatrix inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FieldMatrix aug = hconcat(m, FieldMatrix::identity(n, m.field()));
  std::vector<std::uint64_t> a(n * 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c) a[r * 2 * n + c] = aug(r, c);
  }
  const auto pivots = eliminate(a, n, 2 * n, m.field(), true);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) throw std::domain_error("matrix is singular");
  FieldMatrix out(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, a[r * 2 * n + n + c]);
  }
  return out;
}

std::vector<FieldMatrix> nullspace(const FieldMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c);
  }
  const auto pivots = eliminate(a, rows, cols, m.field(), true);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FieldMatrix> basis;
  const PrimeField& f = m.field();
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FieldMatrix v(cols, 1, f);
    v.set(free, 0, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v.set(pivots[i], 0, f.neg(a[i * cols + free]));
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldMatrix hconcat(const FieldMatrix& lhs, const FieldMatrix& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.rows() != rhs.rows()) throw std::invalid_argument("hconcat row mismatch");
  FieldMatrix out(lhs.rows(), lhs.cols() + rhs.cols(), lhs.field());
  out.paste(0, 0, lhs);
  out.paste(0, lhs.cols(), rhs);
  return out;
}

FieldMatrix block_diagonal(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b);
  FieldMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

bool is_nilpotent(const FieldMatrix& m) {
  if (m.rows() != m.cols()) return false;
  FieldMatrix power = m;
  for (std::size_t k = 1; k < m.rows() && !power.is_zero(); ++k) power = power * m;
  return power.is_zero();
}

Partition jordan_type(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw NotNilpotent("jordan_type requires a square matrix");
  const std::size_t n = m.rows();
  // Conjugate parts: dim ker m^k - dim ker m^{k-1}.
  std::vector<int> conjugate_parts;
  std::size_t previous_kernel = 0;
  FieldMatrix power = FieldMatrix::identity(n, m.field());
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * m;
    const std::size_t kernel = kernel_dim(power);
    if (kernel == previous_kernel) break;
    conjugate_parts.push_back(static_cast<int>(kernel - previous_kernel));
    previous_kernel = kernel;
    if (kernel == n) break;
  }
  if (previous_kernel != n) throw NotNilpotent("matrix is not nilpotent");
  return conjugate(Partition(std::move(conjugate_parts)));
}

FieldMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeField& field, Rng& rng) {
  FieldMatrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.random(rng));
  }
  return m;
}

FieldMatrix random_upper_triangular(std::size_t n, const PrimeField& field, Rng& rng) {
  FieldMatrix m(n, n, field);
  for (std::size_t r = 0; r < n; ++r) {
    m.set(r, r, field.random_nonzero(rng));
    for (std::size_t c = r + 1; c < n; ++c) m.set(r, c, field.random(rng));
  }
  return m;
}

FieldMatrix random_invertible(std::size_t n, const PrimeField& field, Rng& rng) {
  for (;;) {
    FieldMatrix m = random_matrix(n, n, field, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace srsk
