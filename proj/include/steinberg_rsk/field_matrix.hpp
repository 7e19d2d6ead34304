#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "steinberg_rsk/partitions.hpp"

namespace srsk {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

/// Caller-owned random source for every randomized operation.
using Rng = std::mt19937_64;

/// Deterministic primality test for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime field F_P with P < 2^32 so that products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t prime = kDefaultPrime);

  std::uint64_t prime() const { return p_; }
  std::uint64_t reduce(std::int64_t v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t random(Rng& rng) const;
  std::uint64_t random_nonzero(Rng& rng) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

class NotNilpotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense matrix over F_P; entries are kept reduced.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols, PrimeField field = PrimeField{});
  /// Entries are reduced mod P on ingest.
  static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, PrimeField field = PrimeField{});
  static FieldMatrix identity(std::size_t n, PrimeField field = PrimeField{});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % field_.prime(); }

  FieldMatrix operator*(const FieldMatrix& rhs) const;
  FieldMatrix operator+(const FieldMatrix& rhs) const;
  FieldMatrix operator-(const FieldMatrix& rhs) const;
  FieldMatrix scaled(std::uint64_t s) const;
  FieldMatrix transposed() const;
  FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Copies `src` into this matrix at (r0, c0).
  void paste(std::size_t r0, std::size_t c0, const FieldMatrix& src);
  bool is_zero() const;
  std::vector<std::vector<std::uint64_t>> to_rows() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

std::size_t rank(const FieldMatrix& m);
std::size_t kernel_dim(const FieldMatrix& m);
/// Throws std::domain_error if singular or not square.
FieldMatrix inverse(const FieldMatrix& m);
/// Basis of {v : m v = 0}, one column vector (cols x 1) per element.
std::vector<FieldMatrix> nullspace(const FieldMatrix& m);
/// [lhs | rhs]
FieldMatrix hconcat(const FieldMatrix& lhs, const FieldMatrix& rhs);
FieldMatrix block_diagonal(const FieldMatrix& a, const FieldMatrix& b);

/// Nilpotency is checked by taking powers up to the dimension.
bool is_nilpotent(const FieldMatrix& m);
/// Jordan type of a nilpotent square matrix from the ranks of its powers.
Partition jordan_type(const FieldMatrix& m);

FieldMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeField& field, Rng& rng);
/// Upper triangular with nonzero diagonal, hence invertible.
FieldMatrix random_upper_triangular(std::size_t n, const PrimeField& field, Rng& rng);
FieldMatrix random_invertible(std::size_t n, const PrimeField& field, Rng& rng);

}  // namespace srsk
