#pragma once

#include <string>
#include <vector>

#include "steinberg_rsk/partitions.hpp"

namespace srsk {

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// One row of a signed Young diagram: a run of alternating signs.
struct SignedRow {
  int length = 0;
  Sign first = Sign::Plus;

  int count(Sign s) const { return s == first ? (length + 1) / 2 : length / 2; }
  /// Boxes of sign `s` among the first `cols` columns.
  int count_in_columns(Sign s, int cols) const;
  std::string render() const;

  friend bool operator==(const SignedRow&, const SignedRow&) = default;
};

/// Canonical order: longer rows first; at equal length '-' before '+'.
bool canonical_before(const SignedRow& a, const SignedRow& b);

struct Signature {
  int q = 0;  ///< number of '+' boxes
  int p = 0;  ///< number of '-' boxes
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A multiset of signed rows, stored in canonical order so that equivalent
/// fillings compare equal.
class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;
  explicit SignedYoungDiagram(std::vector<SignedRow> rows);
  /// Parses rows such as {"+-", "-+-", "+"}.
  static SignedYoungDiagram from_strings(const std::vector<std::string>& rows);

  const std::vector<SignedRow>& rows() const { return rows_; }
  Signature signature() const;
  std::vector<std::string> render() const;
  std::string to_string() const;

  friend bool operator==(const SignedYoungDiagram&, const SignedYoungDiagram&) = default;
  /// Deterministic total order used for sorted output.
  friend bool operator<(const SignedYoungDiagram& a, const SignedYoungDiagram& b);

 private:
  std::vector<SignedRow> rows_;
};

Partition shape(const SignedYoungDiagram& d);
Partition lambda_plus(const SignedYoungDiagram& d);
Partition lambda_minus(const SignedYoungDiagram& d);

/// sh = lambda_plus + lambda_minus.
bool is_admissible(const SignedYoungDiagram& d);
/// Odd rows of equal length all start with the same sign.
bool odd_rows_uniform(const SignedYoungDiagram& d);
/// 2 dim O(d) == 2 |d+||d-| + dim N(d+) + dim N(d-).
bool satisfies_dimension_identity(const SignedYoungDiagram& d);
/// No other diagram with the same (d+, d-) lies above d in the closure order.
bool is_closure_maximal(const SignedYoungDiagram& d);

/// Jordan type of z = beta + alpha*beta on the module of d.
Partition z_shape(const SignedYoungDiagram& d);

/// Boxes of sign `s` in columns 1..cols; cols must be odd.
int boxes_in_first_columns(const SignedYoungDiagram& d, Sign s, int cols);

/// Closure order on orbits of equal signature; throws on signature mismatch.
bool closure_leq(const SignedYoungDiagram& lhs, const SignedYoungDiagram& rhs);

std::int64_t orbit_dim(const SignedYoungDiagram& d);

/// Swaps '+' and '-'.
SignedYoungDiagram dual(const SignedYoungDiagram& d);

/// All diagrams of the signature, sorted by operator<.
std::vector<SignedYoungDiagram> enumerate_syd(Signature sig);
std::vector<SignedYoungDiagram> enumerate_asyd(Signature sig);

/// Hasse diagram of the closure order: edges (lower, upper) as indices into
/// enumerate_syd(sig).
std::vector<std::pair<std::size_t, std::size_t>> closure_hasse_edges(const std::vector<SignedYoungDiagram>& nodes);

}  // namespace srsk
