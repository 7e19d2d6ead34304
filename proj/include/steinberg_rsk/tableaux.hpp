#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinberg_rsk/partitions.hpp"

namespace srsk {

/// Which skew shapes are allowed between consecutive chain elements.
enum class StripKind {
  Column,      ///< at most one box per row: row-standard tableaux
  Horizontal,  ///< at most one box per column: semistandard tableaux
};

/// Labels of a (possibly skew) diagram, row by row. A 0 marks a cell of the
/// inner shape; labels are 1-based.
using Filling = std::vector<std::vector<int>>;

/// A tableau stored as its chain of shapes T(1) < ... < T(n).
///
/// The content a_i = |T(i)| - |T(i-1)| (with T(0) empty) is derived from the
/// chain and must be positive. The chain is the canonical representation;
/// fillings are a derived view.
template <StripKind Kind>
class ChainTableau {
 public:
  ChainTableau() = default;
  explicit ChainTableau(std::vector<Partition> chain);
  /// Validates that `content` matches the chain increments.
  ChainTableau(const Composition& content, std::vector<Partition> chain);

  const std::vector<Partition>& chain() const { return chain_; }
  std::size_t length() const { return chain_.size(); }
  /// T(i) for 0 <= i <= n; T(0) is the empty partition.
  Partition at(std::size_t i) const;
  Partition shape() const { return chain_.empty() ? Partition{} : chain_.back(); }
  Composition content() const;

  Filling filling() const;
  static ChainTableau from_filling(const Filling& filling);

  friend bool operator==(const ChainTableau&, const ChainTableau&) = default;

 private:
  std::vector<Partition> chain_;
};

using RowStandardTableau = ChainTableau<StripKind::Column>;
using SemistandardTableau = ChainTableau<StripKind::Horizontal>;

/// Transposes every chain element; swaps row-standard and semistandard.
SemistandardTableau transpose(const RowStandardTableau& t);
RowStandardTableau transpose(const SemistandardTableau& t);

/// True iff `chain` is a valid chain for the strip kind (positive increments).
bool is_valid_chain(const std::vector<Partition>& chain, StripKind kind);

/// Filling-level check: strictly increasing rows and weakly increasing columns
/// on the nonzero cells, labels forming a straight or skew shape.
bool is_row_standard_filling(const Filling& filling);

Partition shape(const RowStandardTableau& t);

/// Prefix chain T(1), ..., T(i); 1 <= i <= n.
RowStandardTableau restrict(const RowStandardTableau& t, std::size_t i);

/// Appends `lam`; lam / sh(t) must be a nonempty column strip.
RowStandardTableau extend(const RowStandardTableau& t, const Partition& lam);

/// Tie rule for a jeu de taquin slide when the right and lower neighbours of
/// the hole carry the same label.
enum class TieRule {
  FromRight,  ///< keeps rows strict; the rule for row-standard fillings
  FromBelow,
};

/// A skew filling inner = S(0) < S(1) < ... < S(m) with column-strip steps.
struct SkewFilling {
  Partition inner;
  Filling cells;  ///< 0 on inner cells, labels 1..m elsewhere

  static SkewFilling quotient(const RowStandardTableau& t, std::size_t i);
  int max_label() const;
  /// Jeu de taquin rectification to a straight shape.
  Filling rectified(TieRule tie = TieRule::FromRight) const;
};

/// Straight-shape tableau of content (a_{i+1}, ..., a_n) obtained by
/// rectifying T / T(i). rectify(t, 0) == t. Throws std::logic_error if the
/// slides do not produce a row-standard filling (wrong tie rule).
RowStandardTableau rectify(const RowStandardTableau& t, std::size_t i,
                           TieRule tie = TieRule::FromRight);

/// ev T: i-th element is sh(rectify(T, n - i)); content reversed.
RowStandardTableau evacuate(const RowStandardTableau& t, TieRule tie = TieRule::FromRight);

/// Semistandard evacuation, computed through the transpose.
SemistandardTableau evacuate(const SemistandardTableau& t);

/// All saturated chains from the empty partition to lam.
std::vector<RowStandardTableau> enumerate_syt(const Partition& lam);

/// All row-standard tableaux with the given shape and content.
std::vector<RowStandardTableau> enumerate_tableaux(const Partition& lam, const Composition& content);

/// All row-standard tableaux of the given content, any shape.
std::vector<RowStandardTableau> enumerate_tableaux(const Composition& content);

std::string to_string(const RowStandardTableau& t);

}  // namespace srsk
