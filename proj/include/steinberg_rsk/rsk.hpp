#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steinberg_rsk/matrices.hpp"
#include "steinberg_rsk/oracle.hpp"
#include "steinberg_rsk/tableaux.hpp"

namespace srsk {

/// Classical row-insertion RSK of the biword of m: row indices are recorded,
/// column indices are inserted. Both tableaux are semistandard.
struct KnuthPair {
  SemistandardTableau insertion;
  SemistandardTableau recording;
  friend bool operator==(const KnuthPair&, const KnuthPair&) = default;
};

KnuthPair knuth_rsk(const MarginMatrix& m);
/// Throws std::invalid_argument if the shapes differ.
MarginMatrix knuth_rsk_inverse(const SemistandardTableau& insertion, const SemistandardTableau& recording);

enum class MatrixTransform { Identity, Transpose, RowReversal, ColumnReversal, Rotation };

MarginMatrix apply_transform(MatrixTransform t, const MarginMatrix& m);
/// Every transform in the family is an involution.
inline MarginMatrix undo_transform(MatrixTransform t, const MarginMatrix& m) { return apply_transform(t, m); }

/// One candidate combinatorial rule: transform the matrix, run Knuth RSK,
/// optionally evacuate the insertion tableau, optionally conjugate every chain
/// element, optionally swap the pair.
struct RskConvention {
  MatrixTransform transform = MatrixTransform::Identity;
  bool evacuate_insertion = false;
  bool conjugate = false;
  bool swap = false;

  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument on unknown names.
  static RskConvention parse(const std::string& name);
  /// All 40 candidates in a fixed order.
  static std::vector<RskConvention> family();

  friend bool operator==(const RskConvention&, const RskConvention&) = default;
};

using ChainPair = std::pair<std::vector<Partition>, std::vector<Partition>>;

ChainPair apply_convention(const RskConvention& c, const MarginMatrix& sigma);
/// Candidate preimage; nullopt when the pair is not a valid input for the rule.
std::optional<MarginMatrix> invert_convention(const RskConvention& c, const RowStandardTableau& qhat,
                                              const RowStandardTableau& phat);

/// (Q^, P^) of the normative geometric definition.
using RskPair = std::pair<RowStandardTableau, RowStandardTableau>;

RskPair variant_rsk_oracle(const MarginMatrix& sigma, const OracleConfig& config, Rng& rng);

struct CalibrationReport {
  int max_size = 0;
  std::size_t tested_matrices = 0;
  std::size_t bordered_matrices = 0;
  std::size_t permutation_matrices = 0;
  std::vector<RskConvention> survivors;

  /// The surviving convention when it is unique.
  std::optional<RskConvention> selected() const;
};

/// Margin matrices with margins (q,1,...,1) / (1,...,1,p) for 1 <= p,q <= max_size.
std::vector<MarginMatrix> bordered_margin_matrices(int max_size);

/// Candidates agreeing with the oracle on every bordered margin matrix and
/// every permutation matrix up to max_size (0 <= max_size <= 5).
CalibrationReport calibrate(int max_size, const OracleConfig& config, Rng& rng);

class NoPreimage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// variant_rsk with the calibrated combinatorial fast path, or oracle-only
/// when no convention is set.
class VariantRsk {
 public:
  explicit VariantRsk(OracleConfig config = OracleConfig::from_env(),
                      std::optional<RskConvention> convention = std::nullopt);
  static VariantRsk calibrated(int max_size, const OracleConfig& config, Rng& rng);

  const OracleConfig& config() const { return config_; }
  const std::optional<RskConvention>& convention() const { return convention_; }
  bool fast() const { return convention_.has_value(); }

  RskPair forward(const MarginMatrix& sigma, Rng& rng) const;
  /// Reverse insertion checked by a forward pass, else exhaustive search over
  /// all matrices with the given margins. Throws NoPreimage.
  MarginMatrix inverse(const RowStandardTableau& qhat, const RowStandardTableau& phat, Rng& rng) const;

 private:
  OracleConfig config_;
  std::optional<RskConvention> convention_;
};

}  // namespace srsk
