#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "steinberg_rsk/field_matrix.hpp"
#include "steinberg_rsk/matrices.hpp"
#include "steinberg_rsk/signed_diagrams.hpp"
#include "steinberg_rsk/tableaux.hpp"

namespace srsk {

/// Partial flag 0 = F_0 < F_1 < ... < F_n = K^N. F_i is spanned by the first
/// cuts[i-1] columns of `basis`; coordinate flags use the identity basis.
class Flag {
 public:
  Flag(FieldMatrix basis, std::vector<int> cuts);
  static Flag coordinate(const Composition& composition, const PrimeField& field);

  const FieldMatrix& basis() const { return basis_; }
  const std::vector<int>& cuts() const { return cuts_; }
  std::size_t ambient() const { return basis_.rows(); }
  std::size_t length() const { return cuts_.size(); }
  /// dim F_i, with dim F_0 = 0.
  int dim(std::size_t i) const { return i == 0 ? 0 : cuts_.at(i - 1); }
  Composition composition() const;
  /// N x dim(i) matrix whose columns span F_i.
  FieldMatrix subspace(std::size_t i) const;
  /// m written in the flag's basis.
  FieldMatrix adapted(const FieldMatrix& m) const;

 private:
  FieldMatrix basis_;
  std::vector<int> cuts_;
};

/// Raised when m F_i is not contained in F_{i-1}.
class FlagInvarianceError : public std::domain_error {
 public:
  FlagInvarianceError(std::size_t index, const std::string& what) : std::domain_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// (J(m|F_1); ...; J(m|F_n)).
RowStandardTableau tab_chain(const FieldMatrix& m, const Flag& f);
/// Tab(m | F_n/F_i, F_bullet/F_i); i = 0 gives tab_chain.
RowStandardTableau quotient_tab_chain(const FieldMatrix& m, const Flag& f, std::size_t i);
/// (J(m|F_n/F_{n-1}); ...; J(m|F_n/F_0)).
RowStandardTableau evacuation_chain(const FieldMatrix& m, const Flag& f);

/// A representation of the two-vertex quiver: x maps V_q to V_p, y maps V_p to V_q.
struct ModulePoint {
  FieldMatrix x;  ///< p x q
  FieldMatrix y;  ///< q x p

  std::size_t q() const { return x.cols(); }
  std::size_t p() const { return x.rows(); }
};

/// The indecomposable U_k^s: k boxes alternating in sign, generator (sign s)
/// rightmost; x takes a '+' box to the '-' box on its left, y a '-' box to
/// the '+' box on its left.
ModulePoint module_matrices(Sign kind, int k, const PrimeField& field);
ModulePoint direct_sum(const ModulePoint& a, const ModulePoint& b);
/// Direct sum of the rows of d.
ModulePoint module_of(const SignedYoungDiagram& d, const PrimeField& field);
/// z = [[0, y], [0, xy]] on V_q + V_p.
FieldMatrix z_of(const ModulePoint& pt);

/// The unique diagram whose Jordan types and column counts match the pair.
SignedYoungDiagram syd_of_pair(const ModulePoint& pt);

/// Orbit of x : V_q -> V_p under upper triangular changes of basis on both sides.
PartialPermutation orbit_of_matrix(const FieldMatrix& x);
/// x = h tau g^{-1} with g, h random invertible upper triangular.
FieldMatrix sample_orbit_point(const PartialPermutation& t, const PrimeField& field, Rng& rng);
/// Basis (each q x p) of {y : yx and xy strictly upper triangular}.
std::vector<FieldMatrix> conormal_fibre(const FieldMatrix& x);

/// x~ = [[I_q, 0], [x, I_p]].
FieldMatrix bordered_x(const FieldMatrix& x);
/// x~ E~: pieces E_1 < ... < E_q < V, written in the basis x~.
Flag bordered_e_flag(const FieldMatrix& x);
/// F~_i = V_q + F_i for i = 0..p.
Flag bordered_f_flag(std::size_t p, std::size_t q, const PrimeField& field);

/// sigma with rk(e_l cap f_k) = sum_{k' <= k, l' <= l} sigma_{k'l'}; rows index
/// the pieces of f, columns the pieces of e.
MarginMatrix schubert_position(const Flag& e, const Flag& f);

/// Field and genericity budget for randomized computations.
struct OracleConfig {
  PrimeField field;
  int trials = 5;
  int retry_rounds = 3;

  /// Default prime, overridden by STEINBERG_RSK_PRIME when set.
  static OracleConfig from_env();
};

/// Raised when independent samples keep disagreeing after the retry budget.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank data of a generic conormal point of C(tau).
struct ConormalCertificate {
  PartialPermutation orbit;       ///< orbit of x in H
  PartialPermutation dual_orbit;  ///< orbit of y in H^vee
  SignedYoungDiagram diagram;
  RowStandardTableau q_tab;  ///< Tab(yx, E)
  RowStandardTableau p_tab;  ///< Tab(xy, F)
  RowStandardTableau qhat;   ///< Tab(z, x~E~)
  RowStandardTableau phat;   ///< Tab(z, F~)
  /// Tab(z | V/F~_i) for i = 0..p+1 and Tab(z | V/x~E~_i) for i = 0..q+1.
  std::vector<RowStandardTableau> phat_quotients;
  std::vector<RowStandardTableau> qhat_quotients;
  RowStandardTableau phat_evacuation;
  RowStandardTableau qhat_evacuation;

  friend bool operator==(const ConormalCertificate&, const ConormalCertificate&) = default;
};

ConormalCertificate certify(const ModulePoint& pt);

struct ConormalSample {
  ModulePoint point;
  ConormalCertificate certificate;
  int rounds = 1;  ///< sampling rounds used
};

/// Samples config.trials independent generic points of the conormal space and
/// requires identical certificates; retries up to config.retry_rounds times.
ConormalSample generic_conormal_sample(const PartialPermutation& t, const OracleConfig& config, Rng& rng);

/// Orbit of a generic y in H^vee = Hom(V_p, V_q), flags swapped.
PartialPermutation dual_orbit_check(const PartialPermutation& t, const OracleConfig& config, Rng& rng);

/// (Tab(z, E), Tab(z, F)) for z generic in the conormal space of Y(sigma);
/// E has composition col_margins(sigma), F has row_margins(sigma).
std::pair<RowStandardTableau, RowStandardTableau> conormal_tableaux(const MarginMatrix& sigma,
                                                                   const OracleConfig& config, Rng& rng);

}  // namespace srsk
