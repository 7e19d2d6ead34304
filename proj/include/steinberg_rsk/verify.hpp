#pragma once

#include <string>
#include <vector>

#include "steinberg_rsk/correspondence.hpp"
#include "steinberg_rsk/oracle.hpp"

namespace srsk {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  ///< first few offending instances
  double seconds = 0.0;

  void fail(std::string what);
};

/// |PP(p,q)| against the closed form and the ASYD/SYT sum; spot values.
CheckResult check_census(const Correspondence& corr, int pmax, int qmax, Rng& rng);
/// inverse(forward(t)) == t on every t in PP(p,q), 1 <= p,q <= bounds.
CheckResult check_round_trip(const Correspondence& corr, int pmax, int qmax, Rng& rng);
/// Same on `samples` uniformly drawn t in PP(p,q).
CheckResult check_round_trip_sampled(const Correspondence& corr, int p, int q, int samples, Rng& rng);
/// forward(inverse(tr)) == tr on every valid triple.
CheckResult check_triple_round_trip(const Correspondence& corr, int pmax, int qmax, Rng& rng);
/// Combinatorial triple equals the generic conormal certificate.
CheckResult check_oracle_agreement(const Correspondence& corr, const OracleConfig& config, int pmax, int qmax,
                                   Rng& rng);
/// Shape identity, odd rows, dimension identity, closure maximality and
/// (for p,q <= image_max) membership in the image of pr agree on SYD(q,p).
CheckResult check_admissibility(const Correspondence& corr, int pmax, int qmax, int image_max, Rng& rng);
/// Jordan types of z on U_k^s for k <= kmax and on random direct sums.
CheckResult check_module_types(const OracleConfig& config, int kmax, int samples, int max_dim, Rng& rng);
/// dual is an involution, agrees with the orbit of generic y, and the fixtures hold.
CheckResult check_duality(const Correspondence& corr, const OracleConfig& config, int pmax, int qmax, Rng& rng);
/// schubert_position of the bordered flags equals tau_hat.
CheckResult check_tau_hat(const OracleConfig& config, int pmax, int qmax, Rng& rng);
/// Evacuation involution, rectification contents, and jeu de taquin against
/// the quotient tableaux of generic conormal points.
CheckResult check_tableau_engine(const OracleConfig& config, int max_boxes, int pmax, int qmax, Rng& rng);
/// Closure order implies dominance of shapes and of (Lambda+, Lambda-);
/// sh <= Lambda+ + Lambda- everywhere.
CheckResult check_poset_properties(int pmax, int qmax);
/// Calibrated fast path equals the oracle on every bordered margin matrix.
CheckResult check_fast_path(const Correspondence& corr, const OracleConfig& config, int max_size, Rng& rng);

/// Every check at the given bounds.
std::vector<CheckResult> verify_all(const Correspondence& corr, const OracleConfig& config, int pmax, int qmax,
                                    Rng& rng);

}  // namespace srsk
