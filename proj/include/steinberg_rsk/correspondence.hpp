#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinberg_rsk/matrices.hpp"
#include "steinberg_rsk/rsk.hpp"
#include "steinberg_rsk/signed_diagrams.hpp"
#include "steinberg_rsk/tableaux.hpp"

namespace srsk {

/// (Lambda, Q, P): an admissible diagram and standard tableaux of shapes
/// Lambda+ and Lambda-.
struct CorrespondenceTriple {
  SignedYoungDiagram diagram;
  RowStandardTableau q_tab;
  RowStandardTableau p_tab;

  friend bool operator==(const CorrespondenceTriple&, const CorrespondenceTriple&) = default;
};

/// Raised when an internal consistency gate of the forward map fails.
class ConventionDrift : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws std::invalid_argument unless the triple is admissible with matching shapes.
void validate_triple(const CorrespondenceTriple& tr);

/// Bordered (p+1) x (q+1) matrix: top row (l_1..l_q, r), then rows (tau_i, m_i).
MarginMatrix tau_hat(const PartialPermutation& t);

/// Signed diagram with row i of length sh_q(i) + sh_p(i), first box '+' iff
/// sh_p(i) < lambda(i).
SignedYoungDiagram assemble_diagram(const Partition& sh_q, const Partition& sh_p, const Partition& lambda);

class Correspondence {
 public:
  explicit Correspondence(VariantRsk rsk) : rsk_(std::move(rsk)) {}

  const VariantRsk& rsk() const { return rsk_; }

  CorrespondenceTriple forward(const PartialPermutation& t, Rng& rng) const;
  /// Inverse in PP(p, q) where (q, p) is the signature of the diagram.
  PartialPermutation inverse(const CorrespondenceTriple& tr, Rng& rng) const;
  SignedYoungDiagram pr(const PartialPermutation& t, Rng& rng) const;
  /// inverse((dual Lambda, P, Q)) in PP(q, p).
  PartialPermutation dual(const PartialPermutation& t, Rng& rng) const;

 private:
  VariantRsk rsk_;
};

/// sum_k C(p,k) C(q,k) k!
std::int64_t pp_count(int p, int q);

struct CensusEntry {
  SignedYoungDiagram diagram;
  std::int64_t predicted = 0;  ///< count_syt(Lambda+) * count_syt(Lambda-)
  std::int64_t observed = 0;   ///< partial permutations mapped to this diagram
};

struct CensusReport {
  int p = 0;
  int q = 0;
  std::int64_t pp_count = 0;
  std::int64_t triple_count = 0;  ///< sum over ASYD(q,p) of the predictions
  bool injective = true;
  bool identity_holds = false;
  std::vector<CensusEntry> entries;  ///< one per admissible diagram, sorted
  std::vector<std::string> failures;
};

CensusReport census(const Correspondence& corr, int p, int q, Rng& rng);

/// Every valid triple of signature (q, p).
std::vector<CorrespondenceTriple> enumerate_triples(int p, int q);

}  // namespace srsk
