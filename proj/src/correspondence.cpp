#include "steinberg_rsk/correspondence.hpp"

#include <algorithm>
#include <set>

namespace srsk {

void validate_triple(const CorrespondenceTriple& tr) {
  const Signature sig = tr.diagram.signature();
  if (sig.q < 1 || sig.p < 1) throw std::invalid_argument("triple: signature entries must be positive");
  if (!is_admissible(tr.diagram)) throw std::invalid_argument("triple: diagram " + tr.diagram.to_string() + " is not admissible");
  if (tr.q_tab.shape() != lambda_plus(tr.diagram)) throw std::invalid_argument("triple: shape of Q differs from Lambda+");
  if (tr.p_tab.shape() != lambda_minus(tr.diagram)) throw std::invalid_argument("triple: shape of P differs from Lambda-");
  const auto standard = [](const RowStandardTableau& t) {
    const std::vector<int> parts = t.content().parts();
    return std::all_of(parts.begin(), parts.end(), [](int a) { return a == 1; });
  };
  if (!standard(tr.q_tab) || !standard(tr.p_tab)) throw std::invalid_argument("triple: tableaux must be standard");
}

MarginMatrix tau_hat(const PartialPermutation& t) {
  const auto p = static_cast<std::size_t>(t.p());
  const auto q = static_cast<std::size_t>(t.q());
  std::vector<std::vector<int>> m(p + 1, std::vector<int>(q + 1, 0));
  for (std::size_t j = 0; j < q; ++j) m[0][j] = 1;
  for (std::size_t i = 0; i < p; ++i) m[i + 1][q] = 1;
  for (const auto& [r, c] : t.ones()) {
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] = 1;
    m[0][static_cast<std::size_t>(c - 1)] = 0;
    m[static_cast<std::size_t>(r)][q] = 0;
  }
  m[0][q] = t.rank();
  return MarginMatrix(std::move(m));
}

SignedYoungDiagram assemble_diagram(const Partition& sh_q, const Partition& sh_p, const Partition& lambda) {
  std::vector<SignedRow> rows;
  const std::size_t n = std::max(sh_q.length(), sh_p.length());
  for (std::size_t i = 0; i < n; ++i) {
    const SignedRow row{sh_q[i] + sh_p[i], sh_p[i] < lambda[i] ? Sign::Plus : Sign::Minus};
    if (row.count(Sign::Plus) != sh_q[i] || row.count(Sign::Minus) != sh_p[i]) {
      throw ConventionDrift("forward: row " + std::to_string(i + 1) + " cannot carry " + std::to_string(sh_q[i]) +
                            " '+' and " + std::to_string(sh_p[i]) + " '-' boxes");
    }
    rows.push_back(row);
  }
  return SignedYoungDiagram(std::move(rows));
}

CorrespondenceTriple Correspondence::forward(const PartialPermutation& t, Rng& rng) const {
  const auto [qhat, phat] = rsk_.forward(tau_hat(t), rng);
  const Partition lambda = qhat.shape();
  CorrespondenceTriple tr{
      .diagram = {},
      .q_tab = restrict(qhat, static_cast<std::size_t>(t.q())),
      .p_tab = rectify(phat, 1),
  };
  tr.diagram = assemble_diagram(tr.q_tab.shape(), tr.p_tab.shape(), lambda);
  if (!is_admissible(tr.diagram)) throw ConventionDrift("forward: " + tr.diagram.to_string() + " is not admissible");
  if (z_shape(tr.diagram) != lambda) {
    throw ConventionDrift("forward: z_shape of " + tr.diagram.to_string() + " differs from " + lambda.to_string());
  }
  if (shape(tr.diagram) != add(tr.q_tab.shape(), tr.p_tab.shape())) {
    throw ConventionDrift("forward: sh Lambda differs from sh Q + sh P");
  }
  return tr;
}

PartialPermutation Correspondence::inverse(const CorrespondenceTriple& tr, Rng& rng) const {
  validate_triple(tr);
  const Signature sig = tr.diagram.signature();
  const Partition lambda = z_shape(tr.diagram);
  const RowStandardTableau qhat = extend(tr.q_tab, lambda);
  const RowStandardTableau phat = evacuate(extend(evacuate(tr.p_tab), lambda));
  const MarginMatrix sigma = rsk_.inverse(qhat, phat, rng);
  std::vector<PartialPermutation::Cell> ones;
  for (int r = 1; r <= sig.p; ++r) {
    for (int c = 0; c < sig.q; ++c) {
      const int v = sigma(r, c);
      if (v > 1) throw ConventionDrift("inverse: bordered matrix has an entry above 1");
      if (v == 1) ones.emplace_back(r, c + 1);
    }
  }
  return PartialPermutation(sig.p, sig.q, std::move(ones));
}

SignedYoungDiagram Correspondence::pr(const PartialPermutation& t, Rng& rng) const { return forward(t, rng).diagram; }

PartialPermutation Correspondence::dual(const PartialPermutation& t, Rng& rng) const {
  const CorrespondenceTriple tr = forward(t, rng);
  return inverse(CorrespondenceTriple{srsk::dual(tr.diagram), tr.p_tab, tr.q_tab}, rng);
}

std::int64_t pp_count(int p, int q) {
  std::int64_t total = 0;
  std::int64_t term = 1;  // C(p,k) C(q,k) k!
  for (int k = 0; k <= std::min(p, q); ++k) {
    total += term;
    // C(p,k+1) C(q,k+1) (k+1)! = term * (p-k)(q-k)/(k+1)
    term = term * (p - k) * (q - k) / (k + 1);
  }
  return total;
}

namespace {

std::string key_of(const CorrespondenceTriple& tr) {
  return tr.diagram.to_string() + to_string(tr.q_tab) + to_string(tr.p_tab);
}

}  // namespace

CensusReport census(const Correspondence& corr, int p, int q, Rng& rng) {
  CensusReport report;
  report.p = p;
  report.q = q;
  report.pp_count = pp_count(p, q);
  const auto asyd = enumerate_asyd(Signature{q, p});
  for (const auto& d : asyd) {
    const std::int64_t predicted = count_syt(lambda_plus(d)) * count_syt(lambda_minus(d));
    report.entries.push_back({d, predicted, 0});
    report.triple_count += predicted;
  }
  const auto all = enumerate_pp(p, q);
  if (static_cast<std::int64_t>(all.size()) != report.pp_count) {
    report.failures.push_back("enumerate_pp lists " + std::to_string(all.size()) + " partial permutations, expected " +
                              std::to_string(report.pp_count));
  }
  std::set<std::string> seen;
  for (const auto& t : all) {
    CorrespondenceTriple tr;
    try {
      tr = corr.forward(t, rng);
      validate_triple(tr);
    } catch (const std::exception& e) {
      report.failures.push_back("forward failed: " + std::string(e.what()));
      continue;
    }
    if (!seen.insert(key_of(tr)).second) {
      report.injective = false;
      report.failures.push_back("collision at triple " + key_of(tr));
    }
    auto it = std::find_if(report.entries.begin(), report.entries.end(),
                           [&](const CensusEntry& e) { return e.diagram == tr.diagram; });
    if (it == report.entries.end()) {
      report.failures.push_back("diagram " + tr.diagram.to_string() + " outside ASYD");
    } else {
      ++it->observed;
    }
  }
  for (const auto& e : report.entries) {
    if (e.observed != e.predicted) {
      report.failures.push_back("diagram " + e.diagram.to_string() + " observed " + std::to_string(e.observed) +
                                " predicted " + std::to_string(e.predicted));
    }
  }
  report.identity_holds = report.failures.empty() && report.pp_count == report.triple_count;
  return report;
}

std::vector<CorrespondenceTriple> enumerate_triples(int p, int q) {
  std::vector<CorrespondenceTriple> out;
  for (const auto& d : enumerate_asyd(Signature{q, p})) {
    for (const auto& qt : enumerate_syt(lambda_plus(d))) {
      for (const auto& pt : enumerate_syt(lambda_minus(d))) out.push_back({d, qt, pt});
    }
  }
  return out;
}

}  // namespace srsk
