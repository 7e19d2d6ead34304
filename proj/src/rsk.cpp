#include "steinberg_rsk/rsk.hpp"

#include <algorithm>

namespace srsk {

KnuthPair knuth_rsk(const MarginMatrix& m) {
  Filling p;
  Filling q;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      for (int k = 0; k < m(r, c); ++k) {
        int value = c + 1;
        std::size_t row = 0;
        for (;; ++row) {
          if (row == p.size()) {
            p.push_back({value});
            q.push_back({r + 1});
            break;
          }
          auto it = std::upper_bound(p[row].begin(), p[row].end(), value);
          if (it == p[row].end()) {
            p[row].push_back(value);
            q[row].push_back(r + 1);
            break;
          }
          std::swap(*it, value);
        }
      }
    }
  }
  return {SemistandardTableau::from_filling(p), SemistandardTableau::from_filling(q)};
}

MarginMatrix knuth_rsk_inverse(const SemistandardTableau& insertion, const SemistandardTableau& recording) {
  if (insertion.shape() != recording.shape()) {
    throw std::invalid_argument("knuth_rsk_inverse: tableaux have different shapes");
  }
  Filling p = insertion.filling();
  Filling q = recording.filling();
  const std::size_t rows = recording.length();
  const std::size_t cols = insertion.length();
  std::vector<std::vector<int>> entries(rows, std::vector<int>(cols, 0));
  while (!q.empty()) {
    // The last insertion sits in the rightmost cell holding the largest recording label.
    std::size_t row = 0;
    int label = 0;
    std::size_t best_col = 0;
    for (std::size_t r = 0; r < q.size(); ++r) {
      const int v = q[r].back();
      const std::size_t c = q[r].size() - 1;
      if (v > label || (v == label && c > best_col)) {
        label = v;
        row = r;
        best_col = c;
      }
    }
    q[row].pop_back();
    int value = p[row].back();
    p[row].pop_back();
    for (std::size_t r = row; r-- > 0;) {
      auto it = std::lower_bound(p[r].begin(), p[r].end(), value);
      // rightmost entry strictly below `value`
      --it;
      std::swap(*it, value);
    }
    if (q[row].empty()) {
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(row));
    }
    ++entries[static_cast<std::size_t>(label - 1)][static_cast<std::size_t>(value - 1)];
  }
  return MarginMatrix(std::move(entries));
}

MarginMatrix apply_transform(MatrixTransform t, const MarginMatrix& m) {
  switch (t) {
    case MatrixTransform::Identity:
      return m;
    case MatrixTransform::Transpose:
      return m.transposed();
    case MatrixTransform::RowReversal:
      return m.rows_reversed();
    case MatrixTransform::ColumnReversal:
      return m.cols_reversed();
    case MatrixTransform::Rotation:
      return m.rotated();
  }
  throw std::logic_error("unknown matrix transform");
}

namespace {

constexpr std::pair<MatrixTransform, const char*> kTransformNames[] = {
    {MatrixTransform::Identity, "identity"},
    {MatrixTransform::Transpose, "transpose"},
    {MatrixTransform::RowReversal, "row-reversal"},
    {MatrixTransform::ColumnReversal, "column-reversal"},
    {MatrixTransform::Rotation, "rotation"},
};

std::vector<Partition> conjugated(const std::vector<Partition>& chain) {
  std::vector<Partition> out;
  for (const auto& p : chain) out.push_back(conjugate(p));
  return out;
}

}  // namespace

std::string RskConvention::name() const {
  std::string out;
  for (const auto& [t, n] : kTransformNames) {
    if (t == transform) out = n;
  }
  out += evacuate_insertion ? "/evacuate" : "/direct";
  out += conjugate ? "/conjugate" : "/plain";
  out += swap ? "/swap" : "/keep";
  return out;
}

RskConvention RskConvention::parse(const std::string& name) {
  for (const auto& c : family()) {
    if (c.name() == name) return c;
  }
  throw std::invalid_argument("unknown RSK convention: " + name);
}

std::vector<RskConvention> RskConvention::family() {
  std::vector<RskConvention> out;
  for (const auto& entry : kTransformNames) {
    for (bool ev : {false, true}) {
      for (bool conj : {false, true}) {
        for (bool sw : {false, true}) out.push_back({entry.first, ev, conj, sw});
      }
    }
  }
  return out;
}

ChainPair apply_convention(const RskConvention& c, const MarginMatrix& sigma) {
  const KnuthPair k = knuth_rsk(apply_transform(c.transform, sigma));
  std::vector<Partition> first = c.evacuate_insertion ? evacuate(k.insertion).chain() : k.insertion.chain();
  std::vector<Partition> second = k.recording.chain();
  if (c.conjugate) {
    first = conjugated(first);
    second = conjugated(second);
  }
  if (c.swap) std::swap(first, second);
  return {std::move(first), std::move(second)};
}

std::optional<MarginMatrix> invert_convention(const RskConvention& c, const RowStandardTableau& qhat,
                                              const RowStandardTableau& phat) {
  std::vector<Partition> first = qhat.chain();
  std::vector<Partition> second = phat.chain();
  if (c.swap) std::swap(first, second);
  if (c.conjugate) {
    first = conjugated(first);
    second = conjugated(second);
  }
  if (!is_valid_chain(first, StripKind::Horizontal) || !is_valid_chain(second, StripKind::Horizontal)) {
    return std::nullopt;
  }
  SemistandardTableau insertion(first);
  const SemistandardTableau recording(second);
  if (c.evacuate_insertion) insertion = evacuate(insertion);
  if (insertion.shape() != recording.shape()) return std::nullopt;
  return undo_transform(c.transform, knuth_rsk_inverse(insertion, recording));
}

RskPair variant_rsk_oracle(const MarginMatrix& sigma, const OracleConfig& config, Rng& rng) {
  return conormal_tableaux(sigma, config, rng);
}

std::optional<RskConvention> CalibrationReport::selected() const {
  if (survivors.size() != 1) return std::nullopt;
  return survivors.front();
}

std::vector<MarginMatrix> bordered_margin_matrices(int max_size) {
  std::vector<MarginMatrix> out;
  for (int p = 1; p <= max_size; ++p) {
    for (int q = 1; q <= max_size; ++q) {
      std::vector<int> rows(static_cast<std::size_t>(p) + 1, 1);
      std::vector<int> cols(static_cast<std::size_t>(q) + 1, 1);
      rows.front() = q;
      cols.back() = p;
      auto batch = enumerate_margin_matrices(Composition(rows), Composition(cols));
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

CalibrationReport calibrate(int max_size, const OracleConfig& config, Rng& rng) {
  if (max_size < 0 || max_size > 5) throw std::invalid_argument("calibrate: max_size must lie in 0..5");
  CalibrationReport report;
  report.max_size = max_size;
  report.survivors = RskConvention::family();
  std::vector<MarginMatrix> domain = bordered_margin_matrices(max_size);
  report.bordered_matrices = domain.size();
  for (int n = 1; n <= max_size; ++n) {
    auto perms = permutation_matrices(n);
    report.permutation_matrices += perms.size();
    domain.insert(domain.end(), perms.begin(), perms.end());
  }
  for (const auto& sigma : domain) {
    const RskPair oracle = variant_rsk_oracle(sigma, config, rng);
    const ChainPair expected{oracle.first.chain(), oracle.second.chain()};
    std::erase_if(report.survivors, [&](const RskConvention& c) { return apply_convention(c, sigma) != expected; });
    ++report.tested_matrices;
  }
  return report;
}

VariantRsk::VariantRsk(OracleConfig config, std::optional<RskConvention> convention)
    : config_(config), convention_(convention) {}

VariantRsk VariantRsk::calibrated(int max_size, const OracleConfig& config, Rng& rng) {
  return VariantRsk(config, calibrate(max_size, config, rng).selected());
}

RskPair VariantRsk::forward(const MarginMatrix& sigma, Rng& rng) const {
  if (!convention_) return variant_rsk_oracle(sigma, config_, rng);
  if (sigma.rows() == 0) return {};
  auto [first, second] = apply_convention(*convention_, sigma);
  return {RowStandardTableau(sigma.col_margins(), std::move(first)),
          RowStandardTableau(sigma.row_margins(), std::move(second))};
}

MarginMatrix VariantRsk::inverse(const RowStandardTableau& qhat, const RowStandardTableau& phat, Rng& rng) const {
  if (qhat.shape() != phat.shape()) throw std::invalid_argument("variant_rsk_inverse: tableaux have different shapes");
  if (qhat.length() == 0) return MarginMatrix{};
  const RskPair target{qhat, phat};
  if (convention_) {
    if (auto sigma = invert_convention(*convention_, qhat, phat)) {
      if (sigma->row_margins() == phat.content() && sigma->col_margins() == qhat.content() &&
          forward(*sigma, rng) == target) {
        return *sigma;
      }
    }
  }
  for (const auto& sigma : enumerate_margin_matrices(phat.content(), qhat.content())) {
    if (forward(sigma, rng) == target) return sigma;
  }
  throw NoPreimage("variant_rsk_inverse: no margin matrix maps to " + to_string(qhat) + ", " + to_string(phat));
}

}  // namespace srsk
