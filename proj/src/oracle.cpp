#include "steinberg_rsk/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace srsk {

Flag::Flag(FieldMatrix basis, std::vector<int> cuts) : basis_(std::move(basis)), cuts_(std::move(cuts)) {
  if (basis_.rows() != basis_.cols()) throw std::invalid_argument("flag basis must be square");
  int previous = 0;
  for (int c : cuts_) {
    if (c <= previous) throw std::invalid_argument("flag cut points must strictly increase");
    previous = c;
  }
  if (static_cast<std::size_t>(previous) != basis_.rows()) {
    throw std::invalid_argument("flag must end at the ambient space");
  }
  if (rank(basis_) != basis_.rows()) throw std::invalid_argument("flag basis must be invertible");
}

Flag Flag::coordinate(const Composition& composition, const PrimeField& field) {
  std::vector<int> cuts;
  for (std::size_t i = 1; i <= composition.length(); ++i) cuts.push_back(composition.prefix_sum(i));
  return Flag(FieldMatrix::identity(static_cast<std::size_t>(composition.total()), field), std::move(cuts));
}

Composition Flag::composition() const {
  std::vector<int> parts;
  int previous = 0;
  for (int c : cuts_) {
    parts.push_back(c - previous);
    previous = c;
  }
  return Composition(std::move(parts));
}

FieldMatrix Flag::subspace(std::size_t i) const {
  return basis_.block(0, 0, basis_.rows(), static_cast<std::size_t>(dim(i)));
}

FieldMatrix Flag::adapted(const FieldMatrix& m) const { return inverse(basis_) * m * basis_; }

namespace {

FieldMatrix adapted_checked(const FieldMatrix& m, const Flag& f) {
  if (m.rows() != f.ambient() || m.cols() != f.ambient()) {
    throw std::invalid_argument("matrix and flag live in different dimensions");
  }
  const FieldMatrix a = f.adapted(m);
  for (std::size_t i = 1; i <= f.length(); ++i) {
    const auto lo = static_cast<std::size_t>(f.dim(i - 1));
    const auto hi = static_cast<std::size_t>(f.dim(i));
    for (std::size_t c = lo; c < hi; ++c) {
      for (std::size_t r = lo; r < a.rows(); ++r) {
        if (a(r, c) != 0) {
          throw FlagInvarianceError(i, "m F_" + std::to_string(i) + " is not contained in F_" + std::to_string(i - 1));
        }
      }
    }
  }
  return a;
}

Partition jordan_of_block(const FieldMatrix& a, std::size_t lo, std::size_t hi) {
  return jordan_type(a.block(lo, lo, hi - lo, hi - lo));
}

}  // namespace

RowStandardTableau tab_chain(const FieldMatrix& m, const Flag& f) { return quotient_tab_chain(m, f, 0); }

RowStandardTableau quotient_tab_chain(const FieldMatrix& m, const Flag& f, std::size_t i) {
  if (i > f.length()) throw std::out_of_range("quotient index beyond flag length");
  const FieldMatrix a = adapted_checked(m, f);
  const auto lo = static_cast<std::size_t>(f.dim(i));
  std::vector<Partition> chain;
  for (std::size_t j = i + 1; j <= f.length(); ++j) chain.push_back(jordan_of_block(a, lo, static_cast<std::size_t>(f.dim(j))));
  return RowStandardTableau(std::move(chain));
}

RowStandardTableau evacuation_chain(const FieldMatrix& m, const Flag& f) {
  const FieldMatrix a = adapted_checked(m, f);
  const std::size_t n = f.length();
  std::vector<Partition> chain;
  for (std::size_t k = 1; k <= n; ++k) chain.push_back(jordan_of_block(a, static_cast<std::size_t>(f.dim(n - k)), a.rows()));
  return RowStandardTableau(std::move(chain));
}

ModulePoint module_matrices(Sign kind, int k, const PrimeField& field) {
  if (k < 1) throw std::invalid_argument("module length must be positive");
  const Sign leftmost = k % 2 == 1 ? kind : flip(kind);
  // Position j (0-based, left to right) has sign leftmost flipped j times.
  std::vector<Sign> signs;
  std::vector<std::size_t> index;
  std::size_t nq = 0;
  std::size_t np = 0;
  Sign s = leftmost;
  for (int j = 0; j < k; ++j, s = flip(s)) {
    signs.push_back(s);
    index.push_back(s == Sign::Plus ? nq++ : np++);
  }
  ModulePoint pt{FieldMatrix(np, nq, field), FieldMatrix(nq, np, field)};
  for (std::size_t j = 1; j < signs.size(); ++j) {
    if (signs[j] == Sign::Plus) {
      pt.x.set(index[j - 1], index[j], 1);
    } else {
      pt.y.set(index[j - 1], index[j], 1);
    }
  }
  return pt;
}

ModulePoint direct_sum(const ModulePoint& a, const ModulePoint& b) {
  return {block_diagonal(a.x, b.x), block_diagonal(a.y, b.y)};
}

ModulePoint module_of(const SignedYoungDiagram& d, const PrimeField& field) {
  ModulePoint out{FieldMatrix(0, 0, field), FieldMatrix(0, 0, field)};
  for (const auto& row : d.rows()) {
    const Sign generator = row.length % 2 == 1 ? row.first : flip(row.first);
    out = direct_sum(out, module_matrices(generator, row.length, field));
  }
  return out;
}

FieldMatrix z_of(const ModulePoint& pt) {
  const std::size_t q = pt.q();
  const std::size_t p = pt.p();
  FieldMatrix z(q + p, q + p, pt.x.field());
  z.paste(0, q, pt.y);
  z.paste(q, q, pt.x * pt.y);
  return z;
}

SignedYoungDiagram syd_of_pair(const ModulePoint& pt) {
  const std::size_t q = pt.q();
  const std::size_t p = pt.p();
  if (pt.y.rows() != q || pt.y.cols() != p) throw std::invalid_argument("y must be q x p when x is p x q");
  const FieldMatrix yx = pt.y * pt.x;
  const FieldMatrix xy = pt.x * pt.y;
  const Partition plus = jordan_type(yx);
  const Partition minus = jordan_type(xy);
  // kernel dims of x(yx)^i on V_q and y(xy)^i on V_p, i = 0..q+p.
  std::vector<std::size_t> plus_kernels;
  std::vector<std::size_t> minus_kernels;
  FieldMatrix a = pt.x;
  FieldMatrix b = pt.y;
  for (std::size_t i = 0; i <= q + p; ++i) {
    plus_kernels.push_back(kernel_dim(a));
    minus_kernels.push_back(kernel_dim(b));
    a = a * yx;
    b = b * xy;
  }
  std::vector<SignedYoungDiagram> matches;
  for (const auto& d : enumerate_syd(Signature{static_cast<int>(q), static_cast<int>(p)})) {
    if (lambda_plus(d) != plus || lambda_minus(d) != minus) continue;
    bool ok = true;
    for (std::size_t i = 0; i <= q + p && ok; ++i) {
      const int cols = static_cast<int>(2 * i + 1);
      ok = static_cast<std::size_t>(boxes_in_first_columns(d, Sign::Plus, cols)) == plus_kernels[i] &&
           static_cast<std::size_t>(boxes_in_first_columns(d, Sign::Minus, cols)) == minus_kernels[i];
    }
    if (ok) matches.push_back(d);
  }
  if (matches.size() != 1) {
    throw std::logic_error("syd_of_pair: expected exactly one matching diagram, found " +
                           std::to_string(matches.size()));
  }
  return matches.front();
}

PartialPermutation orbit_of_matrix(const FieldMatrix& x) {
  const std::size_t p = x.rows();
  const std::size_t q = x.cols();
  // r(i, j) = rank of rows j+1..p of the first i columns = dim(xE_i + F_j) - j.
  auto r = [&](std::size_t i, std::size_t j) -> long {
    if (i == 0 || j >= p) return 0;
    return static_cast<long>(rank(x.block(j, 0, p - j, i)));
  };
  std::vector<PartialPermutation::Cell> ones;
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t l = 1; l <= q; ++l) {
      const long v = r(l, k - 1) - r(l - 1, k - 1) - r(l, k) + r(l - 1, k);
      if (v == 1) {
        ones.emplace_back(static_cast<int>(k), static_cast<int>(l));
      } else if (v != 0) {
        throw std::logic_error("orbit_of_matrix: rank table is not that of a partial permutation");
      }
    }
  }
  return PartialPermutation(static_cast<int>(p), static_cast<int>(q), std::move(ones));
}

namespace {

FieldMatrix dense_of(const PartialPermutation& t, const PrimeField& field) {
  FieldMatrix m(static_cast<std::size_t>(t.p()), static_cast<std::size_t>(t.q()), field);
  for (const auto& [r, c] : t.ones()) m.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1), 1);
  return m;
}

FieldMatrix random_combination(const std::vector<FieldMatrix>& basis, std::size_t rows, std::size_t cols,
                               const PrimeField& field, Rng& rng) {
  FieldMatrix out(rows, cols, field);
  for (const auto& v : basis) out = out + v.scaled(field.random(rng));
  return out;
}

}  // namespace

FieldMatrix sample_orbit_point(const PartialPermutation& t, const PrimeField& field, Rng& rng) {
  const auto p = static_cast<std::size_t>(t.p());
  const auto q = static_cast<std::size_t>(t.q());
  const FieldMatrix g = random_upper_triangular(q, field, rng);
  const FieldMatrix h = random_upper_triangular(p, field, rng);
  FieldMatrix x = h * dense_of(t, field) * inverse(g);
  if (!(orbit_of_matrix(x) == t)) throw std::logic_error("sample_orbit_point: sample left the orbit");
  return x;
}

std::vector<FieldMatrix> conormal_fibre(const FieldMatrix& x) {
  const std::size_t p = x.rows();
  const std::size_t q = x.cols();
  const PrimeField& f = x.field();
  auto unknown = [&](std::size_t r, std::size_t c) { return r * p + c; };
  const std::size_t equations = q * (q + 1) / 2 + p * (p + 1) / 2;
  FieldMatrix system(equations, q * p, f);
  std::size_t eq = 0;
  // (yx)[r][c] = sum_k y[r][k] x[k][c] vanishes on and below the diagonal.
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c <= r; ++c, ++eq) {
      for (std::size_t k = 0; k < p; ++k) system.set(eq, unknown(r, k), x(k, c));
    }
  }
  // (xy)[r][c] = sum_k x[r][k] y[k][c].
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c <= r; ++c, ++eq) {
      for (std::size_t k = 0; k < q; ++k) system.set(eq, unknown(k, c), x(r, k));
    }
  }
  std::vector<FieldMatrix> out;
  for (const auto& v : nullspace(system)) {
    FieldMatrix y(q, p, f);
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < p; ++c) y.set(r, c, v(unknown(r, c), 0));
    }
    out.push_back(std::move(y));
  }
  return out;
}

FieldMatrix bordered_x(const FieldMatrix& x) {
  const std::size_t p = x.rows();
  const std::size_t q = x.cols();
  FieldMatrix out = FieldMatrix::identity(q + p, x.field());
  out.paste(q, 0, x);
  return out;
}

Flag bordered_e_flag(const FieldMatrix& x) {
  const std::size_t p = x.rows();
  const std::size_t q = x.cols();
  std::vector<int> cuts(q);
  std::iota(cuts.begin(), cuts.end(), 1);
  cuts.push_back(static_cast<int>(q + p));
  return Flag(bordered_x(x), std::move(cuts));
}

Flag bordered_f_flag(std::size_t p, std::size_t q, const PrimeField& field) {
  std::vector<int> cuts;
  for (std::size_t i = 0; i <= p; ++i) cuts.push_back(static_cast<int>(q + i));
  return Flag(FieldMatrix::identity(q + p, field), std::move(cuts));
}

MarginMatrix schubert_position(const Flag& e, const Flag& f) {
  if (e.ambient() != f.ambient()) throw std::invalid_argument("flags live in different spaces");
  const std::size_t ne = e.length();
  const std::size_t nf = f.length();
  // d[k][l] = dim(e_l cap f_k)
  std::vector<std::vector<long>> d(nf + 1, std::vector<long>(ne + 1, 0));
  for (std::size_t k = 1; k <= nf; ++k) {
    for (std::size_t l = 1; l <= ne; ++l) {
      const long joint = static_cast<long>(rank(hconcat(e.subspace(l), f.subspace(k))));
      d[k][l] = e.dim(l) + f.dim(k) - joint;
    }
  }
  std::vector<std::vector<int>> sigma(nf, std::vector<int>(ne, 0));
  for (std::size_t k = 1; k <= nf; ++k) {
    for (std::size_t l = 1; l <= ne; ++l) {
      sigma[k - 1][l - 1] = static_cast<int>(d[k][l] - d[k - 1][l] - d[k][l - 1] + d[k - 1][l - 1]);
    }
  }
  return MarginMatrix(std::move(sigma));
}

OracleConfig OracleConfig::from_env() {
  OracleConfig config;
  if (const char* text = std::getenv("STEINBERG_RSK_PRIME"); text != nullptr && *text != '\0') {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("STEINBERG_RSK_PRIME is not an integer: ") + text);
    }
    if (used != std::string(text).size()) {
      throw std::invalid_argument(std::string("STEINBERG_RSK_PRIME is not an integer: ") + text);
    }
    config.field = PrimeField(value);
  }
  return config;
}

ConormalCertificate certify(const ModulePoint& pt) {
  const std::size_t q = pt.q();
  const std::size_t p = pt.p();
  const PrimeField& field = pt.x.field();
  const FieldMatrix yx = pt.y * pt.x;
  const FieldMatrix xy = pt.x * pt.y;
  const FieldMatrix z = z_of(pt);
  const Flag e_full = Flag::coordinate(Composition(std::vector<int>(q, 1)), field);
  const Flag f_full = Flag::coordinate(Composition(std::vector<int>(p, 1)), field);
  const Flag e_tilde = bordered_e_flag(pt.x);
  const Flag f_tilde = bordered_f_flag(p, q, field);
  std::vector<RowStandardTableau> phat_quotients;
  std::vector<RowStandardTableau> qhat_quotients;
  for (std::size_t i = 0; i <= f_tilde.length(); ++i) phat_quotients.push_back(quotient_tab_chain(z, f_tilde, i));
  for (std::size_t i = 0; i <= e_tilde.length(); ++i) qhat_quotients.push_back(quotient_tab_chain(z, e_tilde, i));
  return ConormalCertificate{
      .orbit = orbit_of_matrix(pt.x),
      .dual_orbit = orbit_of_matrix(pt.y),
      .diagram = syd_of_pair(pt),
      .q_tab = tab_chain(yx, e_full),
      .p_tab = tab_chain(xy, f_full),
      .qhat = tab_chain(z, e_tilde),
      .phat = tab_chain(z, f_tilde),
      .phat_quotients = std::move(phat_quotients),
      .qhat_quotients = std::move(qhat_quotients),
      .phat_evacuation = evacuation_chain(z, f_tilde),
      .qhat_evacuation = evacuation_chain(z, e_tilde),
  };
}

namespace {

void check_budget(const OracleConfig& config) {
  if (config.trials < 2) throw std::invalid_argument("genericity protocol needs at least 2 trials");
  if (config.retry_rounds < 0) throw std::invalid_argument("retry budget must be nonnegative");
}

}  // namespace

ConormalSample generic_conormal_sample(const PartialPermutation& t, const OracleConfig& config, Rng& rng) {
  check_budget(config);
  const auto p = static_cast<std::size_t>(t.p());
  const auto q = static_cast<std::size_t>(t.q());
  for (int round = 1; round <= 1 + config.retry_rounds; ++round) {
    std::vector<ConormalSample> samples;
    for (int k = 0; k < config.trials; ++k) {
      FieldMatrix x = sample_orbit_point(t, config.field, rng);
      FieldMatrix y = random_combination(conormal_fibre(x), q, p, config.field, rng);
      ModulePoint pt{std::move(x), std::move(y)};
      ConormalCertificate cert = certify(pt);
      samples.push_back(ConormalSample{std::move(pt), std::move(cert), round});
    }
    const bool stable = std::all_of(samples.begin(), samples.end(),
                                    [&](const ConormalSample& s) { return s.certificate == samples.front().certificate; });
    if (stable) return samples.front();
  }
  throw GenericityFailure("generic_conormal_sample: certificates still disagree after the retry budget");
}

PartialPermutation dual_orbit_check(const PartialPermutation& t, const OracleConfig& config, Rng& rng) {
  return generic_conormal_sample(t, config, rng).certificate.dual_orbit;
}

std::pair<RowStandardTableau, RowStandardTableau> conormal_tableaux(const MarginMatrix& sigma,
                                                                   const OracleConfig& config, Rng& rng) {
  check_budget(config);
  if (sigma.rows() == 0) return {};
  struct Point {
    int row;
    int col;
  };
  // One basis vector per unit of sigma, in row-major order so that F is a coordinate flag.
  std::vector<Point> points;
  for (int r = 0; r < sigma.rows(); ++r) {
    for (int c = 0; c < sigma.cols(); ++c) {
      for (int k = 0; k < sigma(r, c); ++k) points.push_back({r, c});
    }
  }
  const std::size_t n = points.size();
  std::vector<std::size_t> by_col(n);
  std::iota(by_col.begin(), by_col.end(), 0);
  std::stable_sort(by_col.begin(), by_col.end(), [&](std::size_t a, std::size_t b) { return points[a].col < points[b].col; });
  FieldMatrix e_basis(n, n, config.field);
  for (std::size_t j = 0; j < n; ++j) e_basis.set(by_col[j], j, 1);
  const Composition cols = sigma.col_margins();
  std::vector<int> e_cuts;
  for (std::size_t l = 1; l <= cols.length(); ++l) e_cuts.push_back(cols.prefix_sum(l));
  const Flag e(std::move(e_basis), std::move(e_cuts));
  const Flag f = Flag::coordinate(sigma.row_margins(), config.field);

  for (int round = 1; round <= 1 + config.retry_rounds; ++round) {
    std::vector<std::pair<RowStandardTableau, RowStandardTableau>> results;
    for (int k = 0; k < config.trials; ++k) {
      FieldMatrix z(n, n, config.field);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (points[u].row < points[v].row && points[u].col < points[v].col) z.set(u, v, config.field.random(rng));
        }
      }
      results.emplace_back(tab_chain(z, e), tab_chain(z, f));
    }
    if (std::all_of(results.begin(), results.end(), [&](const auto& r) { return r == results.front(); })) {
      return results.front();
    }
  }
  throw GenericityFailure("conormal_tableaux: tableaux still disagree after the retry budget");
}

}  // namespace srsk
