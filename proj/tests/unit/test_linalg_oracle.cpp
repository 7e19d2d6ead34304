#include "doctest.h"
#include "steinberg_rsk/correspondence.hpp"
#include "steinberg_rsk/oracle.hpp"
#include "support.hpp"

using namespace srsk;
using test::pp;
using test::rst;

namespace {

const PrimeField F;

FieldMatrix m(std::vector<std::vector<std::int64_t>> rows) { return FieldMatrix::from_rows(rows, F); }

FieldMatrix jordan_block(std::size_t n) {
  FieldMatrix j(n, n, F);
  for (std::size_t i = 0; i + 1 < n; ++i) j.set(i, i + 1, 1);
  return j;
}

FieldMatrix dense(const PartialPermutation& t) {
  FieldMatrix x(static_cast<std::size_t>(t.p()), static_cast<std::size_t>(t.q()), F);
  for (const auto& [r, c] : t.ones()) x.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1), 1);
  return x;
}

bool upper_triangular(const FieldMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < i && j < x.cols(); ++j) {
      if (x(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field") {
  CHECK(is_prime(2147483647));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(2147483649ULL));
  CHECK_THROWS(PrimeField(10));
  CHECK_THROWS(PrimeField(4294967311ULL));  // prime, but not below 2^32
  const PrimeField f7(7);
  CHECK(f7.mul(3, f7.inv(3)) == 1);
  CHECK(f7.reduce(-1) == 6);
  CHECK(f7.pow(3, 6) == 1);
  CHECK_THROWS(f7.inv(0));
}

TEST_CASE("rank examples") {
  CHECK(rank(FieldMatrix::identity(4, F)) == 4);
  CHECK(rank(FieldMatrix(3, 2, F)) == 0);
  CHECK(rank(m({{0, 1}, {0, 0}})) == 1);
  CHECK(kernel_dim(m({{0, 1}, {0, 0}})) == 1);
  CHECK(rank(m({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("inverse and nullspace") {
  Rng rng(1);
  for (std::size_t n = 0; n <= 5; ++n) {
    const FieldMatrix g = random_invertible(n, F, rng);
    CHECK(g * inverse(g) == FieldMatrix::identity(n, F));
  }
  CHECK_THROWS_AS(inverse(m({{1, 2}, {2, 4}})), std::domain_error);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldMatrix a = random_matrix(3, 6, F, rng);
    const FieldMatrix low = random_matrix(3, 2, F, rng) * random_matrix(2, 6, F, rng);
    for (const FieldMatrix* x : {&a, &low}) {
      const auto basis = nullspace(*x);
      CHECK(basis.size() == x->cols() - rank(*x));
      for (const auto& v : basis) CHECK((*x * v).is_zero());
    }
  }
}

TEST_CASE("jordan type examples") {
  CHECK(jordan_type(FieldMatrix(3, 3, F)) == Partition{1, 1, 1});
  CHECK(jordan_type(jordan_block(4)) == Partition{4});
  CHECK(jordan_type(block_diagonal(jordan_block(2), jordan_block(2))) == Partition{2, 2});
  CHECK_THROWS_AS(jordan_type(FieldMatrix::identity(2, F)), NotNilpotent);
}

TEST_CASE("jordan type of conjugated block sums") {
  Rng rng(2);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      FieldMatrix j(0, 0, F);
      for (int part : lam.parts()) j = block_diagonal(j, jordan_block(static_cast<std::size_t>(part)));
      const FieldMatrix g = random_invertible(static_cast<std::size_t>(n), F, rng);
      CHECK(jordan_type(g * j * inverse(g)) == lam);
    }
  }
}

TEST_CASE("flags") {
  const Flag f = Flag::coordinate(Composition{1, 2}, F);
  CHECK(f.length() == 2);
  CHECK(f.dim(1) == 1);
  CHECK(f.composition() == Composition{1, 2});
  CHECK_THROWS(Flag(FieldMatrix::identity(3, F), {2, 1, 3}));
  CHECK_THROWS(Flag(FieldMatrix::identity(3, F), {1, 2}));
  CHECK_THROWS(Flag(m({{1, 1}, {1, 1}}), {1, 2}));
}

TEST_CASE("tab_chain examples") {
  CHECK(tab_chain(FieldMatrix(2, 2, F), Flag::coordinate(Composition{1, 1}, F)) == rst({{1}, {1, 1}}));
  // z = [[0, y], [0, 0]] with y invertible 2 x 2.
  FieldMatrix z(4, 4, F);
  z.paste(0, 2, m({{3, 1}, {5, 2}}));
  CHECK(tab_chain(z, Flag::coordinate(Composition{1, 1, 2}, F)) == rst({{1}, {1, 1}, {2, 2}}));
  CHECK(tab_chain(z, Flag::coordinate(Composition{2, 1, 1}, F)) == rst({{1, 1}, {2, 1}, {2, 2}}));
  // z does not preserve the span of e_3.
  const Flag bad(FieldMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}, F), {1, 4});
  CHECK_THROWS_AS(tab_chain(z, bad), FlagInvarianceError);
}

TEST_CASE("module examples") {
  const ModulePoint u2 = module_matrices(Sign::Minus, 2, F);
  CHECK(u2.x.is_zero());
  CHECK(jordan_type(z_of(u2)) == Partition{2});
  CHECK(jordan_type(z_of(module_matrices(Sign::Plus, 4, F))) == Partition{2, 1, 1});
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const ModulePoint u1 = module_matrices(s, 1, F);
    CHECK(z_of(u1).is_zero());
    CHECK(jordan_type(z_of(u1)) == Partition{1});
  }
  CHECK(syd_of_pair(module_matrices(Sign::Plus, 4, F)) == SignedYoungDiagram::from_strings({"-+-+"}));
}

TEST_CASE("syd_of_pair examples") {
  const ModulePoint invertible_y{FieldMatrix(2, 2, F), m({{1, 2}, {3, 4}})};
  CHECK(syd_of_pair(invertible_y) == SignedYoungDiagram::from_strings({"+-", "+-"}));
  const ModulePoint invertible_x{m({{1, 2}, {3, 4}}), FieldMatrix(2, 2, F)};
  CHECK(syd_of_pair(invertible_x) == SignedYoungDiagram::from_strings({"-+", "-+"}));
}

TEST_CASE("module_of realises every diagram") {
  for (int q = 0; q <= 4; ++q) {
    for (int p = 0; p <= 4; ++p) {
      for (const auto& d : enumerate_syd(Signature{q, p})) {
        const ModulePoint pt = module_of(d, F);
        CHECK(pt.q() == static_cast<std::size_t>(q));
        CHECK(pt.p() == static_cast<std::size_t>(p));
        CHECK(syd_of_pair(pt) == d);
        CHECK(jordan_type(z_of(pt)) == z_shape(d));
      }
    }
  }
}

TEST_CASE("orbit examples") {
  Rng rng(4);
  CHECK(orbit_of_matrix(FieldMatrix(2, 3, F)) == pp(2, 3));
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (const auto& t : enumerate_pp(p, q)) {
        CHECK(orbit_of_matrix(dense(t)) == t);
        CHECK(orbit_of_matrix(sample_orbit_point(t, F, rng)) == t);
      }
    }
  }
  CHECK(sample_orbit_point(pp(2, 2), F, rng).is_zero());
  const FieldMatrix x = sample_orbit_point(pp(3, 3, {{1, 1}, {2, 2}, {3, 3}}), F, rng);
  CHECK(rank(x) == 3);
  CHECK(upper_triangular(x));
}

TEST_CASE("conormal fibre dimensions") {
  Rng rng(6);
  CHECK(conormal_fibre(FieldMatrix(2, 3, F)).size() == 6);
  CHECK(conormal_fibre(sample_orbit_point(pp(2, 2, {{1, 2}, {2, 1}}), F, rng)).empty());
  CHECK(conormal_fibre(sample_orbit_point(pp(2, 2, {{1, 2}}), F, rng)).size() == 3);
  // Every basis vector satisfies the strict triangularity conditions.
  const FieldMatrix x = sample_orbit_point(pp(3, 2, {{2, 1}}), F, rng);
  for (const auto& y : conormal_fibre(x)) {
    const FieldMatrix yx = y * x;
    const FieldMatrix xy = x * y;
    for (std::size_t i = 0; i < yx.rows(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) CHECK(yx(i, j) == 0);
    }
    for (std::size_t i = 0; i < xy.rows(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) CHECK(xy(i, j) == 0);
    }
  }
}

TEST_CASE("generic conormal sample examples") {
  Rng rng(8);
  const OracleConfig config = test::config();
  const auto zero = generic_conormal_sample(pp(1, 1), config, rng);
  CHECK(zero.point.y(0, 0) != 0);
  CHECK(zero.certificate.diagram == SignedYoungDiagram::from_strings({"+-"}));
  const auto one = generic_conormal_sample(pp(1, 1, {{1, 1}}), config, rng);
  CHECK(one.point.y.is_zero());
  CHECK(one.certificate.diagram == SignedYoungDiagram::from_strings({"-+"}));
  const auto ident = generic_conormal_sample(pp(2, 2, {{1, 1}, {2, 2}}), config, rng);
  const FieldMatrix xy = ident.point.x * ident.point.y;
  CHECK(rank(xy) == 1);
  CHECK(xy(1, 0) == 0);
  CHECK(xy(0, 0) == 0);
  CHECK(xy(1, 1) == 0);
  CHECK(ident.certificate.diagram == SignedYoungDiagram::from_strings({"-+-+"}));
}

TEST_CASE("genericity needs two agreeing trials") {
  Rng rng(9);
  OracleConfig config = test::config();
  config.trials = 2;
  CHECK(generic_conormal_sample(pp(2, 2, {{1, 2}}), config, rng).certificate.diagram ==
        SignedYoungDiagram::from_strings({"+-+-"}));
  config.trials = 1;
  CHECK_THROWS_AS(generic_conormal_sample(pp(2, 2, {{1, 2}}), config, rng), std::invalid_argument);
}

TEST_CASE("schubert position examples") {
  const Flag f = bordered_f_flag(2, 2, F);
  CHECK(schubert_position(bordered_e_flag(FieldMatrix(2, 2, F)), f) == MarginMatrix({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
  const Flag full = Flag::coordinate(Composition{1, 1, 1}, F);
  CHECK(schubert_position(full, full) == MarginMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  Rng rng(10);
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const Flag bf = bordered_f_flag(static_cast<std::size_t>(p), static_cast<std::size_t>(q), F);
      for (const auto& t : enumerate_pp(p, q)) {
        CHECK(schubert_position(bordered_e_flag(sample_orbit_point(t, F, rng)), bf) == tau_hat(t));
      }
    }
  }
}

TEST_CASE("dual orbit examples") {
  Rng rng(12);
  const OracleConfig config = test::config();
  CHECK(dual_orbit_check(pp(2, 2), config, rng) == pp(2, 2, {{1, 2}, {2, 1}}));
  CHECK(dual_orbit_check(pp(2, 2, {{1, 2}, {2, 1}}), config, rng) == pp(2, 2));
  CHECK(dual_orbit_check(pp(2, 2, {{1, 1}, {2, 2}}), config, rng) == pp(2, 2, {{1, 2}}));
}

TEST_CASE("the oracle is deterministic for a fixed seed") {
  const OracleConfig config = test::config();
  Rng a(77);
  Rng b(77);
  const auto t = pp(3, 3, {{1, 2}, {3, 1}});
  CHECK(generic_conormal_sample(t, config, a).certificate == generic_conormal_sample(t, config, b).certificate);
}

TEST_CASE("the prime can be overridden from the environment") {
  setenv("STEINBERG_RSK_PRIME", "1000003", 1);
  CHECK(OracleConfig::from_env().field.prime() == 1000003);
  setenv("STEINBERG_RSK_PRIME", "1000004", 1);
  CHECK_THROWS(OracleConfig::from_env());
  unsetenv("STEINBERG_RSK_PRIME");
  CHECK(OracleConfig::from_env().field.prime() == kDefaultPrime);
}
