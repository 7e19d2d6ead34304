#include "doctest.h"
#include "steinberg_rsk/partitions.hpp"
#include "steinberg_rsk/tableaux.hpp"

using namespace srsk;

namespace {

// Hook length formula, independent of the lattice DP.
std::int64_t hook_count(const Partition& p) {
  const Partition c = conjugate(p);
  std::int64_t num = 1;
  std::int64_t den = 1;
  int n = 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      num *= ++n;
      den *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  return num / den;
}

// N^2 minus the centralizer dimension sum_j (lambda'_j)^2.
std::int64_t orbit_dim_by_centralizer(const Partition& p) {
  const std::int64_t n = p.size();
  std::int64_t cent = 0;
  const Partition c = conjugate(p);
  for (int part : c.parts()) cent += static_cast<std::int64_t>(part) * part;
  return n * n - cent;
}

}  // namespace

TEST_CASE("partition storage and validation") {
  CHECK(Partition{3, 1, 0, 0}.parts() == std::vector<int>{3, 1});
  CHECK(Partition{2, 1}[5] == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 0, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition{}.size() == 0);
  CHECK_THROWS(Composition({2, 0, 1}));
}

TEST_CASE("dominance examples") {
  CHECK(dominance_leq(Partition{1, 1, 1, 1}, Partition{4}));
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{2, 1}), IncomparableSizes);
}

TEST_CASE("young lattice examples") {
  CHECK(young_leq(Partition{1, 1}, Partition{2, 2}));
  CHECK_FALSE(young_leq(Partition{2}, Partition{1, 1}));
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) CHECK(young_leq(Partition{}, lam));
  }
}

TEST_CASE("add and conjugate examples") {
  CHECK(add(Partition{1, 1}, Partition{1, 1}) == Partition{2, 2});
  CHECK(add(Partition{2}, Partition{1, 1}) == Partition{3, 1});
  CHECK(add(Partition{3, 2}, Partition{}) == Partition{3, 2});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("column strips") {
  CHECK(is_column_strip(Partition{1, 1}, Partition{2, 2}));
  CHECK_FALSE(is_column_strip(Partition{1, 1}, Partition{3, 1}));
  CHECK(is_column_strip(Partition{2, 1}, Partition{2, 1}));
  CHECK(is_horizontal_strip(Partition{1, 1}, Partition{3, 1}));
  CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{1, 1, 1}));
}

TEST_CASE("nilpotent orbit dimension") {
  CHECK(nilpotent_orbit_dim(Partition{1, 1, 1, 1}) == 0);
  CHECK(nilpotent_orbit_dim(Partition{4}) == 12);
  CHECK(nilpotent_orbit_dim(Partition{2, 2}) == 8);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CAPTURE(lam.to_string());
      CHECK(nilpotent_orbit_dim(lam) == orbit_dim_by_centralizer(lam));
      CHECK(nilpotent_orbit_dim(lam) % 2 == 0);
    }
  }
}

TEST_CASE("count_syt against hook lengths and enumeration") {
  CHECK(count_syt(Partition{5}) == 1);
  CHECK(count_syt(Partition{2, 2}) == 2);
  CHECK(count_syt(Partition{2, 1}) == 2);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CAPTURE(lam.to_string());
      CHECK(count_syt(lam) == hook_count(lam));
      if (n <= 6) CHECK(count_syt(lam) == static_cast<std::int64_t>(enumerate_syt(lam).size()));
    }
  }
}

TEST_CASE("count_syt overflow is reported") {
  // (1^70) has a single tableau; a 30 x 30 square does not fit in 64 bits.
  CHECK(count_syt(Partition(std::vector<int>(70, 1))) == 1);
  CHECK_THROWS_AS(count_syt(Partition(std::vector<int>(30, 30))), CountOverflow);
}

TEST_CASE("partitions_of counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == expected[n]);
  CHECK(partitions_of(4).front() == Partition{4});
}

TEST_CASE("dominance is a partial order with extremes; add and conjugate interact as expected") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = partitions_of(n);
    const Partition top{n};
    const Partition bottom(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a));
      CHECK(dominance_leq(bottom, a));
      CHECK(dominance_leq(a, top));
      CHECK(conjugate(conjugate(a)) == a);
      for (const auto& b : all) {
        if (a != b && dominance_leq(a, b)) CHECK_FALSE(dominance_leq(b, a));
        CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
        for (const auto& mu : partitions_of(n <= 3 ? 2 : 1)) {
          CHECK(dominance_leq(a, b) == dominance_leq(add(a, mu), add(b, mu)));
        }
        for (const auto& c : all) {
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
      }
    }
  }
}
