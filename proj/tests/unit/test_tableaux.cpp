#include <random>

#include "doctest.h"
#include "steinberg_rsk/oracle.hpp"
#include "steinberg_rsk/tableaux.hpp"
#include "support.hpp"

using namespace srsk;
using test::rst;

TEST_CASE("chain validation") {
  CHECK(rst({{1}, {1, 1}}).shape() == Partition{1, 1});
  CHECK(rst({{1}, {1, 1}, {2, 2}}).shape() == Partition{2, 2});
  CHECK(rst({{1, 1}}).content() == Composition{2});
  // Two boxes in one row would repeat a label in that row.
  CHECK_THROWS_AS(rst({{1}, {2}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(rst({{2}}), std::invalid_argument);
  CHECK_THROWS_AS(rst({{2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(rst({{1}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(rst({{2}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(RowStandardTableau(Composition{1, 2}, {{1}, {2}}), std::invalid_argument);
}

TEST_CASE("filling view") {
  const auto t = rst({{1}, {1, 1}, {2, 2}});
  CHECK(t.filling() == Filling{{1, 3}, {2, 3}});
  CHECK(RowStandardTableau::from_filling(t.filling()) == t);
  CHECK(is_row_standard_filling({{1, 2}, {1, 3}}));
  CHECK_FALSE(is_row_standard_filling({{1, 1}}));
  CHECK_FALSE(is_row_standard_filling({{2, 3}, {1, 3}}));
}

TEST_CASE("chain validator agrees with the filling validator on random fillings") {
  Rng rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> lens;
    int len = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int r = 0; r < rows; ++r) {
      lens.push_back(len);
      len = std::uniform_int_distribution<int>(1, len)(rng);
    }
    Filling f;
    for (int l : lens) {
      std::vector<int> row;
      for (int c = 0; c < l; ++c) row.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
      f.push_back(row);
    }
    bool labels_contiguous = true;
    int maxl = 0;
    std::vector<bool> used(5, false);
    for (const auto& row : f) {
      for (int v : row) {
        used[static_cast<std::size_t>(v)] = true;
        maxl = std::max(maxl, v);
      }
    }
    for (int v = 1; v <= maxl; ++v) labels_contiguous = labels_contiguous && used[static_cast<std::size_t>(v)];
    if (!labels_contiguous) continue;
    bool chain_ok = true;
    try {
      RowStandardTableau::from_filling(f);
    } catch (const std::invalid_argument&) {
      chain_ok = false;
    }
    CAPTURE(trial);
    CHECK(chain_ok == is_row_standard_filling(f));
  }
}

TEST_CASE("restrict and extend") {
  CHECK(restrict(rst({{1}, {1, 1}, {2, 2}}), 2) == rst({{1}, {1, 1}}));
  const auto t = rst({{1}, {2}, {3, 1}});
  CHECK(restrict(t, 3) == t);
  CHECK(restrict(t, 2) == rst({{1}, {2}}));
  CHECK(extend(rst({{1}, {1, 1}}), Partition{2, 2}) == rst({{1}, {1, 1}, {2, 2}}));
  CHECK(extend(rst({{1}, {2}}), Partition{3, 1}) == rst({{1}, {2}, {3, 1}}));
  CHECK_THROWS(extend(t, t.shape()));
  CHECK_THROWS(restrict(t, 0));
}

TEST_CASE("rectify fixtures") {
  CHECK(rectify(rst({{1, 1}, {2, 1}, {2, 2}}), 1) == rst({{1}, {1, 1}}));
  const auto t = rst({{1}, {1, 1}, {2, 2}});
  CHECK(rectify(t, 0) == t);
  CHECK(rectify(rst({{1}, {2}}), 1) == rst({{1}}));
  CHECK(rectify(t, t.length()) == RowStandardTableau{});
}

TEST_CASE("evacuate fixtures") {
  CHECK(evacuate(rst({{1}, {1, 1}})) == rst({{1}, {1, 1}}));
  CHECK(evacuate(rst({{1}, {2}})) == rst({{1}, {2}}));
  const auto ev = evacuate(rst({{1}, {1, 1}, {2, 2}}));
  CHECK(ev.shape() == Partition{2, 2});
  CHECK(ev.content() == Composition{2, 1, 1});
}

TEST_CASE("enumerate_syt fixtures") {
  CHECK(enumerate_syt(Partition{2}).size() == 1);
  CHECK(enumerate_syt(Partition{1, 1}).size() == 1);
  const auto two_one = enumerate_syt(Partition{2, 1});
  REQUIRE(two_one.size() == 2);
  CHECK(std::find(two_one.begin(), two_one.end(), rst({{1}, {2}, {2, 1}})) != two_one.end());
  CHECK(std::find(two_one.begin(), two_one.end(), rst({{1}, {1, 1}, {2, 1}})) != two_one.end());
}

TEST_CASE("enumerate_tableaux respects shape and content") {
  for (const auto& t : enumerate_tableaux(Partition{2, 1}, Composition{2, 1})) {
    CHECK(t.shape() == Partition{2, 1});
    CHECK(t.content() == Composition{2, 1});
  }
  // (2,1): the second label sits either in row 1 or in row 2 below nothing.
  CHECK(enumerate_tableaux(Partition{2, 1}, Composition{2, 1}).size() == 1);
  CHECK(enumerate_tableaux(Partition{2, 1}, Composition{1, 2}).size() == 1);
}

TEST_CASE("transpose swaps strip kinds") {
  const auto t = rst({{1}, {1, 1}, {2, 2}});
  const SemistandardTableau s = transpose(t);
  CHECK(s.shape() == Partition{2, 2});
  CHECK(transpose(s) == t);
}

TEST_CASE("tie rule: from the right is forced by generic quotient chains") {
  // Standard tableaux have no ties, so the two rules must agree there.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& t : enumerate_syt(lam)) {
        for (std::size_t i = 0; i <= t.length(); ++i) {
          CHECK(rectify(t, i, TieRule::FromBelow) == rectify(t, i, TieRule::FromRight));
        }
      }
    }
  }
  Rng rng(3);
  const OracleConfig config = test::config();
  std::size_t right_mismatches = 0;
  std::size_t below_mismatches = 0;
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      for (const auto& t : enumerate_pp(p, q)) {
        const ConormalCertificate c = generic_conormal_sample(t, config, rng).certificate;
        const std::pair<const RowStandardTableau*, const std::vector<RowStandardTableau>*> hats[] = {
            {&c.phat, &c.phat_quotients}, {&c.qhat, &c.qhat_quotients}};
        for (const auto& [hat, quotients] : hats) {
          for (std::size_t i = 0; i < quotients->size(); ++i) {
            if (!(rectify(*hat, i, TieRule::FromRight) == (*quotients)[i])) ++right_mismatches;
            try {
              if (!(rectify(*hat, i, TieRule::FromBelow) == (*quotients)[i])) ++below_mismatches;
            } catch (const std::logic_error&) {
              ++below_mismatches;
            }
          }
        }
      }
    }
  }
  CHECK(right_mismatches == 0);
  CHECK(below_mismatches > 0);
}
