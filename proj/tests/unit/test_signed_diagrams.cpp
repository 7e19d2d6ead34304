#include <algorithm>
#include <map>

#include "doctest.h"
#include "steinberg_rsk/signed_diagrams.hpp"

using namespace srsk;

namespace {

SignedYoungDiagram syd(std::vector<std::string> rows) { return SignedYoungDiagram::from_strings(rows); }

// Brute force: all multisets of alternating rows with q pluses and p minuses.
void brute(int q, int p, int max_len, std::vector<SignedRow>& acc, std::vector<SignedYoungDiagram>& out) {
  if (q == 0 && p == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int len = max_len; len >= 1; --len) {
    for (Sign first : {Sign::Minus, Sign::Plus}) {
      const SignedRow row{len, first};
      if (!acc.empty() && canonical_before(row, acc.back())) continue;
      const int plus = row.count(Sign::Plus);
      const int minus = row.count(Sign::Minus);
      if (plus > q || minus > p) continue;
      acc.push_back(row);
      brute(q - plus, p - minus, len, acc, out);
      acc.pop_back();
    }
  }
}

std::vector<SignedYoungDiagram> brute_syd(int q, int p) {
  std::vector<SignedRow> acc;
  std::vector<SignedYoungDiagram> out;
  brute(q, p, q + p, acc, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(syd({"+", "-+-"}) == syd({"-+-", "+"}));
  CHECK(syd({"+-", "-+"}) == syd({"-+", "+-"}));
  CHECK_THROWS(syd({"++"}));
  CHECK_THROWS(syd({"+x"}));
  CHECK(syd({"-+-", "+"}).signature() == Signature{2, 2});
}

TEST_CASE("shape and lambda examples") {
  CHECK(shape(syd({"+-", "+-"})) == Partition{2, 2});
  CHECK(shape(syd({"-+-", "+"})) == Partition{3, 1});
  CHECK(shape(SignedYoungDiagram{}) == Partition{});
  CHECK(lambda_plus(syd({"+-", "+-"})) == Partition{1, 1});
  CHECK(lambda_minus(syd({"+-", "+-"})) == Partition{1, 1});
  CHECK(lambda_plus(syd({"-+-+"})) == Partition{2});
  CHECK(lambda_minus(syd({"-+-+"})) == Partition{2});
  CHECK(lambda_plus(syd({"+"})) == Partition{1});
  CHECK(lambda_minus(syd({"+"})) == Partition{});
}

TEST_CASE("admissibility examples") {
  CHECK(is_admissible(syd({"+-", "+-"})));
  CHECK_FALSE(is_admissible(syd({"+", "-"})));
  CHECK(is_admissible(syd({"+-", "-+"})));
}

TEST_CASE("z_shape examples") {
  CHECK(z_shape(syd({"-+-+"})) == Partition{2, 1, 1});
  CHECK(z_shape(syd({"+-", "+-"})) == Partition{2, 2});
  CHECK(z_shape(syd({"+-+-"})) == Partition{3, 1});
}

TEST_CASE("boxes in first columns") {
  CHECK(boxes_in_first_columns(syd({"+-+-"}), Sign::Plus, 1) == 1);
  CHECK(boxes_in_first_columns(syd({"-+-+"}), Sign::Plus, 1) == 0);
  const auto d = syd({"+-+-+", "-+", "+"});
  CHECK(boxes_in_first_columns(d, Sign::Plus, 5) == d.signature().q);
  CHECK(boxes_in_first_columns(d, Sign::Minus, 7) == d.signature().p);
  CHECK_THROWS(boxes_in_first_columns(d, Sign::Plus, 2));
}

TEST_CASE("closure order examples") {
  CHECK(closure_leq(syd({"+-", "+-"}), syd({"+-+-"})));
  CHECK_FALSE(closure_leq(syd({"+-+-"}), syd({"+-", "+-"})));
  CHECK(closure_leq(syd({"-+-"}), syd({"-+-"})));
  CHECK_THROWS(closure_leq(syd({"+"}), syd({"-"})));
}

TEST_CASE("orbit dimension examples") {
  CHECK(orbit_dim(syd({"+-", "+-"})) == 4);
  CHECK(orbit_dim(syd({"+", "-"})) == 0);
  CHECK(orbit_dim(syd({"-+-+"})) == 6);
}

TEST_CASE("dual examples") {
  CHECK(dual(syd({"+-", "+-"})) == syd({"-+", "-+"}));
  CHECK(dual(syd({"-+-", "+"})) == syd({"+-+", "-"}));
  for (const auto& d : enumerate_syd(Signature{3, 2})) CHECK(dual(dual(d)) == d);
}

TEST_CASE("enumeration examples") {
  const auto s11 = enumerate_syd(Signature{1, 1});
  CHECK(s11.size() == 3);
  for (const auto& d : {syd({"+-"}), syd({"-+"}), syd({"+", "-"})}) {
    CHECK(std::find(s11.begin(), s11.end(), d) != s11.end());
  }
  CHECK(enumerate_asyd(Signature{1, 1}).size() == 2);
  const auto a22 = enumerate_asyd(Signature{2, 2});
  CHECK(a22.size() == 7);
  for (const auto& d : {syd({"+-", "+-"}), syd({"-+", "-+"}), syd({"+-", "-+"}), syd({"+-+", "-"}), syd({"-+-", "+"}),
                        syd({"+-+-"}), syd({"-+-+"})}) {
    CHECK(std::find(a22.begin(), a22.end(), d) != a22.end());
  }
  const auto s00 = enumerate_syd(Signature{0, 0});
  REQUIRE(s00.size() == 1);
  CHECK(s00.front().rows().empty());
}

TEST_CASE("enumeration matches brute force and is sorted") {
  for (int q = 0; q <= 4; ++q) {
    for (int p = 0; p <= 4; ++p) {
      const auto all = enumerate_syd(Signature{q, p});
      CHECK(all == brute_syd(q, p));
      CHECK(std::is_sorted(all.begin(), all.end()));
      std::vector<SignedYoungDiagram> adm;
      for (const auto& d : all) {
        if (is_admissible(d)) adm.push_back(d);
      }
      CHECK(enumerate_asyd(Signature{q, p}) == adm);
    }
  }
}

TEST_CASE("diagram invariants") {
  for (int q = 0; q <= 4; ++q) {
    for (int p = 0; p <= 4; ++p) {
      for (const auto& d : enumerate_syd(Signature{q, p})) {
        CAPTURE(d.to_string());
        CHECK(lambda_plus(d).size() == q);
        CHECK(lambda_minus(d).size() == p);
        CHECK(z_shape(d).size() == q + p);
        CHECK(2 * orbit_dim(d) == nilpotent_orbit_dim(shape(d)));
        CHECK(closure_leq(d, d));
      }
    }
  }
}

TEST_CASE("hasse edges are covers of the closure order") {
  const auto nodes = enumerate_syd(Signature{2, 2});
  const auto edges = closure_hasse_edges(nodes);
  for (const auto& [lo, hi] : edges) {
    CHECK(lo != hi);
    CHECK(closure_leq(nodes[lo], nodes[hi]));
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k == lo || k == hi) continue;
      CHECK_FALSE((closure_leq(nodes[lo], nodes[k]) && closure_leq(nodes[k], nodes[hi])));
    }
  }
  const auto small = enumerate_syd(Signature{1, 1});
  const auto se = closure_hasse_edges(small);
  CHECK(se.size() == 2);
  for (const auto& [lo, hi] : se) CHECK(small[lo] == syd({"+", "-"}));
}
