#include "doctest.h"

#include "polycount/errors.hpp"
#include "polycount/hseq.hpp"
#include "polycount/recurrences.hpp"
#include "polycount/weights.hpp"

using namespace polycount;

namespace {

Int weight_at(const WeightGrid& g, IdentitySet set, Orientation o, int i, int j) {
  for (const auto& p : g.placements)
    if (p.set == set && p.orientation == o && p.i == i && p.j == j) return p.weight;
  FAIL("no placement at (" << i << "," << j << ")");
  return 0;
}

}  // namespace

TEST_CASE("build_weight_grid examples") {
  auto g4 = build_weight_grid(4);
  CHECK(weight_at(g4, IdentitySet::p1, Orientation::vertical, 0, 0) == 1);
  CHECK(weight_at(g4, IdentitySet::p1, Orientation::vertical, 2, 1) == -4);
  CHECK(weight_at(g4, IdentitySet::p2, Orientation::vertical, 1, 3) == -20);
  auto g5 = build_weight_grid(5);
  CHECK(weight_at(g5, IdentitySet::p2, Orientation::vertical, 8, 1) == -125);
  CHECK(weight_at(g5, IdentitySet::p2, Orientation::horizontal, 1, 8) == -125);
}

TEST_CASE("placement counts") {
  for (int s = 1; s <= 6; ++s) {
    auto g = build_weight_grid(s);
    std::size_t p1 = (s + 1) * (s + 2) / 2 + s * (s + 1) / 2;
    CHECK(g.count(IdentitySet::p1, Orientation::vertical) == p1);
    CHECK(g.count(IdentitySet::p1, Orientation::horizontal) == p1);
    // Each P2 triangle has s(s+1)/2 entries.
    CHECK(g.count(IdentitySet::p2, Orientation::vertical) == static_cast<std::size_t>(s * (s + 1)));
    CHECK(g.count(IdentitySet::p2, Orientation::horizontal) == static_cast<std::size_t>(s * (s + 1)));
  }
}

TEST_CASE("mirror symmetry") {
  for (int s = 1; s <= 6; ++s) {
    auto g = build_weight_grid(s);
    auto v = accumulate_lhs(g, std::nullopt, Orientation::vertical);
    auto h = accumulate_lhs(g, std::nullopt, Orientation::horizontal);
    for (int i = 0; i <= 2 * s; ++i)
      for (int j = 0; j <= 2 * s; ++j) CHECK(v[i][j] == h[j][i]);
  }
}

TEST_CASE("accumulate_lhs examples") {
  auto g1 = build_weight_grid(1);
  CHECK(g1.gamma[0][0] == 2);
  CHECK(g1.gamma[1][1] == -4);
  CHECK(g1.gamma[2][2] == 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(g1.gamma[i][j] == 0);
  CHECK(build_weight_grid(4).gamma[2][2] == 56);
  CHECK(build_weight_grid(5).gamma[7][3] == 0);
}

TEST_CASE("full cancellation for s <= 6") {
  for (int s = 1; s <= 6; ++s) {
    auto g = build_weight_grid(s);
    for (int i = 0; i <= 2 * s; ++i)
      for (int j = 0; j <= 2 * s; ++j) {
        CAPTURE(s);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(g.gamma[i][j] == (i == j ? 2 * neg_one_pow(i) * binom(2 * s, i) : Int(0)));
      }
  }
}

TEST_CASE("alpha_p1 examples and agreement with the grid") {
  CHECK(alpha_p1(4, 3, 3) == -112);
  CHECK(alpha_p1(3, 6, 6) == 2);
  for (int s = 1; s <= 6; ++s) {
    auto g = build_weight_grid(s);
    auto p1 = accumulate_lhs(g, IdentitySet::p1);
    for (int i = 0; i <= 2 * s; ++i)
      for (int j = 0; j <= 2 * s; ++j) CHECK(alpha_p1(s, i, j) == p1[i][j]);
  }
  auto p1 = accumulate_lhs(build_weight_grid(2), IdentitySet::p1);
  CHECK(alpha_p1(2, 0, 1) == p1[0][1]);
  CHECK_THROWS_AS(alpha_p1(2, 5, 0), ParameterError);
}

TEST_CASE("accumulate_rhs examples") {
  CHECK(accumulate_rhs(build_weight_grid(1), {2, -1, 1, 10}) == 4);
  auto g3 = build_weight_grid(3);
  CHECK(accumulate_rhs(g3, {2, 5, 3, 40}) == 960);
  CHECK(accumulate_rhs(g3, {2, 5, 3, 17}) == 960);
  CHECK(accumulate_rhs(build_weight_grid(2), {1, 0, 2, 9}) == 12);
  CHECK_THROWS_AS(accumulate_rhs(g3, {2, 5, 3, 6}), ParameterError);
}

TEST_CASE("RHS invariance in n and eta") {
  for (int s = 1; s <= 6; ++s) {
    auto g = build_weight_grid(s);
    for (Rat lambda : {Rat(2), Rat(1), Rat(-3, 2)})
      for (auto [eta, n] : std::vector<std::pair<Rat, long>>{{-1, 2 * s + 1}, {5, 40}, {Rat(7, 3), 123}}) {
        Rat want = rpow(lambda, s) * Rat(binom(2 * s, s) * factorial(s));
        CHECK(accumulate_rhs(g, {lambda, eta, s, n}) == want);
        CHECK(accumulate_rhs_horizontal(g, lambda, eta, n + 3) == want);
      }
    // lambda = 2 gives 2^s (2s)! / s!.
    CHECK(rhs_target(s, 2) == Rat(ipow(Int(2), s) * factorial(2 * s) / factorial(s)));
  }
}

TEST_CASE("verify_weights report") {
  auto r = verify_weights({2, -1, 4, 30});
  CHECK(r.ok());
  bool seen = false;
  for (auto& c : r.checks)
    if (c.name == "weights/rhs") {
      CHECK(c.actual == "26880");
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("column sums") {
  auto g4 = build_weight_grid(4);
  Int p1_0 = 0, p2_1 = 0;
  for (auto& p : g4.placements) {
    if (p.orientation != Orientation::vertical) continue;
    if (p.set == IdentitySet::p1 && p.i == 0) p1_0 += p.weight;
    if (p.set == IdentitySet::p2 && p.i == 1) p2_1 += p.weight;
  }
  CHECK(p1_0 == 1);
  CHECK(p2_1 == -39);
  CHECK(p2_1 == h_recursive(4, 1, 2).value + h_recursive(4, 1, 3).value + h_recursive(4, 1, 4).value);
  for (int s = 1; s <= 8; ++s) {
    auto r = verify_rhs_column_sums(s);
    CAPTURE(s);
    CHECK(r.ok());
  }
}

TEST_CASE("stirling lemma for s <= 10") {
  CHECK(stirling_sum(3, 1) == 6);
  for (int s = 1; s <= 10; ++s) {
    CHECK(stirling_sum(s, 0) == Int(s) * factorial(s + 1) / 2);
    CHECK(stirling_sum(s, 1) == factorial(s));
    for (int t = 2; t <= s + 1; ++t) CHECK(stirling_sum(s, t) == 0);
  }
}

TEST_CASE("quadrant lemma examples") {
  // (-1)^{j+1} C(2s, j) at j = 5 is +C(8, 5).
  CHECK(double_sum_u(4, 7, 5) == 56);
  CHECK(double_sum_u(3, 4, 4) == 0);
  auto r3 = verify_quadrant_lemmas(3);
  for (auto& c : r3.checks)
    if (c.name.rfind("q1/", 0) == 0) CHECK(c.status == Status::pass);
}

TEST_CASE("quadrant suite for s <= 6") {
  for (int s = 1; s <= 6; ++s) {
    auto r = verify_quadrant_lemmas(s);
    CAPTURE(s);
    for (auto* f : r.failures()) {
      std::string where;
      for (auto& [k, v] : f->inputs) where += k + "=" + v + " ";
      FAIL_CHECK(f->name << " at " << where << "expected " << f->expected << " got " << f->actual);
    }
    CHECK(r.checks.size() > 0);
  }
}

TEST_CASE("every cell belongs to exactly one region") {
  for (int s = 1; s <= 5; ++s) {
    int counts[4] = {0, 0, 0, 0};
    for (int i = 0; i <= 2 * s; ++i)
      for (int j = 0; j <= 2 * s; ++j) ++counts[static_cast<int>(region_of(s, i, j))];
    CHECK(counts[0] == (s + 1) * (s + 1) - 1);
    CHECK(counts[2] == (s + 1) * (s + 1));
    CHECK(counts[1] == s * s);
    CHECK(counts[3] == s * s);
  }
}

TEST_CASE("end-to-end on real counts") {
  EnumeratingSource src;
  for (int s = 1; s <= 2; ++s)
    for (auto [n, m] : std::vector<std::pair<int, int>>{{6, 6}, {7, 9}, {9, 7}}) {
      auto r = verify_end_to_end(2, s, n, m, src);
      CAPTURE(s);
      CHECK(r.ok());
    }
  auto r = verify_end_to_end(3, 1, 6, 7, src);
  CHECK(r.ok());
  CHECK_THROWS_AS(verify_end_to_end(2, 2, 5, 8, src), RangeError);
}
