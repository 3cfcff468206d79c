// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "polycount/errors.hpp"
#include "polycount/identities.hpp"

using namespace polycount;

TEST_CASE("evaluator examples") {
  CHECK(eval(C(7, 2), {}) == 21);
  auto s = V("s"), j = V("j");
  CHECK(eval(sgn(j) * C(s, j), {{"s", Rat(4)}, {"j", Rat(3)}}) == -4);
  CHECK(eval(C(s + j - 1, j) * (s - j) / s, {{"s", Rat(5)}, {"j", Rat(2)}}) == 9);
  CHECK(eval(C(-1, 3), {}) == -1);
  CHECK(eval(C(Q(1, 2), 2), {}) == frac(-1, 8));
  CHECK(eval(C(3, 5), {}) == 0);
  CHECK(eval(C(4, -1), {}) == 0);
}

TEST_CASE("summation variable shadows substitution") {
  auto i = V("i"), t = V("t");
  auto e = sum("t", 0, i, t);
  CHECK(eval(e.substitute("t", Expr(100)), {{"i", Rat(3)}}) == 6);
  CHECK(eval(e.substitute("i", i + 1), {{"i", Rat(3)}}) == 10);
}

TEST_CASE("poles raise and are skipped by checks") {
  auto n = V("n");
  CHECK_THROWS_AS(eval(1 / n, {{"n", Rat(0)}}), PoleError);
  CHECK_THROWS_AS(eval(1 / C(2, 3), {}), PoleError);
  CHECK_THROWS_AS(eval(0 * (1 / n), {{"n", Rat(0)}}), PoleError);

  IdentityCheck check{"local/pole", CheckKind::closed_form_sum, "", {}, [n](const std::vector<Expr>&) {
                        return std::vector<Equation>{{"x", n / n, 1, {axis("n", -2, 2)}, {}}};
                      }};
  auto out = run_check(check);
  CHECK(out.points == 4);
  CHECK(out.skipped == 1);
  CHECK(out.passed());
}

TEST_CASE("a check with no evaluated points fails") {
  IdentityCheck check{"local/empty", CheckKind::closed_form_sum, "", {}, [](const std::vector<Expr>&) {
                        return std::vector<Equation>{{"x", 1, 1, {axis("n", 1, 0)}, {}}};
                      }};
  CHECK_FALSE(run_check(check).passed());
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "q3/s10-closed-form"));
  CHECK(glob_match("appendix-c/*", "appendix-c/chu-vandermonde"));
  CHECK_FALSE(glob_match("appendix-c/*", "appendix-d/alternating-row"));
  CHECK(glob_match("q?/*", "q4/initial-values"));
  CHECK_FALSE(glob_match("q?", "q4/initial-values"));
  CHECK(glob_match("*vandermonde", "appendix-c/chu-vandermonde"));
}

TEST_CASE("registry names are unique and namespaced") {
  std::set<std::string> seen;
  for (const auto& c : registry()) {
    CHECK(seen.insert(c.name).second);
    CHECK(c.name.find('/') != std::string::npos);
  }
  CHECK(registry().size() >= 40);
}

TEST_CASE("filtered registry runs") {
  auto r = run_registry("appendix-c/*");
  CHECK(r.checks.size() == 3);
  CHECK(r.ok());
  auto none = run_registry("no-such-group/*");
  CHECK(none.checks.empty());
  CHECK(none.ok());
}

TEST_CASE("every registered identity holds on its grid") {
  for (const auto& c : registry()) {
    auto out = run_check(c);
    INFO(c.name, " ", out.first_failure);
    CHECK(out.passed());
    CHECK(out.points >= 20);
  }
}

TEST_CASE("perturbing any certificate literal breaks its check") {
  for (const auto& c : registry()) {
    if (c.parts.empty()) continue;
    auto m = mutation_test(c);
    std::string list;
    for (const auto& s : m.survivors) list += s + "; ";
    INFO(c.name, " survivors: ", list);
    CHECK(m.perturbations > 0);
    CHECK(m.ok());
  }
}
