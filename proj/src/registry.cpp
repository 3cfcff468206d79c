// SPDX-License-Identifier: Apache-2.0
#include <utility>

#include "polycount/identities.hpp"

namespace polycount {

namespace {

using Parts = std::vector<Expr>;
using Eqs = std::vector<Equation>;
using Grid = std::vector<GridAxis>;

const Expr s = V("s"), i = V("i"), j = V("j"), jp = V("jp"), ip = V("ip"), t = V("t"), x = V("x"), z = V("z");

std::vector<Rat> xs() { return {frac(1, 3), frac(-2, 5), frac(3, 7), frac(5, 2)}; }
std::vector<Rat> zs() { return {frac(1, 3), frac(-2, 5), frac(3, 4), frac(7, 3)}; }

// [a >= 0] for integer a.
Expr nonneg(const Expr& a) { return C(a, a); }

// Terms of the explicit formula for h_{s,i,j}.
Expr h1(const Expr& S, const Expr& I, const Expr& J) { return sgn(J + 1) * C(S, J) * nonneg(I - J); }
Expr h2(const Expr& S, const Expr& I, const Expr& J) {
  return sgn(I + 1) * C(2 * S, I) * C(S + J - I - 1, S) * nonneg(S + J - I - 1);
}
Expr h3(const Expr& S, const Expr& I, const Expr& J) {
  const Expr u = V("u");
  return sgn(I) * (2 * S - I) * C(2 * S, I) * sum("u", 0, I, sgn(u) / (2 * S - u) * C(I, u) * C(S - u - 1 + J, J));
}
Expr hx(const Expr& S, const Expr& I, const Expr& J) { return h1(S, I, J) + h2(S, I, J) + h3(S, I, J); }

Grid grid(std::initializer_list<GridAxis> axes) { return Grid(axes); }

struct Builder {
  std::vector<IdentityCheck> out;

  void add(std::string name, CheckKind kind, std::string desc, Parts parts,
           std::function<Eqs(const Parts&)> build) {
    out.push_back(IdentityCheck{std::move(name), kind, std::move(desc), std::move(parts), std::move(build)});
  }
};

// ---------------------------------------------------------------- evaluator
void evaluator_checks(Builder& b) {
  const Expr n = V("n"), k = V("k"), a = V("a");
  b.add("evaluator/binomial-symmetry", CheckKind::closed_form_sum, "C(n,k) = C(n,n-k) for integer n >= k >= 0", {},
        [=](const Parts&) {
          return Eqs{{"symmetry", C(n, k), C(n, n - k), grid({axis("n", 0, 24), axis("k", 0, n)}), {}}};
        });
  b.add("evaluator/upper-negation", CheckKind::closed_form_sum, "C(-a,k) = (-1)^k C(a+k-1,k)", {}, [=](const Parts&) {
    return Eqs{{"negation", C(-a, k), sgn(k) * C(a + k - 1, k), grid({axis("a", -6, 8), axis("k", 0, 7)}), {}}};
  });
}

// ------------------------------------------------------- generating function
void gf_checks(Builder& b) {
  auto F1 = sgn(i + t) * (2 * s - i) * C(2 * s, i) * C(i, t) / ((2 * s - t) * pow(1 - x, s - t)) *
            (-(s * x / (i + 1) - 1) - x * (s - t) / (i + 1));
  auto F2 = sgn(i + t + 1) * (2 * s - i - 1) * C(2 * s, i + 1) * C(i + 1, t) / ((2 * s - t) * pow(1 - x, s - t));
  auto base = [] { return grid({axis("s", 1, 5), axis("i", 0, s - 1), axis_values("x", xs())}); };

  b.add("gf-proof/split-antidifference", CheckKind::antidifference,
        "antidifference of the t-summand F1 - F2 in the row recursion of the third part",
        {sgn(i + t + 1) * C(2 * s, i + 1) * C(i, t - 1) / pow(1 - x, s - t)}, [=](const Parts& p) {
          auto g = base();
          g.insert(g.begin() + 2, axis("t", 0, i));
          return Eqs{antidifference_pointwise("pointwise", F1 - F2, p[0], "t", g),
                     {"telescoped", sum("t", 0, i, F1 - F2), p[0].substitute("t", i + 1) - p[0].substitute("t", 0),
                      base(), {}},
                     closed_form_sum("closed form", "t", 0, i, F1 - F2, C(2 * s, i + 1) / pow(1 - x, s - i - 1),
                                     base())};
        });

  b.add("gf-proof/second-family-split", CheckKind::closed_form_sum,
        "third part of H_{i+1} splits into the F2 sum plus its t = i+1 term", {}, [=](const Parts&) {
          auto lhs = sgn(i + 1) * (2 * s - i - 1) * C(2 * s, i + 1) *
                     sum("t", 0, i + 1, sgn(t) * C(i + 1, t) / ((2 * s - t) * pow(1 - x, s - t)));
          auto rhs = sum("t", 0, i, F2) + C(2 * s, i + 1) / pow(1 - x, s - i - 1);
          return Eqs{{"split", lhs, rhs, grid({axis("s", 1, 6), axis("i", 0, s - 2), axis_values("x", xs())}), {}}};
        });

  b.add("gf-proof/first-family-derivative", CheckKind::closed_form_sum,
        "row operator applied to the third part equals the F1 sum", {}, [=](const Parts&) {
          auto H3 = sgn(i) * (2 * s - i) * C(2 * s, i) * sum("t", 0, i, sgn(t) / (2 * s - t) * C(i, t) / pow(1 - x, s - t));
          auto dH3 = sgn(i) * (2 * s - i) * C(2 * s, i) *
                     sum("t", 0, i, sgn(t) / (2 * s - t) * C(i, t) * (s - t) / pow(1 - x, s - t + 1));
          auto lhs = -(s * x / (i + 1) - 1) * H3 + x * (x - 1) / (i + 1) * dH3;
          return Eqs{{"operator", lhs, sum("t", 0, i, F1), base(), {}}};
        });

  b.add("gf-proof/binomial-shift", CheckKind::closed_form_sum, "j C(s,j) + (j+1) C(s,j+1) = s C(s,j)", {},
        [=](const Parts&) {
          return Eqs{{"shift", j * C(s, j) + (j + 1) * C(s, j + 1), s * C(s, j),
                      grid({axis("s", 0, 9), axis("j", -1, s + 1)}), {}}};
        });

  b.add("gf-proof/first-part-step", CheckKind::closed_form_sum, "row operator maps the polynomial part of H_i to that of H_{i+1}",
        {}, [=](const Parts&) {
          auto H1 = [&](const Expr& I) { return sum("j", 0, I, sgn(j + 1) * C(s, j) * pow(x, j)); };
          auto dH1 = sum("j", 1, i, sgn(j + 1) * j * C(s, j) * pow(x, j - 1));
          auto lhs = -(s * x / (i + 1) - 1) * H1(i) + x * (x - 1) / (i + 1) * dH1;
          return Eqs{{"step", lhs, H1(i + 1), base(), {}}};
        });

  b.add("gf-proof/second-part-step", CheckKind::closed_form_sum,
        "row operator maps the x^{i+1}/(1-x)^{s+1} part of H_i to that of H_{i+1}", {}, [=](const Parts&) {
          auto H2 = [&](const Expr& I) { return sgn(I + 1) * C(2 * s, I) * pow(x, I + 1) / pow(1 - x, s + 1); };
          auto dH2 = sgn(i + 1) * C(2 * s, i) * pow(x, i) / pow(1 - x, s + 1) * ((i + 1) + (s + 1) * x / (1 - x));
          auto lhs = -(s * x / (i + 1) - 1) * H2(i) + x * (x - 1) / (i + 1) * dH2;
          return Eqs{{"step", lhs, H2(i + 1), base(), {}}};
        });
}

// ------------------------------------------------------------- first quadrant
void q1_checks(Builder& b) {
  auto tri = [] { return grid({axis("s", 1, 8), axis("i", 0, s - 1), axis("j", i + 1, s)}); };
  b.add("q1/binomial-row-sum", CheckKind::closed_form_sum, "sum_{i'} C(s,i') C(s,i-i') = C(2s,i)", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("row", "ip", 0, i, C(s, ip) * C(s, i - ip), C(2 * s, i), tri())};
        });
  b.add("q1/second-term-sum", CheckKind::closed_form_sum,
        "sum_{j'=i+1}^{j} (-1)^{j-j'} C(s+j'-i-1,s) C(s,j-j') = 1", {}, [=](const Parts&) {
          return Eqs{closed_form_sum("sum", "jp", i + 1, j, sgn(j - jp) * C(s + jp - i - 1, s) * C(s, j - jp), 1, tri())};
        });
  b.add("q1/third-term-inner", CheckKind::closed_form_sum,
        "inner sum of the third h-term vanishes for t <= i < j", {}, [=](const Parts&) {
          auto g = tri();
          g.push_back(axis("t", 0, i));
          g[0] = axis("s", 1, 7);
          return Eqs{closed_form_sum("inner", "jp", 0, j, sgn(jp) * C(s - t - 1 + jp, jp) * C(s, j - jp), 0, g)};
        });
  b.add("q1/p1-diagonal", CheckKind::closed_form_sum, "P1 coefficient on the diagonal is 2 (-1)^i C(2s,i)", {},
        [=](const Parts&) {
          // On the diagonal the clamped range is max(0, i-s) .. min(s, i).
          auto g = grid({axis("s", 1, 7), axis("i", 0, 2 * s)});
          auto lo = (i - s) * nonneg(i - s), hi = i - (i - s) * nonneg(i - s);
          return Eqs{{"diagonal", 2 * sgn(i) * sum("jp", lo, hi, C(s, jp) * C(s, i - jp)), 2 * sgn(i) * C(2 * s, i), g, {}}};
        });
}

// ------------------------------------------------------------- third quadrant
void q3_checks(Builder& b) {
  const auto F = sgn(t) / (2 * s - t) * C(2 * s - i, t) * C(2 * s - t - 1 - jp, s - jp);
  const auto corr = sum("t", 1, s - jp, sgn(t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1) / C(s - jp, t));
  const auto closed = sgn(s + i + jp) / i * C(s, jp) / C(2 * s, i);

  b.add("q3/sum-t-recurrence", CheckKind::certificate_recurrence,
        "second-order recurrence in j' of the t-sum, with its certificate",
        {-(jp - s) * (i - jp - s - 1), 2 * i * jp - i * s - 2 * jp * jp + 2 * i - 5 * jp + s - 3, -(jp + 2) * (i - jp - 2),
         t * (jp - s) * (2 * s - t) / (-2 * s + t + 1 + jp)},
        [=](const Parts& p) {
          return Eqs{certificate_pointwise(
              "pointwise", F, "jp", {p[0], p[1], p[2]}, "t", p[3],
              grid({axis("s", 1, 5), axis("i", s + 1, 2 * s), axis("jp", 0, s), axis("t", 0, 2 * s - i)}))};
        });

  b.add("q3/sum-t-closed-form", CheckKind::closed_form_sum, "t-sum in closed form when j' >= i - s", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("closed", "t", 0, 2 * s - i, F, closed,
                                     grid({axis("s", 1, 6), axis("i", s, 2 * s), axis("jp", i - s, s)}))};
        });

  b.add("q3/sum-t-transform", CheckKind::closed_form_sum, "t-sum equals the closed form plus the correction term", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("transform", "t", 0, 2 * s - i, F, closed + corr,
                                     grid({axis("s", 1, 5), axis("i", s, 2 * s), axis("jp", 0, s)}))};
        });

  b.add("q3/correction-vanishes", CheckKind::closed_form_sum, "correction term is zero for j' >= i - s", {},
        [=](const Parts&) {
          return Eqs{{"zero", corr, 0, grid({axis("s", 1, 6), axis("i", s, 2 * s), axis("jp", i - s, s)}), {}}};
        });

  const auto bp_value = 1 / (2 * s - i + 1) + sgn(2 * i - 1) / i * C(s, i - s - 1) / C(2 * s, i);
  const auto Fbp = F.substitute("jp", i - s - 1);
  b.add("q3/breakpoint-value", CheckKind::closed_form_sum, "t-sum at j' = i - s - 1 and its two initial values", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("value", "t", 0, 2 * s - i, Fbp, bp_value,
                                     grid({axis("s", 1, 8), axis("i", s + 1, 2 * s)})),
                     {"i = 2s", sum("t", 0, 2 * s - i, Fbp).substitute("i", 2 * s), Q(1, 2), grid({axis("s", 1, 12)}), {}},
                     {"i = 2s - 1", sum("t", 0, 2 * s - i, Fbp).substitute("i", 2 * s - 1),
                      (3 * s - 1) / (4 * (2 * s - 1)), grid({axis("s", 2, 12)}), {}}};
        });

  b.add("q3/breakpoint-recurrence", CheckKind::certificate_recurrence,
        "second-order recurrence in i of the t-sum at j' = i - s - 1",
        {(i - 2 * s - 1) * i, -(2 * i - s + 1) * (i - 2 * s), (i - s + 1) * (i - 2 * s + 1),
         -(i - 2 * s - 1) * s * (2 * s - t) * t / ((i - 2 * s) * (-3 * s + t + i))},
        [=](const Parts& p) {
          Expr rec = p[0] * bp_value + p[1] * bp_value.substitute("i", i + 1) + p[2] * bp_value.substitute("i", i + 2);
          // The summand's j' moves with i, so F(i + r, t) is taken at the shifted breakpoint.
          return Eqs{certificate_pointwise("pointwise", Fbp, "i", {p[0], p[1], p[2]}, "t", p[3],
                                           grid({axis("s", 1, 7), axis("i", s + 1, 2 * s - 2), axis("t", -1, 2 * s - 1)})),
                     {"closed form obeys the recurrence", rec, 0, grid({axis("s", 1, 9), axis("i", s + 1, 2 * s - 2)}), {}}};
        });

  const auto Ftop = sgn(t) / (2 * s - t) * C(2 * s - i, t);
  b.add("q3/closed-form-top", CheckKind::certificate_recurrence, "first-order recurrence in i of the t-sum at j' = s",
        {i, 2 * s - i, (2 * s - t) * t / (i - 2 * s)}, [=](const Parts& p) {
          auto V0 = closed.substitute("jp", s);
          return Eqs{certificate_pointwise("pointwise", Ftop, "i", {p[0], p[1]}, "t", p[2],
                                           grid({axis("s", 1, 6), axis("i", 1, 2 * s - 1), axis("t", -1, 2 * s - 1)})),
                     {"closed form obeys the recurrence", p[0] * V0 + p[1] * V0.substitute("i", i + 1), 0,
                      grid({axis("s", 1, 10), axis("i", 1, 2 * s - 1)}), {}}};
        });

  const auto Fsec = sgn(t) * (s - t) / (2 * s - t) * C(2 * s - i, t);
  b.add("q3/closed-form-second", CheckKind::certificate_recurrence,
        "first-order recurrence in i of the t-sum at j' = s - 1",
        {-i * (i - 2 * s + 1), (i - 2 * s + 1) * (i - 2 * s),
         -(2 * s - t) * t * (i * s - 2 * s * s - s + 2 * s * t - i * t + i) / ((s - t) * (i - 2 * s))},
        [=](const Parts& p) {
          auto V1 = closed.substitute("jp", s - 1);
          return Eqs{certificate_pointwise("pointwise", Fsec, "i", {p[0], p[1]}, "t", p[2],
                                           grid({axis("s", 1, 6), axis("i", 1, 2 * s - 1), axis("t", -1, 2 * s - 1)})),
                     {"closed form obeys the recurrence", p[0] * V1 + p[1] * V1.substitute("i", i + 1), 0,
                      grid({axis("s", 2, 10), axis("i", s, 2 * s - 2)}), {}}};
        });

  const auto Fc = sgn(t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1) / C(s - jp, t);
  b.add("q3/correction-recurrence", CheckKind::certificate_recurrence,
        "first-order recurrence in j' of the correction term",
        {s - jp, jp + 1, (s + t - 1) * (jp - s) / (i - jp - 1)}, [=](const Parts& p) {
          auto g = grid({axis("s", 1, 6), axis("i", s + 1, 2 * s), axis("jp", 0, s - 1)});
          auto gp = g;
          gp.push_back(axis("t", 1, s - jp));
          return Eqs{certificate_pointwise("pointwise", Fc, "jp", {p[0], p[1]}, "t", p[2], gp),
                     telescoped_sum("telescoped", Fc, "jp", {p[0], p[1]}, "t", 1, s - jp,
                                    s * C(i - jp - 1, s) / (i - jp - 1), g)};
        });

  const auto S10 = sgn(jp) * C(i - jp - 1, s) * C(s, j - jp);
  b.add("q3/s10-closed-form", CheckKind::closed_form_sum,
        "sum_{j'<i} (-1)^{j'} C(i-j'-1,s) C(s,j-j') is (-1)^{s+j} for s <= j < i and 0 for j >= i", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("below i", "jp", 0, i - 1, S10, sgn(s + j),
                                     grid({axis("s", 1, 6), axis("i", s, 2 * s), axis("j", s, i - 1)})),
                     closed_form_sum("from i", "jp", 0, i - 1, S10, 0,
                                     grid({axis("s", 1, 6), axis("i", s, 2 * s), axis("j", i, 2 * s)}))};
        });

  b.add("q3/s10-certificate", CheckKind::certificate_recurrence, "first-order recurrence in j of the S10 summand",
        {i - j - 1, i - j - 1, (i - jp) * (-s + j - jp) / (j + 1 - jp)}, [=](const Parts& p) {
          return Eqs{certificate_pointwise(
              "pointwise", S10, "j", {p[0], p[1]}, "jp", p[2],
              grid({axis("s", 1, 5), axis("i", s, 2 * s), axis("j", 0, 2 * s - 1), axis("jp", -1, i)}))};
        });

  const auto ul = [] { return grid({axis("s", 1, 6), axis("i", s + 1, 2 * s), axis("j", s, i - 1)}); };
  b.add("q3/second-term", CheckKind::closed_form_sum,
        "second h-term contribution in the upper-left triangle is (-1)^{i+1} C(2s,i)", {}, [=](const Parts&) {
          auto summand = sgn(j - jp) * h2(s, 2 * s - i, s - jp) * C(s, j - jp);
          return Eqs{{"sum", sgn(s) * sum("jp", 0, s, summand), sgn(i + 1) * C(2 * s, i), ul(), {}}};
        });

  const auto q3 = [] { return grid({axis("s", 1, 5), axis("i", s, 2 * s), axis("j", s, i)}); };
  b.add("q3/inner-sum-first-term", CheckKind::closed_form_sum,
        "closed-form part of the inner t-sum contributes (-1)^j C(2s,j)", {}, [=](const Parts&) {
          auto lhs = sgn(s + i + j) * i * C(2 * s, i) * sum("jp", 0, s, sgn(jp) * closed * C(s, j - jp));
          return Eqs{{"sum", lhs, sgn(j) * C(2 * s, j), q3(), {}}};
        });

  const auto U = sgn(s + i + j) * i * C(2 * s, i) *
                 sum("jp", 0, s, sum("t", 1, s - jp, sgn(jp + t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1) *
                                                       C(s, j - jp) / C(s - jp, t)));
  b.add("q3/third-term-split", CheckKind::closed_form_sum,
        "third h-term contribution equals (-1)^j C(2s,j) plus the double sum U", {}, [=](const Parts&) {
          auto third = sgn(s) * sum("jp", 0, s, sgn(j - jp) * h3(s, 2 * s - i, s - jp) * C(s, j - jp));
          auto dbl = sgn(s + i) * i * C(2 * s, i) *
                     sum("jp", 0, s, sgn(j - jp) * C(s, j - jp) * sum("t", 0, 2 * s - i, F));
          return Eqs{{"double sum form", third, dbl, q3(), {}}, {"split", third, sgn(j) * C(2 * s, j) + U, q3(), {}}};
        });

  b.add("q3/double-sum-value", CheckKind::closed_form_sum, "U = (-1)^{j+1} C(2s,j) for i > j and 0 for i = j", {},
        [=](const Parts&) {
          return Eqs{{"strict", U, sgn(j + 1) * C(2 * s, j), ul(), {}},
                     {"diagonal", U.substitute("j", i), 0, grid({axis("s", 1, 6), axis("i", s, 2 * s)}), {}}};
        });

  const auto Fd = sgn(i + t + jp) * i / t * C(2 * s, i) * C(i - jp - 1, s + t - 1) * C(s, t - 1) * C(s, j - jp) /
                  C(s - jp, t);
  b.add("q3/double-sum-recurrence", CheckKind::double_sum_recurrence,
        "U(i+1) - U(i) telescopes in t with R_{j'} = 0",
        {-1, 1, (s - jp - t + 1) * (s + t - 1) / (i * (-jp + i + 1 - s - t)), 0}, [=](const Parts& p) {
          return Eqs{double_certificate_pointwise(
              "pointwise", Fd, "i", {p[0], p[1]}, "t", p[2], "jp", p[3],
              grid({axis("s", 1, 5), axis("i", s, 2 * s - 1), axis("j", s, 2 * s), axis("jp", 0, s - 1),
                    axis("t", 1, s - jp - 1)}))};
        });

  const auto Gt1 = sgn(i + jp + 1) * C(2 * s, i) * C(i - jp - 1, s - 1) * C(s, j - jp);
  b.add("q3/inhomogeneous-boundary-term", CheckKind::certificate_recurrence,
        "t = 1 boundary term of the double-sum recurrence",
        {(s - jp) * s / (i * (-jp + i - s))}, [=](const Parts& p) {
          return Eqs{{"boundary", p[0] * Fd.substitute("t", 1), Gt1,
                      grid({axis("s", 1, 5), axis("i", s, 2 * s), axis("j", s, 2 * s), axis("jp", 0, s)}), {}}};
        });

  b.add("q3/inhomogeneous-term", CheckKind::closed_form_sum,
        "g = U(i+1) - U(i) equals (-1)^{s+j} times the boundary sum over j' < s", {}, [=](const Parts&) {
          auto g = grid({axis("s", 1, 6), axis("i", s, 2 * s - 1), axis("j", s, i)});
          return Eqs{{"g", U.substitute("i", i + 1) - U, sgn(s + j) * sum("jp", 0, s - 1, Gt1), g, {}},
                     {"g on the diagonal", (U.substitute("i", i + 1) - U).substitute("j", i), sgn(i + 1) * C(2 * s, i),
                      grid({axis("s", 1, 6), axis("i", s, 2 * s - 1)}), {}}};
        });

  b.add("q3/inhomogeneous-antidifference", CheckKind::antidifference,
        "Gosper antidifference W(j') of the boundary term for i > j",
        {sgn(i + jp) * C(2 * s, i) * C(i - jp, i - j) * C(i - j - 1, i - s - jp)}, [=](const Parts& p) {
          return Eqs{antidifference_pointwise(
                         "pointwise", Gt1, p[0], "jp",
                         grid({axis("s", 1, 5), axis("i", s, 2 * s), axis("j", s, i - 1), axis("jp", -1, s + 1)})),
                     {"boundary sum vanishes", p[0].substitute("jp", s + 1) - p[0].substitute("jp", 0), 0, ul(), {}},
                     closed_form_sum("direct", "jp", 0, s, Gt1, 0, ul())};
        });

  const auto Gd = Gt1.substitute("j", i);
  const auto diag_poly = i * i + 3 * i - i * s - 3 * s + jp * s - 2 * i * jp + jp * jp - 2 * jp + 1;
  // The rational certificate's poles sit exactly on the support of Gd, so the
  // recurrence is checked against the cancelled product G = R * Gd instead.
  b.add("q3/inhomogeneous-diagonal", CheckKind::certificate_recurrence,
        "diagonal boundary term: first-order recurrence in i and its sum over j' = 0..s-1",
        {-2 * s + i, i + 1,
         diag_poly * sgn(i + jp + 1) * C(2 * s, i) * (i - jp - s) * C(i - jp, s - 1) * C(s + 1, i - jp + 1) / (s + 1)},
        [=](const Parts& p) {
          auto cert = diag_poly * (i - jp) * (i - jp - s) / ((i - jp - s + 1) * (i - jp + 1));
          auto g = grid({axis("s", 1, 6), axis("i", s, 2 * s - 1), axis("jp", -1, s + 1)});
          return Eqs{antidifference_pointwise("pointwise", p[0] * Gd + p[1] * Gd.substitute("i", i + 1), p[2], "jp", g),
                     {"cancelled certificate", cert * Gd, p[2],
                      grid({axis("s", 1, 6), axis("i", s - 1, 2 * s), axis("jp", -2, s + 2)}), {}},
                     closed_form_sum("sum", "jp", 0, s - 1, Gd, sgn(s + 1) * C(2 * s, i),
                                     grid({axis("s", 1, 8), axis("i", s, 2 * s - 1)}))};
        });

  const auto UF = sgn(jp + t + 1) / t * C(i - jp - 1, s + t - 1) * C(s, t - 1) * C(s, j - jp) / C(s - jp, t);
  const auto pre_top = (sgn(s + i + j) * i * C(2 * s, i)).substitute("i", 2 * s);
  const auto top = UF.substitute("i", 2 * s);
  b.add("q3/double-sum-top-row", CheckKind::antidifference, "U at i = 2s: antidifferences in t and in j'",
        {sgn(s + j + jp + t) * (s + t - 1) / t * C(2 * s - jp - 1, s + t - 1) * C(s, t - 1) * C(s, j - jp) / C(s - jp, t),
         sgn(s + jp + j) * s / (j - 2 * s) * C(2 * s - jp, s) * C(s - 1, j - jp)},
        [=](const Parts& p) {
          auto inner_value = sgn(j + 1) * C(s, jp) * C(s, j - jp) + sgn(s + jp + j) * C(s, j - jp) * C(2 * s - jp - 1, s - 1);
          return Eqs{antidifference_pointwise("t pointwise", pre_top * top, p[0], "t",
                                              grid({axis("s", 1, 5), axis("j", s, 2 * s), axis("jp", 0, s - 1),
                                                    axis("t", 1, s - jp - 1)})),
                     {"inner value", pre_top * sum("t", 1, s - jp, top), inner_value,
                      grid({axis("s", 1, 6), axis("j", s, 2 * s), axis("jp", 0, s)}), {}},
                     antidifference_pointwise("j' pointwise", sgn(s + jp + j) * C(s, j - jp) * C(2 * s - jp - 1, s - 1),
                                              p[1], "jp",
                                              grid({axis("s", 1, 5), axis("j", s, 2 * s - 1), axis("jp", -1, s + 1)}))};
        });
}

// ------------------------------------------------------------ fourth quadrant
void q4_checks(Builder& b) {
  const auto b2h = sgn(s + i + j) * C(2 * s, j) * sum("ip", 0, s, sgn(ip) * C(j - ip - 1, s) * C(s, i - ip));
  const auto b3v = sgn(i + j + 1) * (2 * s - i) * C(2 * s, i) *
                   sum("jp", 0, s,
                       sum("t", 0, i, sgn(t + jp) / (2 * s - t) * C(i, t) * C(s - t - 1 + jp, jp) * C(s, j - jp)));
  const auto rr = sgn(i + j + s + 1) * C(2 * s, i + 1) * C(2 * s - i - 1, j - i - 1) * C(j - i - 2, j - s - 1);
  auto q4 = [] {
    return grid({axis("s", 1, 5), axis("i", 0, s), axis("j", s, 2 * s)});
  };
  auto not_corner = [](const Env& e) {
    return !(e.get(var_slot("i")) == e.get(var_slot("s")) && e.get(var_slot("j")) == e.get(var_slot("s")));
  };
  auto step_not_corner = [](const Env& e) {
    return !(e.get(var_slot("i")) + 1 == e.get(var_slot("s")) && e.get(var_slot("j")) == e.get(var_slot("s")));
  };
  auto steps = [] { return grid({axis("s", 1, 5), axis("i", 0, s - 1), axis("j", s, 2 * s)}); };

  b.add("q4/inner-sum-transform", CheckKind::closed_form_sum, "t-sum after the change of variable", {},
        [=](const Parts&) {
          auto lhs = sum("t", 0, i, sgn(t) / (2 * s - t) * C(i, t) * C(s - t - 1 + jp, jp));
          auto rhs = sgn(i + jp) / (2 * s - i) * C(s, jp) / C(2 * s, i) +
                     sum("t", 1, jp, sgn(t + 1) / t * C(s, t - 1) * C(s + jp - i - 1, s + t - 1) / C(jp, t));
          return Eqs{{"transform", lhs, rhs, grid({axis("s", 1, 6), axis("i", 0, s), axis("jp", 0, s)}), {}}};
        });

  b.add("q4/third-term-two-part", CheckKind::closed_form_sum, "two-part form of the third-term coefficient", {},
        [=](const Parts&) {
          auto two = sgn(j + 1) * C(2 * s, j) +
                     sgn(i + j) * (2 * s - i) * C(2 * s, i) *
                         sum("jp", 0, s,
                             sum("t", 1, jp, sgn(jp + t) / t * C(s, t - 1) * C(s + jp - i - 1, s + t - 1) * C(s, j - jp) /
                                                 C(jp, t)));
          return Eqs{{"two-part", two, b3v, q4(), not_corner}};
        });

  b.add("q4/second-term-recurrence", CheckKind::closed_form_sum, "first difference in i of the second-term form", {},
        [=](const Parts&) {
          return Eqs{{"difference", b2h.substitute("i", i + 1) - b2h, rr, steps(), step_not_corner}};
        });

  b.add("q4/second-term-certificate", CheckKind::certificate_recurrence,
        "first-order recurrence in i of the second-term summand",
        {-i - 1 + j, i - j + 1, (j - ip) * (-s + i - ip) / (i + 1 - ip)}, [=](const Parts& p) {
          auto F = sgn(s + i + j + ip) * C(2 * s, j) * C(j - ip - 1, s) * C(s, i - ip);
          auto g = steps();
          g.push_back(axis("ip", -1, s + 1));
          return Eqs{certificate_pointwise("pointwise", F, "i", {p[0], p[1]}, "ip", p[2], g)};
        });

  b.add("q4/third-term-recurrence", CheckKind::closed_form_sum, "first difference in i of the third-term form", {},
        [=](const Parts&) {
          return Eqs{{"difference", b3v.substitute("i", i + 1) - b3v, -rr, steps(), step_not_corner}};
        });

  b.add("q4/third-term-certificate", CheckKind::double_sum_recurrence,
        "F(i+1) - F(i) telescopes in t for the two-part double sum",
        {-1, 1, -(jp - t + 1) * (s + t - 1) / ((-s - jp + i + 1) * (i + 1)), 0}, [=](const Parts& p) {
          auto F = sgn(i + j + jp + t) * (2 * s - i) / t * C(2 * s, i) * C(s, t - 1) * C(s + jp - i - 1, s + t - 1) *
                   C(s, j - jp) / C(jp, t);
          auto g = steps();
          g.push_back(axis("jp", 1, s));
          g.push_back(axis("t", 1, jp - 1));
          return Eqs{double_certificate_pointwise("pointwise", F, "i", {p[0], p[1]}, "t", p[2], "jp", p[3], g)};
        });

  b.add("q4/third-term-gosper", CheckKind::antidifference, "Gosper antidifference of the remaining j'-sum",
        {sgn(i + j + jp + 1) * C(2 * s, i + 1) * C(s + jp - i - 2, j - i - 1) * C(j - i - 2, j - jp)},
        [=](const Parts& p) {
          auto gs = sgn(i + j + jp) * s * (i - 2 * s) / ((-s - jp + i + 1) * (i + 1)) * C(2 * s, i) *
                    C(s + jp - i - 1, s) * C(s, j - jp);
          auto g = steps();
          g.push_back(axis("jp", 1, s));
          return Eqs{antidifference_pointwise("pointwise", gs, p[0], "jp", g),
                     {"definite", sum("jp", 1, s, gs), p[0].substitute("jp", s + 1) - p[0].substitute("jp", 1), steps(),
                      {}}};
        });

  b.add("q4/initial-values", CheckKind::closed_form_sum, "second- and third-term forms at i = 0", {},
        [=](const Parts&) {
          auto g = grid({axis("s", 1, 10), axis("j", s, 2 * s)});
          return Eqs{{"second term", b2h.substitute("i", 0), sgn(s + j) * C(2 * s, j) * C(j - 1, s), g, {}},
                     {"third term", b3v.substitute("i", 0), sgn(s + j + 1) * C(2 * s, j) * C(j - 1, s), g, {}}};
        });
}

// ------------------------------------------------------------ right-hand side
void rhs_checks(Builder& b) {
  b.add("rhs/p1-columns", CheckKind::antidifference, "P1 weight sums per column via the alternating-row antidifference",
        {sgn(j + 1) * C(s - 1, j - 1)}, [=](const Parts& p) {
          auto summand = sgn(j) * C(s, j);
          return Eqs{antidifference_pointwise("pointwise", summand, p[0], "j",
                                              grid({axis("s", 1, 9), axis("j", -1, s + 1)})),
                     closed_form_sum("lower", "j", 0, i, summand, sgn(i) * C(s - 1, i),
                                     grid({axis("s", 1, 9), axis("i", 0, s)})),
                     closed_form_sum("upper", "j", i - s, s, summand, sgn(s + i) * C(s - 1, 2 * s - i),
                                     grid({axis("s", 1, 9), axis("i", s + 1, 2 * s)}))};
        });

  b.add("rhs/stirling", CheckKind::closed_form_sum, "sum_i (-1)^{i+s} i^{s+1-t} C(s,i) for t = 0, 1 and t > 1", {},
        [=](const Parts&) {
          auto summand = sgn(i + s) * pow(i, s + 1 - t) * C(s, i);
          return Eqs{closed_form_sum("t = 0", "i", 0, s, summand.substitute("t", 0), s * fact(s + 1) / 2,
                                     grid({axis("s", 1, 10)})),
                     closed_form_sum("t = 1", "i", 0, s, summand.substitute("t", 1), fact(s), grid({axis("s", 1, 10)})),
                     closed_form_sum("t > 1", "i", 0, s, summand, 0, grid({axis("s", 1, 10), axis("t", 2, s + 1)}))};
        });

  auto rows = [] { return grid({axis("s", 1, 10), axis("i", 0, s - 1)}); };
  b.add("rhs/p2-second-term", CheckKind::closed_form_sum, "row sum of the second h-term", {}, [=](const Parts&) {
    return Eqs{closed_form_sum("row", "jp", i + 1, s, h2(s, i, jp), sgn(i + 1) * C(2 * s, i) * C(2 * s - i, s + 1), rows())};
  });

  const auto I1 = sum("t", 0, i, sgn(t) / (2 * s - t) * C(i, t) * C(2 * s - t, s - t));
  const auto I2 = sum("t", 0, i, sgn(t) / (2 * s - t) * C(i, t) * C(s - t + i, s - t));
  b.add("rhs/p2-third-term", CheckKind::closed_form_sum, "row sum of the third h-term as a double sum and split", {},
        [=](const Parts&) {
          auto y3 = sgn(i) * (2 * s - i) * C(2 * s, i) *
                    sum("t", 0, i, sum("jp", i + 1, s, sgn(t) / (2 * s - t) * C(i, t) * C(s - t - 1 + jp, jp)));
          auto closed = sgn(i) * (2 * s - i) / s * C(2 * s, i) * C(2 * s - i - 1, s) * (1 - Q(1, 2) / C(2 * s - 1, s));
          return Eqs{{"closed form", y3, closed, rows(), {}},
                     {"split", y3, sgn(i) * (2 * s - i) * C(2 * s, i) * (I1 - I2), rows(), {}}};
        });

  b.add("rhs/third-term-first-part", CheckKind::certificate_recurrence,
        "sum_t (-1)^t/(2s-t) C(i,t) C(2s-t,s-t) = C(2s-i-1,s)/s",
        {s - i - 1, i - 2 * s + 1, t * (2 * s - t) / (i - t + 1)}, [=](const Parts& p) {
          auto F = sgn(t) / (2 * s - t) * C(i, t) * C(2 * s - t, s - t);
          auto g = rows();
          g.push_back(axis("t", -1, i + 2));
          return Eqs{certificate_pointwise("pointwise", F, "i", {p[0], p[1]}, "t", p[2], g),
                     telescoped_sum("telescoped", F, "i", {p[0], p[1]}, "t", 0, s, 0,
                                    grid({axis("s", 1, 9), axis("i", 0, s - 2)})),
                     {"closed form", I1, C(2 * s - i - 1, s) / s, rows(), {}}};
        });

  b.add("rhs/third-term-second-part", CheckKind::certificate_recurrence,
        "sum_t (-1)^t/(2s-t) C(i,t) C(s-t+i,s-t) = C(2s-i-1,s)/(2s C(2s-1,s))",
        {-(i + 1) * (i - s + 1), (i + 1) * (i - 2 * s + 1), t * (2 * s - t) * (s - t + i + 1) / (i - t + 1)},
        [=](const Parts& p) {
          auto F = sgn(t) / (2 * s - t) * C(i, t) * C(s - t + i, s - t);
          auto g = rows();
          g.push_back(axis("t", -1, i + 2));
          return Eqs{certificate_pointwise("pointwise", F, "i", {p[0], p[1]}, "t", p[2], g),
                     telescoped_sum("telescoped", F, "i", {p[0], p[1]}, "t", 0, s, 0,
                                    grid({axis("s", 1, 9), axis("i", 0, s - 2)})),
                     {"closed form", I2, C(2 * s - i - 1, s) / (2 * s * C(2 * s - 1, s)), rows(), {}}};
        });

  b.add("rhs/p2-columns", CheckKind::closed_form_sum, "P2 weight sums per column", {}, [=](const Parts&) {
    auto factor = C(2 * s, s - 1) / s - 1;
    return Eqs{closed_form_sum("lower", "j", i + 1, s, hx(s, i, j), sgn(i) * C(s - 1, i) * factor, rows()),
               {"upper", sgn(s) * sum("j", 0, i - s - 1, hx(s, 2 * s - i, s - j)),
                sgn(s + i) * C(s - 1, 2 * s - i) * factor, grid({axis("s", 1, 9), axis("i", s + 1, 2 * s)}), {}}};
  });

  b.add("rhs/overall", CheckKind::closed_form_sum, "column sums weighted by (lambda (n-i) + eta)^s give lambda^s C(2s,s) s!",
        {}, [=](const Parts&) {
          const Expr lam = V("lambda"), eta = V("eta"), n = V("n");
          auto col = C(2 * s, s - 1) / s;
          auto c = pow(lam * (n - i) + eta, s);
          auto lhs = sum("i", 0, s, sgn(i) * C(s - 1, i) * col * c) +
                     sum("i", s + 1, 2 * s, sgn(s + i) * C(s - 1, 2 * s - i) * col * c);
          return Eqs{{"rhs", lhs, pow(lam, s) * C(2 * s, s) * fact(s),
                      grid({axis("s", 1, 6), axis_values("lambda", {Rat(2), Rat(1), frac(-3, 2)}),
                            axis_values("eta", {Rat(-1), Rat(5), frac(7, 3)}), axis_values("n", {Rat(13), Rat(40)})}),
                      {}}};
        });
}

// ---------------------------------------------------------------- appendix A
void appendix_a_checks(Builder& b) {
  const auto FA = sgn(i) * (2 * s - i) * C(2 * s, i) * C(i, t) * pow(z, i);
  const auto SA = sum("i", 0, 2 * s, FA);
  b.add("appendix-a/s-t-recurrence", CheckKind::certificate_recurrence,
        "first-order recurrence in t of S(t) = sum_i (-1)^i (2s-i) C(2s,i) C(i,t) z^i",
        {-(2 * s - t - 1) * z, (z - 1) * (t + 1), i - t}, [=](const Parts& p) {
          return Eqs{certificate_pointwise("pointwise", FA, "t", {p[0], p[1]}, "i", p[2],
                                           grid({axis("s", 1, 5), axis("t", 0, 2 * s - 1), axis("i", -1, 2 * s),
                                                 axis_values("z", zs())})),
                     telescoped_sum("telescoped", FA, "t", {p[0], p[1]}, "i", 0, 2 * s, 0,
                                    grid({axis("s", 1, 6), axis("t", 0, 2 * s - 1), axis_values("z", zs())}))};
        });
  b.add("appendix-a/s-t-closed-form", CheckKind::closed_form_sum, "S(t) = -2s z^t (z-1)^{2s-t-1} C(2s-1,t)", {},
        [=](const Parts&) {
          auto g = grid({axis("s", 1, 6), axis("t", 0, 2 * s), axis_values("z", zs())});
          return Eqs{{"closed", SA, -2 * s * pow(z, t) * pow(z - 1, 2 * s - t - 1) * C(2 * s - 1, t), g, {}},
                     {"t = 0", SA.substitute("t", 0), 2 * s * pow(1 - z, 2 * s - 1),
                      grid({axis("s", 1, 8), axis_values("z", zs())}), {}}};
        });

  const auto FS = C(2 * s, t) * pow(z, t) * pow(1 - z, 2 * s - t - 1) / pow(1 - x, s - t);
  const auto pairs = [] {
    return grid({axis_values("x", {frac(1, 3), frac(-2, 5), frac(3, 4), frac(2, 9)}),
                 axis_values("z", {frac(1, 5), frac(3, 7), frac(-1, 2), frac(5, 3)})});
  };
  b.add("appendix-a/s-s-recurrence", CheckKind::certificate_recurrence,
        "first-order recurrence in s of the double generating function's t-sum",
        {pow(x * z - 1, 2), x - 1,
         t * (z - 1) * (2 * x * z + 2 * z * s - 3 + 2 * z * s * x + z - 4 * s - z * x * t + t) /
             ((2 * s + 2 - t) * (2 * s - t + 1))},
        [=](const Parts& p) {
          auto g = grid({axis("s", 0, 5), axis("t", -1, 2 * s + 2)});
          auto gt = grid({axis("s", 0, 6)});
          for (auto& a : pairs()) {
            g.push_back(a);
            gt.push_back(a);
          }
          return Eqs{certificate_pointwise("pointwise", FS, "s", {p[0], p[1]}, "t", p[2], g),
                     telescoped_sum("telescoped", FS, "s", {p[0], p[1]}, "t", 0, 2 * s + 2, 0, gt)};
        });
  b.add("appendix-a/s-s-closed-form", CheckKind::closed_form_sum,
        "sum_t C(2s,t) z^t (1-z)^{2s-t-1}/(1-x)^{s-t} = (1-xz)^{2s}/((1-x)^s (1-z))", {}, [=](const Parts&) {
          auto g = grid({axis("s", 0, 8)});
          for (auto& a : pairs()) g.push_back(a);
          return Eqs{closed_form_sum("closed", "t", 0, 2 * s, FS, pow(1 - x * z, 2 * s) / (pow(1 - x, s) * (1 - z)), g)};
        });

  b.add("appendix-a/column-sum", CheckKind::closed_form_sum, "sum_{i<j} h_{s,i,j} = (-1)^{j+1} (s-1) C(s-1,j-1)", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("column", "i", 0, j - 1, hx(s, i, j), sgn(j + 1) * (s - 1) * C(s - 1, j - 1),
                                     grid({axis("s", 1, 10), axis("j", 1, s)}))};
        });
  b.add("appendix-a/first-entries", CheckKind::closed_form_sum, "closed forms of the first entries of the sequence", {},
        [=](const Parts&) {
          return Eqs{{"h(s,0,1)", hx(s, 0, 1), s - 1, grid({axis("s", 1, 60)}), {}},
                     {"h(s,0,2)", hx(s, 0, 2), (s + 1) * (s - 2) / 2, grid({axis("s", 2, 60)}), {}},
                     {"h(s,0,3)", hx(s, 0, 3), (s + 1) * (s + 2) * (s - 3) / 6, grid({axis("s", 3, 60)}), {}},
                     {"h(s,1,2)", hx(s, 1, 2), -s * (3 * s - 5) / 2, grid({axis("s", 2, 60)}), {}},
                     {"h(s,1,3)", hx(s, 1, 3), -s * (s + 1) * (5 * s - 14) / 6, grid({axis("s", 3, 60)}), {}},
                     {"h(s,2,3)", hx(s, 2, 3), s * (7 * s * s - 21 * s + 8) / 6, grid({axis("s", 3, 60)}), {}}};
        });
}

// ---------------------------------------------------------------- appendix B
void appendix_b_checks(Builder& b) {
  const Expr n = V("n");
  struct Sample {
    const char* tag;
    Expr gi, gj;
  };
  const std::vector<Sample> samples = {{"binomial", C(i + j, 2), i * j},
                                       {"signed", sgn(i) * C(j + 3, i) + n * i, i * i * j - j + n * C(i, j)}};
  auto delta = [](const Sample& sm) {
    return (sm.gi.substitute("i", i + 1) - sm.gi) + (sm.gj.substitute("j", j + 1) - sm.gj);
  };
  const Expr ui = V("ui"), vi = V("vi"), uj = V("uj"), vj = V("vj");

  b.add("appendix-b/independent-bounds", CheckKind::boundary_lemma,
        "double sum over a rectangle leaves two single boundary sums", {}, [=](const Parts&) {
          Eqs out;
          for (const auto& sm : samples) {
            auto lhs = sum("i", ui, vi, sum("j", uj, vj, delta(sm)));
            auto rhs = sum("i", ui, vi, sm.gj.substitute("j", vj + 1) - sm.gj.substitute("j", uj)) +
                       sum("j", uj, vj, sm.gi.substitute("i", vi + 1) - sm.gi.substitute("i", ui));
            out.push_back({sm.tag, lhs, rhs,
                           grid({axis_values("n", {Rat(0), Rat(2)}), axis("ui", 0, 2), axis("vi", ui, ui + 4),
                                 axis("uj", -1, 1), axis("vj", uj, uj + 3)}),
                           {}});
          }
          return out;
        });

  b.add("appendix-b/triangular-bounds", CheckKind::boundary_lemma,
        "double sum over j <= i leaves two single boundary sums", {}, [=](const Parts&) {
          Eqs out;
          for (const auto& sm : samples) {
            auto lhs = sum("i", ui, vi, sum("j", uj, i, delta(sm)));
            // For fixed j the i-range starts at max(u_i, j).
            auto lo = ui + (j - ui) * nonneg(j - ui);
            auto rhs = sum("i", ui, vi, sm.gj.substitute("j", i + 1) - sm.gj.substitute("j", uj)) +
                       sum("j", uj, vi, sm.gi.substitute("i", vi + 1) - sm.gi.substitute("i", lo));
            out.push_back({sm.tag, lhs, rhs,
                           grid({axis_values("n", {Rat(0), Rat(2)}), axis("ui", 0, 2), axis("uj", 0, ui),
                                 axis("vi", ui, ui + 5)}),
                           {}});
          }
          return out;
        });

  b.add("appendix-b/anti-triangular-bounds", CheckKind::boundary_lemma,
        "double sum over j <= v_i - i leaves two single boundary sums", {}, [=](const Parts&) {
          Eqs out;
          for (const auto& sm : samples) {
            auto lhs = sum("i", ui, vi, sum("j", uj, vi - i, delta(sm)));
            auto rhs = sum("i", ui, vi, sm.gj.substitute("j", vi + 1 - i) - sm.gj.substitute("j", uj)) +
                       sum("j", uj, vi - ui, sm.gi.substitute("i", vi + 1 - j) - sm.gi.substitute("i", ui));
            out.push_back({sm.tag, lhs, rhs,
                           grid({axis_values("n", {Rat(0), Rat(2)}), axis("ui", 0, 2), axis("uj", 0, 1),
                                 axis("vi", ui, ui + 6)}),
                           {}});
          }
          return out;
        });
}

// ---------------------------------------------------------------- appendix C
void appendix_c_checks(Builder& b) {
  const Expr a = V("a"), bb = V("b"), c = V("c"), n = V("n"), m = V("m"), k = V("k");
  b.add("appendix-c/chu-vandermonde", CheckKind::closed_form_sum, "sum_j C(a,j) C(b,c-j) = C(a+b,c)", {},
        [=](const Parts&) {
          return Eqs{closed_form_sum("convolution", "j", 0, c, C(a, j) * C(bb, c - j), C(a + bb, c),
                                     grid({axis("a", -3, 6), axis("b", 0, 5), axis("c", 0, 7)}))};
        });
  b.add("appendix-c/alternating-convolution", CheckKind::closed_form_sum,
        "sum_{j'} (-1)^{j'} C(s-t+j',j') C(s,j-j') = (-1)^j C(j-t,j)", {}, [=](const Parts&) {
          auto g = grid({axis("s", 1, 7), axis("t", 0, s), axis("j", 0, s)});
          auto lhs_sum = sum("jp", 0, j, sgn(jp) * C(s - t + jp, jp) * C(s, j - jp));
          auto rearranged = fact(s) * fact(j - t) / (fact(s - t) * fact(j)) *
                            sum("jp", 0, j, sgn(jp) * C(j, jp) * C(s - t + jp, j - t));
          return Eqs{{"identity", lhs_sum, sgn(j) * C(j - t, j), g, {}},
                     {"rearranged", lhs_sum, rearranged, grid({axis("s", 1, 7), axis("t", 0, s), axis("j", t, s)}), {}}};
        });
  b.add("appendix-c/signed-upper-sum", CheckKind::closed_form_sum,
        "sum_k (-1)^k C(n,k) C(a+k,m) = (-1)^n C(a,m-n)", {}, [=](const Parts&) {
          return Eqs{closed_form_sum("sum", "k", 0, n, sgn(k) * C(n, k) * C(a + k, m), sgn(n) * C(a, m - n),
                                     grid({axis("n", 0, 5), axis("a", -2, 5), axis("m", 0, 6)}))};
        });
}

// ---------------------------------------------------------------- appendix D
void appendix_d_checks(Builder& b) {
  const Expr bb = V("b");
  b.add("appendix-d/shifted-binomial", CheckKind::antidifference, "antidifference of C(s+b+j',j') is C(s+b+j',j'-1)",
        {C(s + bb + jp, jp - 1)}, [=](const Parts& p) {
          return Eqs{antidifference_pointwise("pointwise", C(s + bb + jp, jp), p[0], "jp",
                                              grid({axis("s", 1, 6), axis("b", -3, 2), axis("jp", -1, 5)})),
                     {"definite", sum("jp", 0, i, C(s + bb + jp, jp)), C(s + bb + i + 1, i),
                      grid({axis("s", 1, 5), axis("b", -3, 2), axis("i", 0, 5)}), {}}};
        });
  b.add("appendix-d/alternating-row", CheckKind::antidifference,
        "antidifference of (-1)^{j'} C(s,j') is (-1)^{j'+1} C(s-1,j'-1)", {sgn(jp + 1) * C(s - 1, jp - 1)},
        [=](const Parts& p) {
          return Eqs{antidifference_pointwise("pointwise", sgn(jp) * C(s, jp), p[0], "jp",
                                              grid({axis("s", 1, 9), axis("jp", -1, s + 1)})),
                     {"definite", sum("jp", 0, i, sgn(jp) * C(s, jp)), sgn(i) * C(s - 1, i),
                      grid({axis("s", 1, 9), axis("i", 0, s)}), {}}};
        });
}

std::vector<IdentityCheck> build_registry() {
  Builder b;
  evaluator_checks(b);
  gf_checks(b);
  q1_checks(b);
  q3_checks(b);
  q4_checks(b);
  rhs_checks(b);
  appendix_a_checks(b);
  appendix_b_checks(b);
  appendix_c_checks(b);
  appendix_d_checks(b);
  return std::move(b.out);
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

}  // namespace polycount
