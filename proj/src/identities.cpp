// SPDX-License-Identifier: Apache-2.0
#include "polycount/identities.hpp"

#include <stdexcept>

#include "polycount/errors.hpp"

namespace polycount {

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::closed_form_sum:
      return "closed-form-sum";
    case CheckKind::certificate_recurrence:
      return "certificate-recurrence";
    case CheckKind::antidifference:
      return "antidifference";
    case CheckKind::double_sum_recurrence:
      return "double-sum-recurrence";
    case CheckKind::boundary_lemma:
      return "boundary-lemma";
  }
  return "?";
}

GridAxis axis(const std::string& var, const Expr& lo, const Expr& hi) { return GridAxis{var, lo, hi, {}}; }

GridAxis axis_values(const std::string& var, std::vector<Rat> values) {
  return GridAxis{var, 0, -1, std::move(values)};
}

namespace {

struct Walker {
  const Equation& eq;
  bool stop;
  CheckOutcome& out;
  Env env;
  std::vector<int> slots;

  bool done() const { return stop && out.failures > 0; }

  std::string describe() const {
    std::string s;
    for (std::size_t a = 0; a < slots.size(); ++a) {
      if (a) s += ", ";
      s += eq.grid[a].var + "=" + to_string(env.get(slots[a]));
    }
    return s;
  }

  void point() {
    if (eq.when && !eq.when(env)) return;
    try {
      Rat l = eval(eq.lhs, env);
      Rat r = eval(eq.rhs, env);
      ++out.points;
      if (l != r) {
        ++out.failures;
        if (out.first_failure.empty())
          out.first_failure = eq.label + " at " + describe() + ": lhs " + to_string(l) + " rhs " + to_string(r);
      }
    } catch (const PoleError&) {
      ++out.skipped;
    } catch (const std::exception& e) {
      ++out.points;
      ++out.failures;
      if (out.first_failure.empty()) out.first_failure = eq.label + " at " + describe() + ": " + e.what();
    }
  }

  void walk(std::size_t a) {
    if (done()) return;
    if (a == eq.grid.size()) {
      point();
      return;
    }
    const GridAxis& ax = eq.grid[a];
    if (!ax.values.empty()) {
      for (const Rat& v : ax.values) {
        env.set(slots[a], v);
        walk(a + 1);
        if (done()) return;
      }
      return;
    }
    Int lo = to_integer(eval(ax.lo, env)), hi = to_integer(eval(ax.hi, env));
    for (Int v = lo; v <= hi; ++v) {
      env.set(slots[a], Rat(v));
      walk(a + 1);
      if (done()) return;
    }
  }
};

Expr shift(const Expr& e, const std::string& var, long by) { return e.substitute(var, V(var) + Expr(by)); }

}  // namespace

CheckOutcome run_check(const IdentityCheck& check, bool stop_at_first_failure) {
  CheckOutcome out;
  out.name = check.name;
  out.kind = check.kind;
  for (const auto& eq : check.equations()) {
    Walker w{eq, stop_at_first_failure, out, {}, {}};
    for (const auto& ax : eq.grid) w.slots.push_back(var_slot(ax.var));
    w.walk(0);
    if (w.done()) break;
  }
  return out;
}

Equation closed_form_sum(const std::string& label, const std::string& index, const Expr& lo, const Expr& hi,
                         const Expr& summand, const Expr& closed, std::vector<GridAxis> grid) {
  return Equation{label, sum(index, lo, hi, summand), closed, std::move(grid), {}};
}

Equation certificate_pointwise(const std::string& label, const Expr& F, const std::string& n,
                               const std::vector<Expr>& coeffs, const std::string& k, const Expr& cert,
                               std::vector<GridAxis> grid) {
  Expr lhs = 0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) lhs = lhs + coeffs[r] * shift(F, n, static_cast<long>(r));
  Expr G = cert * F;
  return Equation{label, lhs, shift(G, k, 1) - G, std::move(grid), {}};
}

Equation telescoped_sum(const std::string& label, const Expr& F, const std::string& n,
                        const std::vector<Expr>& coeffs, const std::string& k, const Expr& lo, const Expr& hi,
                        const Expr& inhomogeneous, std::vector<GridAxis> grid) {
  Expr S = sum(k, lo, hi, F);
  Expr lhs = 0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) lhs = lhs + coeffs[r] * shift(S, n, static_cast<long>(r));
  return Equation{label, lhs, inhomogeneous, std::move(grid), {}};
}

Equation antidifference_pointwise(const std::string& label, const Expr& t, const Expr& z, const std::string& k,
                                  std::vector<GridAxis> grid) {
  return Equation{label, shift(z, k, 1) - z, t, std::move(grid), {}};
}

Equation double_certificate_pointwise(const std::string& label, const Expr& F, const std::string& n,
                                      const std::vector<Expr>& coeffs, const std::string& a, const Expr& Ra,
                                      const std::string& b, const Expr& Rb, std::vector<GridAxis> grid) {
  Expr lhs = 0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) lhs = lhs + coeffs[r] * shift(F, n, static_cast<long>(r));
  Expr Ga = Ra * F, Gb = Rb * F;
  return Equation{label, lhs, (shift(Ga, a, 1) - Ga) + (shift(Gb, b, 1) - Gb), std::move(grid), {}};
}

bool glob_match(const std::string& pattern, const std::string& name) {
  std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

Report run_registry(const std::string& filter) {
  Report rep;
  rep.title = "identities";
  for (const auto& check : registry()) {
    if (!glob_match(filter, check.name)) continue;
    CheckOutcome o = run_check(check);
    CheckRecord rec;
    rec.name = check.name;
    rec.inputs = {{"kind", to_string(check.kind)},
                  {"points", std::to_string(o.points)},
                  {"skipped", std::to_string(o.skipped)}};
    rec.expected = "0 failures";
    rec.actual = std::to_string(o.failures) + " failures";
    rec.status = o.passed() ? Status::pass : Status::fail;
    rec.detail = o.points == 0 ? "no evaluable grid point" : o.first_failure;
    rep.skipped += o.skipped;
    rep.add(std::move(rec));
  }
  return rep;
}

MutationOutcome mutation_test(const IdentityCheck& check) {
  MutationOutcome out;
  out.name = check.name;
  for (std::size_t p = 0; p < check.parts.size(); ++p) {
    const int lits = check.parts[p].literal_count();
    for (int l = 0; l < lits; ++l) {
      IdentityCheck mutated = check;
      mutated.parts[p] = check.parts[p].perturb_literal(l, 1);
      ++out.perturbations;
      if (!run_check(mutated, true).passed())
        ++out.detected;
      else
        out.survivors.push_back("part " + std::to_string(p) + " literal " + std::to_string(l) + ": " +
                                mutated.parts[p].to_string());
    }
  }
  return out;
}

}  // namespace polycount
