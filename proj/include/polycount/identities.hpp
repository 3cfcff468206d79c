// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polycount/expr.hpp"
#include "polycount/report.hpp"

namespace polycount {

enum class CheckKind { closed_form_sum, certificate_recurrence, antidifference, double_sum_recurrence, boundary_lemma };

const char* to_string(CheckKind k);

// One grid axis. Either an explicit list of values or the integer range
// [lo, hi]; the bounds may refer to axes declared earlier.
struct GridAxis {
  std::string var;
  Expr lo = 0;
  Expr hi = -1;
  std::vector<Rat> values;
};

GridAxis axis(const std::string& var, const Expr& lo, const Expr& hi);
GridAxis axis_values(const std::string& var, std::vector<Rat> values);

// lhs == rhs at every grid point where `when` holds.
struct Equation {
  std::string label;
  Expr lhs;
  Expr rhs;
  std::vector<GridAxis> grid;
  std::function<bool(const Env&)> when;
};

struct IdentityCheck {
  std::string name;
  CheckKind kind = CheckKind::closed_form_sum;
  std::string description;
  // Certificates, recurrence coefficients and antidifferences. These are the
  // trees perturbed by the mutation property.
  std::vector<Expr> parts;
  std::function<std::vector<Equation>(const std::vector<Expr>& parts)> build;

  std::vector<Equation> equations() const { return build(parts); }
};

struct CheckOutcome {
  std::string name;
  CheckKind kind = CheckKind::closed_form_sum;
  std::size_t points = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && points > 0; }
};

CheckOutcome run_check(const IdentityCheck& check, bool stop_at_first_failure = false);

// --- equation builders -----------------------------------------------------

// sum_{index=lo}^{hi} summand == closed
Equation closed_form_sum(const std::string& label, const std::string& index, const Expr& lo, const Expr& hi,
                         const Expr& summand, const Expr& closed, std::vector<GridAxis> grid);

// sum_r coeffs[r] F(n + r, k) == G(n, k+1) - G(n, k) with G = cert * F.
Equation certificate_pointwise(const std::string& label, const Expr& F, const std::string& n,
                               const std::vector<Expr>& coeffs, const std::string& k, const Expr& cert,
                               std::vector<GridAxis> grid);

// sum_r coeffs[r] * sum_{k=lo}^{hi} F(n + r, k) == inhomogeneous
Equation telescoped_sum(const std::string& label, const Expr& F, const std::string& n,
                        const std::vector<Expr>& coeffs, const std::string& k, const Expr& lo, const Expr& hi,
                        const Expr& inhomogeneous, std::vector<GridAxis> grid);

// z(k+1) - z(k) == t(k)
Equation antidifference_pointwise(const std::string& label, const Expr& t, const Expr& z, const std::string& k,
                                  std::vector<GridAxis> grid);

// sum_r coeffs[r] F(n + r) == Delta_a(Ra F) + Delta_b(Rb F)
Equation double_certificate_pointwise(const std::string& label, const Expr& F, const std::string& n,
                                      const std::vector<Expr>& coeffs, const std::string& a, const Expr& Ra,
                                      const std::string& b, const Expr& Rb, std::vector<GridAxis> grid);

// --- registry --------------------------------------------------------------

const std::vector<IdentityCheck>& registry();

// Shell-style match supporting '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& name);

Report run_registry(const std::string& filter = "*");

struct MutationOutcome {
  std::string name;
  int perturbations = 0;
  int detected = 0;
  std::vector<std::string> survivors;

  bool ok() const { return detected == perturbations; }
};

// Shifts each integer literal of each part by +1, one at a time, and expects
// the check to fail every time.
MutationOutcome mutation_test(const IdentityCheck& check);

}  // namespace polycount
