// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "zetalab/core.hpp"

namespace zetalab {

struct SigmaSolveReport {
  std::string equation;  // "zeta-gap" or "g-gap"
  double root;
  double residual;       // h(root)
  double bracket_lo;     // final bracket, root strictly inside
  double bracket_hi;
  int iterations;
};

// Root of h(sigma) = zeta(sigma) - zeta(1-sigma) on (0, 1) by bisection.
// Brackets are clamped to [1e-6, 1 - 1e-6]; BracketError if h does not
// change sign across the clamped bracket; NonConvergence past 200
// iterations.  h is strictly decreasing, so the root is unique (= 1/2).
SigmaSolveReport solve_zeta_gap(double lo, double hi, double tol = 1e-12,
                                const EvalConfig& cfg = {});

// Same for k(sigma) = g(sigma) - g(1-sigma), g = pi^(-s/2) Gamma(s/2).
SigmaSolveReport solve_g_gap(double lo, double hi, double tol = 1e-12,
                             const EvalConfig& cfg = {});

enum class MonotoneTarget { Zeta, GFactor, PiPow, GammaHalf };

struct DerivativeCheck {
  MonotoneTarget target;
  double sigma;
  double analytic;     // closed-form / series derivative
  double finite_diff;  // central difference of the value function
  double rel_err;      // |analytic - finite_diff| / max(|analytic|, tiny)
};

struct CertifyReport {
  std::vector<DerivativeCheck> checks;
  bool all_negative;   // every analytic derivative < 0
  double max_rel_err;
};

// Compare the analytic sigma-derivative of the target against a central
// finite difference on the uniform interior grid sigma_i = i/(n+1),
// i = 1..n.  The derivative of each target is negative on the whole
// interval; all_negative reports whether the computed values agree.
CertifyReport certify_monotone(MonotoneTarget target, int n_samples,
                               double fd_step = 1e-6, const EvalConfig& cfg = {});

const char* to_string(MonotoneTarget target);

}  // namespace zetalab
