// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "zetalab/core.hpp"
#include "zetalab/functional_eq.hpp"

namespace zetalab {

// Completed zeta  xi(s) = pi^(-s/2) Gamma(s/2 + 1) (s - 1) zeta(s):
// entire (the s = 1 pole is cancelled analytically, not numerically: near
// s = 1 the (s-1) factor is folded into the Euler-Maclaurin form), and
// xi(s) = xi(1-s).
EvalResult xi(Cplx s, const EvalConfig& cfg = {});

// Riemann-Siegel rotation theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi
// for t >= 0; theta(0) == 0 exactly.
double hardy_rotation(double t);

// Hardy Z(t) = e^(i theta(t)) zeta(1/2 + it); real for real t up to
// rounding.  Returned as the full complex value so callers can check the
// imaginary residue.
Cplx hardy_z(double t, const EvalConfig& cfg = {});

// Winding-number zero count of xi over the closed rectangle boundary:
// adaptive phase walk (steps split until each |delta arg| < pi/2).
//   ContourTooClose  - normalized |xi| on the contour below 1e-12 (a zero
//                      sits on or hugs the boundary); the normalization
//                      divides out the gamma/pole envelope so the test is
//                      scale-free in t.
//   RoundingDefect   - accumulated winding farther than 0.25 from an
//                      integer.
int count_zeros(const StripRect& rect, const EvalConfig& cfg = {});

struct ZeroRecord {
  double t;
  double sigma;
  double abs_zeta;    // |zeta(sigma + it)| at the refined point
  int refine_iters;
};

// Scan Z(t) sign changes on [t_min, t_max] with the given step, bisect each
// bracket to |Z| < 1e-10, then refine in the full (sigma, t) plane by
// damped Newton on xi from the deliberately off-line start
// (1/2 + 0.01, t).  The scan count is cross-checked against
// count_zeros((0.01, 0.99) x (t_min, t_max)); StepTooCoarse if the winding
// count exceeds the sign-change count.  Grid evaluation is split over
// n_workers with fixed index ownership (bit-reproducible).
std::vector<ZeroRecord> find_zeros(double t_min, double t_max, double step,
                                   int n_workers = 1, const EvalConfig& cfg = {});

}  // namespace zetalab
