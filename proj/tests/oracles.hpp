// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reference evaluators for the tests, each computed by a method different
// from the library's own (direct summation with integral enclosures,
// quadrature of the defining integral, repeated averaging of partial sums,
// Richardson-extrapolated differences).  High-precision literals embedded
// in the test files were produced offline with a multiprecision package
// and are quoted to 17+ significant digits.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "zetalab/core.hpp"

namespace oracle {

using zetalab::Cplx;

// Enclosure of zeta(sigma) for real sigma > 1 from the Dirichlet series:
// the tail past N lies strictly between the two integral bounds, so the
// true value is inside [lo, hi] up to summation roundoff (compensated).
inline std::pair<double, double> zeta_enclosure(double sigma, int n_cut = 200000) {
  double sum = 0.0, comp = 0.0;
  for (int n = n_cut; n >= 1; --n) {  // ascending magnitude
    const double y = std::pow(n, -sigma) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double lo = sum + std::pow(n_cut + 1.0, 1.0 - sigma) / (sigma - 1.0);
  const double hi = sum + std::pow(n_cut, 1.0 - sigma) / (sigma - 1.0);
  return {lo, hi};
}

// Same enclosure for the shifted series sum (n+a)^-sigma, n >= 0.
inline std::pair<double, double> hurwitz_enclosure(double sigma, double a,
                                                   int n_cut = 200000) {
  double sum = 0.0, comp = 0.0;
  for (int n = n_cut - 1; n >= 0; --n) {
    const double y = std::pow(n + a, -sigma) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double lo = sum + std::pow(n_cut + a, 1.0 - sigma) / (sigma - 1.0);
  const double hi = sum + std::pow(n_cut - 1.0 + a, 1.0 - sigma) / (sigma - 1.0);
  return {lo, hi};
}

// Gamma(x) for x in (0, 4] by trapezoid quadrature of the defining
// integral after u = e^v:  Gamma(x) = integral of exp(x v - e^v) dv over
// the whole line.  The integrand decays double-exponentially on the right
// and like e^(x v) on the left, so a fixed window with small h suffices.
inline double gamma_quad(double x, double h = 0.025) {
  const double v_lo = -260.0, v_hi = 8.0;
  const int n = static_cast<int>((v_hi - v_lo) / h);
  long double acc = 0.0L;
  for (int i = 0; i <= n; ++i) {
    const double v = v_lo + i * h;
    acc += std::exp(x * v - std::exp(v));
  }
  return static_cast<double>(acc * h);
}

// Alternating series sum (-1)^(n-1) term(n) by repeated averaging of
// partial sums (a different acceleration than the library's binomial
// tail transform).  Intended for slowly varying real-axis terms.
inline double alternating_avg(const std::function<double(int)>& term, int n0 = 64,
                              int rounds = 48) {
  std::vector<double> ps;
  double acc = 0.0;
  for (int n = 1; n <= n0 + rounds; ++n) {
    acc += (n & 1) ? term(n) : -term(n);
    if (n >= n0) ps.push_back(acc);
  }
  for (int r = 0; r < rounds; ++r)
    for (int j = 0; j + r + 1 < static_cast<int>(ps.size()); ++j)
      ps[j] = 0.5 * (ps[j] + ps[j + 1]);
  return ps[0];
}

// Central difference with one Richardson step: error O(h^4).
inline double richardson_fd(const std::function<double(double)>& f, double x,
                            double h = 1e-4) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

// Stirling-type asymptotic for the rotation phase, valid to ~1e-9 for
// t >= 16; independent of the log-gamma implementation.
inline double theta_asym(double t) {
  const double pi = zetalab::MathConstants::pi;
  return 0.5 * t * std::log(t / (2.0 * pi)) - 0.5 * t - pi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t * t);
}

}  // namespace oracle
