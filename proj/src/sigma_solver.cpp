// SPDX-License-Identifier: Apache-2.0
#include "zetalab/sigma_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zetalab/special.hpp"

namespace zetalab {

namespace {

constexpr double kClampLo = 1e-6;
constexpr double kClampHi = 1.0 - 1e-6;

double zeta_line(double sigma, const EvalConfig& cfg) {
  return zeta(Cplx(sigma, 0.0), cfg).value.real();
}

double g_line(double sigma) { return g_factor(Cplx(sigma, 0.0)).value.real(); }

SigmaSolveReport bisect(const char* equation, const std::function<double(double)>& fn,
                        double lo, double hi, double tol) {
  require_finite(lo, "sigma solve");
  require_finite(hi, "sigma solve");
  require_finite(tol, "sigma solve");
  if (!(tol > 0.0)) throw DomainError("sigma solve: tol must be positive");
  if (!(lo < hi)) throw BracketError("sigma solve: empty bracket");
  lo = std::clamp(lo, kClampLo, kClampHi);
  hi = std::clamp(hi, kClampLo, kClampHi);
  if (!(lo < hi)) throw BracketError("sigma solve: bracket collapsed by clamping to the strip");

  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return {equation, lo, 0.0, lo, hi, 0};
  if (fhi == 0.0) return {equation, hi, 0.0, lo, hi, 0};
  if (flo * fhi > 0.0)
    throw BracketError("sigma solve: function does not change sign across the bracket");

  int iters = 0;
  while (hi - lo > tol) {
    if (++iters > 200) throw NonConvergence("sigma solve: more than 200 bisection steps");
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) continue;  // float resolution exhausted; spins to the cap
    const double fm = fn(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  const double root = 0.5 * (lo + hi);
  return {equation, root, fn(root), lo, hi, iters};
}

}  // namespace

SigmaSolveReport solve_zeta_gap(double lo, double hi, double tol, const EvalConfig& cfg) {
  return bisect("zeta-gap",
                [&cfg](double s) { return zeta_line(s, cfg) - zeta_line(1.0 - s, cfg); }, lo,
                hi, tol);
}

SigmaSolveReport solve_g_gap(double lo, double hi, double tol, const EvalConfig& cfg) {
  (void)cfg;
  return bisect("g-gap", [](double s) { return g_line(s) - g_line(1.0 - s); }, lo, hi, tol);
}

const char* to_string(MonotoneTarget target) {
  switch (target) {
    case MonotoneTarget::Zeta: return "zeta";
    case MonotoneTarget::GFactor: return "g-factor";
    case MonotoneTarget::PiPow: return "pi-pow";
    case MonotoneTarget::GammaHalf: return "gamma-half";
  }
  return "?";
}

CertifyReport certify_monotone(MonotoneTarget target, int n_samples, double fd_step,
                               const EvalConfig& cfg) {
  if (n_samples < 2) throw DomainError("certify_monotone: need at least 2 samples");
  require_finite(fd_step, "certify_monotone");
  if (!(fd_step > 0.0 && fd_step < 1e-2))
    throw DomainError("certify_monotone: fd_step out of range (0, 1e-2)");

  std::function<double(double)> value;
  std::function<double(double)> analytic;
  switch (target) {
    case MonotoneTarget::Zeta:
      value = [&cfg](double s) { return zeta_line(s, cfg); };
      analytic = [&cfg](double s) { return zeta_deriv_sigma(s, cfg).value.real(); };
      break;
    case MonotoneTarget::GFactor:
      value = [](double s) { return g_line(s); };
      analytic = [](double s) { return g_deriv_sigma(s).value.real(); };
      break;
    case MonotoneTarget::PiPow:
      value = [](double s) { return std::exp(-0.5 * s * MathConstants::ln_pi); };
      analytic = [](double s) { return pi_pow_deriv_sigma(s); };
      break;
    case MonotoneTarget::GammaHalf:
      value = [](double s) { return gamma(Cplx(0.5 * s, 0.0)).value.real(); };
      analytic = [](double s) { return gamma_deriv_sigma(s).value.real(); };
      break;
  }

  CertifyReport report;
  report.checks.reserve(static_cast<size_t>(n_samples));
  report.all_negative = true;
  report.max_rel_err = 0.0;
  for (int i = 1; i <= n_samples; ++i) {
    const double sigma = static_cast<double>(i) / (n_samples + 1);
    const double an = analytic(sigma);
    const double fd = (value(sigma + fd_step) - value(sigma - fd_step)) / (2.0 * fd_step);
    const double rel = std::abs(an - fd) / std::max(std::abs(an), 1e-300);
    report.checks.push_back({target, sigma, an, fd, rel});
    if (!(an < 0.0)) report.all_negative = false;
    report.max_rel_err = std::max(report.max_rel_err, rel);
  }
  return report;
}

}  // namespace zetalab
