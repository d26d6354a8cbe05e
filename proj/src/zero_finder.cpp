// SPDX-License-Identifier: Apache-2.0
#include "zetalab/zero_finder.hpp"

#include <cmath>
#include <vector>

#include "contour.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

namespace {
constexpr double kPi = MathConstants::pi;
constexpr double kLnPi = MathConstants::ln_pi;
}  // namespace

namespace internal {

namespace {

struct Node {
  Cplx s;
  Cplx v;
};

Node eval_node(const ContourFn& f, Cplx s) {
  const ScaledVal sv = f(s);
  const double norm = std::abs(sv.value) / std::max(sv.scale, 1e-300);
  if (norm < 1e-12)
    throw ContourTooClose("contour passes too close to a zero (normalized modulus < 1e-12)");
  return {s, sv.value};
}

double walk(const ContourFn& f, const Node& a, const Node& b, int depth) {
  const double dphi = std::arg(b.v / a.v);
  if (std::abs(dphi) < 0.5 * kPi) return dphi;
  if (depth >= 48)
    throw ContourTooClose("phase step unresolvable after 48 splits; zero on or near the contour");
  const Node m = eval_node(f, 0.5 * (a.s + b.s));
  return walk(f, a, m, depth + 1) + walk(f, m, b, depth + 1);
}

}  // namespace

int winding_count(const ContourFn& f, const StripRect& rect) {
  rect.validate();
  const Cplx corner[4] = {{rect.sigma_min, rect.t_min},
                          {rect.sigma_max, rect.t_min},
                          {rect.sigma_max, rect.t_max},
                          {rect.sigma_min, rect.t_max}};
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const Cplx s0 = corner[e];
    const Cplx s1 = corner[(e + 1) % 4];
    const int nseg = std::max(8, static_cast<int>(std::ceil(std::abs(s1 - s0) / 0.5)));
    Node prev = eval_node(f, s0);
    for (int k = 1; k <= nseg; ++k) {
      const Node cur = eval_node(f, s0 + (s1 - s0) * (static_cast<double>(k) / nseg));
      total += walk(f, prev, cur, 0);
      prev = cur;
    }
  }
  const double wind = total / (2.0 * kPi);
  const double nearest = std::round(wind);
  if (std::abs(wind - nearest) >= 0.25)
    throw RoundingDefect("winding sum not within 0.25 of an integer");
  if (nearest < 0.0)
    throw RoundingDefect("negative winding count for an analytic integrand");
  return static_cast<int>(nearest);
}

RefineOut refine_newton(const std::function<Cplx(Cplx)>& f, double scale, Cplx start) {
  constexpr double kGradTol = 1e-12;
  constexpr double kFdStep = 1e-6;
  Cplx s = start;
  Cplx v = f(s);
  int it = 0;
  while (it < 50) {
    ++it;
    const Cplx der = (f(s + kFdStep) - f(s - kFdStep)) / (2.0 * kFdStep);
    if (der == Cplx(0.0, 0.0)) break;
    Cplx step = -v / der;
    Cplx snew = s + step;
    Cplx vnew = f(snew);
    for (int halvings = 0; std::abs(vnew) > std::abs(v) && halvings < 8; ++halvings) {
      step *= 0.5;
      snew = s + step;
      vnew = f(snew);
    }
    s = snew;
    v = vnew;
    const double gnorm = 2.0 * (std::abs(v) / scale) * (std::abs(der) / scale);
    if (gnorm < kGradTol) break;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(s))) break;
  }
  return {s, it};
}

}  // namespace internal

namespace {

struct XiEval {
  Cplx value;
  double scale;  // |pi^(-s/2) Gamma(s/2+1)| |s-1|, the zero-free envelope
  double bound;
  int terms;
};

XiEval xi_eval(Cplx s, const EvalConfig& cfg) {
  require_finite(s, "xi");
  // Reflect the left half-plane through xi(s) = xi(1-s); this keeps the
  // direct route clear of the Gamma(s/2+1) poles at s = -2, -4, ...
  if (s.real() < -1.0) return xi_eval(1.0 - s, cfg);
  const Cplx h = 0.5 * s + 1.0;
  const Cplx F = (h.real() > 0.0)
                     ? std::exp(-0.5 * s * kLnPi + log_gamma(h).value)
                     : std::exp(-0.5 * s * kLnPi) * gamma(h).value;
  const double aF = std::abs(F);
  if (std::abs(s - 1.0) <= 0.1) {
    // Pole neighborhood: fold (s-1) into the Euler-Maclaurin form instead
    // of dividing by it.
    const detail::EmParts p = detail::em_parts(s, 1.0, cfg);
    const Cplx value = F * ((s - 1.0) * p.regular + p.pole_num);
    const double scale = aF * std::max(std::abs(s - 1.0), 1e-300);
    const double bound =
        aF * (1.0 + std::abs(s - 1.0)) * p.abs_err_bound + std::abs(value) * 1e-13;
    return {value, scale, bound, p.terms_used};
  }
  const EvalResult z = detail::zeta_any(s, cfg);
  const Cplx value = F * (s - 1.0) * z.value;
  const double scale = aF * std::abs(s - 1.0);
  return {value, scale, scale * z.abs_err_bound + std::abs(value) * 1e-13, z.terms_used};
}

}  // namespace

EvalResult xi(Cplx s, const EvalConfig& cfg) {
  const XiEval e = xi_eval(s, cfg);
  return {e.value, e.bound, e.terms};
}

double hardy_rotation(double t) {
  require_finite(t, "hardy_rotation");
  if (t < 0.0) throw DomainError("hardy_rotation: t must be >= 0");
  if (t == 0.0) return 0.0;
  return log_gamma(Cplx(0.25, 0.5 * t)).value.imag() - 0.5 * t * kLnPi;
}

Cplx hardy_z(double t, const EvalConfig& cfg) {
  const double theta = hardy_rotation(t);
  return std::polar(1.0, theta) * zeta(Cplx(0.5, t), cfg).value;
}

int count_zeros(const StripRect& rect, const EvalConfig& cfg) {
  const internal::ContourFn f = [&cfg](Cplx s) {
    const XiEval e = xi_eval(s, cfg);
    return internal::ScaledVal{e.value, e.scale};
  };
  return internal::winding_count(f, rect);
}

namespace {

double bisect_hardy(double a, double b, double fa, const EvalConfig& cfg, int* evals) {
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) return m;
    const double fm = hardy_z(m, cfg).real();
    ++*evals;
    if (std::abs(fm) < 1e-10) return m;
    if (fa * fm < 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<ZeroRecord> find_zeros(double t_min, double t_max, double step, int n_workers,
                                   const EvalConfig& cfg) {
  require_finite(t_min, "find_zeros");
  require_finite(t_max, "find_zeros");
  require_finite(step, "find_zeros");
  if (!(t_min >= 0.0 && t_min < t_max) || !(step > 0.0))
    throw DomainError("find_zeros: need 0 <= t_min < t_max and step > 0");

  std::vector<double> ts;
  const int nsteps = static_cast<int>(std::floor((t_max - t_min) / step + 1e-9));
  ts.reserve(static_cast<size_t>(nsteps) + 2);
  for (int k = 0; k <= nsteps; ++k) ts.push_back(t_min + k * step);
  if (ts.back() < t_max - 1e-12 * std::max(1.0, t_max)) ts.push_back(t_max);
  const int n = static_cast<int>(ts.size());

  std::vector<double> zv(static_cast<size_t>(n));
  parallel_for(n, n_workers, [&](int k) {
    zv[static_cast<size_t>(k)] = hardy_z(ts[static_cast<size_t>(k)], cfg).real();
  });

  std::vector<ZeroRecord> out;
  for (int k = 0; k + 1 < n; ++k) {
    double t0;
    int evals = 0;
    if (zv[static_cast<size_t>(k)] == 0.0) {
      t0 = ts[static_cast<size_t>(k)];
    } else if (zv[static_cast<size_t>(k)] * zv[static_cast<size_t>(k) + 1] < 0.0) {
      t0 = bisect_hardy(ts[static_cast<size_t>(k)], ts[static_cast<size_t>(k) + 1],
                        zv[static_cast<size_t>(k)], cfg, &evals);
    } else {
      continue;
    }
    // 2-D refinement from a deliberately off-line start.
    const Cplx start(0.5 + 0.01, t0);
    const double scale = xi_eval(start, cfg).scale;
    const internal::RefineOut r = internal::refine_newton(
        [&cfg](Cplx s) { return xi_eval(s, cfg).value; }, scale, start);
    const double abs_zeta = std::abs(zeta(r.s, cfg).value);
    if (!(r.s.real() > 0.0 && r.s.real() < 1.0) || !(abs_zeta <= 1e-8))
      throw NonConvergence("find_zeros: refinement missed the certification thresholds");
    out.push_back({r.s.imag(), r.s.real(), abs_zeta, r.iters + evals});
  }

  const int wind = count_zeros({0.01, 0.99, t_min, t_max}, cfg);
  if (wind > static_cast<int>(out.size()))
    throw StepTooCoarse("find_zeros: winding count exceeds the sign-change count; reduce step");
  if (wind < static_cast<int>(out.size()))
    throw RoundingDefect("find_zeros: winding count below the refined zero count");
  return out;
}

}  // namespace zetalab
