// SPDX-License-Identifier: Apache-2.0
#include "zetalab/functional_eq.hpp"

#include <cmath>
#include <limits>

#include "zetalab/parallel.hpp"
#include "zetalab/special.hpp"

namespace zetalab {

void StripRect::validate() const {
  require_finite(sigma_min, "StripRect");
  require_finite(sigma_max, "StripRect");
  require_finite(t_min, "StripRect");
  require_finite(t_max, "StripRect");
  if (!(0.0 < sigma_min && sigma_min < sigma_max && sigma_max < 1.0))
    throw DomainError("StripRect: need 0 < sigma_min < sigma_max < 1");
  if (!(t_min < t_max)) throw DomainError("StripRect: need t_min < t_max");
}

namespace {

void reject_fe_poles(Cplx s, const char* where) {
  require_finite(s, where);
  if (s == Cplx(0.0, 0.0) || s == Cplx(1.0, 0.0))
    throw PoleError(std::string(where) + ": s on the pole set {0, 1}");
  // Gamma poles of s/2 and (1-s)/2 are raised by g_factor itself.
}

}  // namespace

double fe_residual(Cplx s, const EvalConfig& cfg) {
  reject_fe_poles(s, "fe_residual");
  const EvalResult gl = g_factor(s);
  const EvalResult zl = detail::zeta_any(s, cfg);
  const EvalResult gr = g_factor(1.0 - s);
  const EvalResult zr = detail::zeta_any(1.0 - s, cfg);
  const Cplx lhs = gl.value * zl.value;
  const Cplx rhs = gr.value * zr.value;
  const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / denom;
}

double abs_gap(Cplx s, const EvalConfig& cfg) {
  reject_fe_poles(s, "abs_gap");
  return std::abs(detail::zeta_any(s, cfg).value) -
         std::abs(detail::zeta_any(1.0 - s, cfg).value);
}

double factor_gap(Cplx s, const EvalConfig& cfg) {
  (void)cfg;
  reject_fe_poles(s, "factor_gap");
  return std::abs(g_factor(s).value) - std::abs(g_factor(1.0 - s).value);
}

double GridScan::sigma_at(int sj) const {
  return rect.sigma_min + (rect.sigma_max - rect.sigma_min) * sj / (n_sigma - 1);
}

double GridScan::t_at(int ti) const {
  return rect.t_min + (rect.t_max - rect.t_min) * ti / (n_t - 1);
}

GridScan locus_scan(const StripRect& rect, int n_sigma, int n_t, GapField field,
                    int n_workers, const EvalConfig& cfg) {
  rect.validate();
  if (n_sigma < 2 || n_t < 2) throw DomainError("locus_scan: grid dims must be >= 2");
  if (!(rect.t_min > 0.0))
    throw DomainError("locus_scan: t_min must be positive so the grid avoids s = 1");
  GridScan scan;
  scan.rect = rect;
  scan.n_sigma = n_sigma;
  scan.n_t = n_t;
  scan.field = field;
  scan.values.assign(static_cast<size_t>(n_sigma) * n_t, 0.0);
  std::vector<unsigned char> warn(static_cast<size_t>(n_t), 0);
  parallel_for(n_t, n_workers, [&](int ti) {
    const double t = scan.t_at(ti);
    for (int sj = 0; sj < n_sigma; ++sj) {
      const Cplx s(scan.sigma_at(sj), t);
      double v;
      try {
        v = (field == GapField::AbsGap) ? abs_gap(s, cfg) : factor_gap(s, cfg);
      } catch (const EvalError&) {
        v = std::numeric_limits<double>::quiet_NaN();
        warn[static_cast<size_t>(ti)] += 1;
      }
      scan.values[static_cast<size_t>(ti) * n_sigma + sj] = v;
    }
  });
  for (int ti = 0; ti < n_t; ++ti) scan.warnings += warn[static_cast<size_t>(ti)];
  return scan;
}

std::vector<std::pair<double, double>> row_sign_changes(const GridScan& scan, int ti) {
  if (ti < 0 || ti >= scan.n_t) throw DomainError("row_sign_changes: row out of range");
  std::vector<std::pair<double, double>> out;
  for (int sj = 0; sj < scan.n_sigma; ++sj) {
    const double v = scan.at(ti, sj);
    if (std::isnan(v)) continue;
    if (v == 0.0) {
      out.emplace_back(scan.sigma_at(sj), scan.sigma_at(sj));
      continue;
    }
    if (sj + 1 < scan.n_sigma) {
      const double w = scan.at(ti, sj + 1);
      if (!std::isnan(w) && v * w < 0.0)
        out.emplace_back(scan.sigma_at(sj), scan.sigma_at(sj + 1));
    }
  }
  return out;
}

}  // namespace zetalab
