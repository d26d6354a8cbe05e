// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/core.hpp"

namespace zetalab {

// Open rectangle inside the critical strip.
struct StripRect {
  double sigma_min = 0.05;
  double sigma_max = 0.95;
  double t_min = 0.5;
  double t_max = 50.0;

  void validate() const;  // 0 < sigma_min < sigma_max < 1, t_min < t_max
};

// Relative mismatch of the completed-zeta reflection at s:
//   |g(s) zeta(s) - g(1-s) zeta(1-s)| / max(|lhs|, |rhs|).
// PoleError at s in {0, 1} and at the gamma poles hit by s/2 or (1-s)/2.
double fe_residual(Cplx s, const EvalConfig& cfg = {});

// |zeta(s)| - |zeta(1-s)|, sign retained.
double abs_gap(Cplx s, const EvalConfig& cfg = {});

// |g(s)| - |g(1-s)|, sign retained.
double factor_gap(Cplx s, const EvalConfig& cfg = {});

enum class GapField { AbsGap, FactorGap };

// Row-major grid of a gap field over rect: row i is the t_i line, column j
// the sigma_j node, both endpoints included.  Cells where evaluation
// raises are stored as NaN and counted in warnings.
struct GridScan {
  StripRect rect;
  int n_sigma = 0;
  int n_t = 0;
  GapField field = GapField::AbsGap;
  std::vector<double> values;  // size n_sigma * n_t
  int warnings = 0;

  double at(int ti, int sj) const { return values[static_cast<size_t>(ti) * n_sigma + sj]; }
  double sigma_at(int sj) const;
  double t_at(int ti) const;
};

// Evaluate the field over the grid.  Requires n_sigma, n_t >= 2 and
// rect.t_min > 0 (the grid must avoid s = 1 by construction).  Rows are
// distributed over n_workers with a fixed ownership map, so the result is
// bit-identical for any worker count.
GridScan locus_scan(const StripRect& rect, int n_sigma, int n_t, GapField field,
                    int n_workers = 1, const EvalConfig& cfg = {});

// Sign-change brackets of one grid row, as (sigma_lo, sigma_hi) pairs; an
// exact zero cell degenerates to sigma_lo == sigma_hi.  NaN cells break
// adjacency.
std::vector<std::pair<double, double>> row_sign_changes(const GridScan& scan, int ti);

}  // namespace zetalab
