// SPDX-License-Identifier: Apache-2.0
//
// zetalab command-line surface.  One subcommand per library operation,
// CSV by default (--format json mirrors it), every float printed with 17
// significant digits.  Exit codes: 0 success, 1 usage error, 2 evaluation
// failure, 3 verification failure.
//
// Reproducibility contract: the global --seed fully determines every
// randomized sample set, and stdout is byte-identical for any --workers
// value (parallel loops use fixed index ownership and ordered reduction).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetalab/core.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/functional_eq.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/sigma_solver.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zero_finder.hpp"

using namespace zetalab;

namespace {

struct Options {
  std::string format = "csv";
  std::uint64_t seed = 42;
  int workers = 1;
  double tol = 1e-12;

  EvalConfig cfg() const {
    EvalConfig c;
    c.target_abs_err = tol;
    return c;
  }
  bool json() const { return format == "json"; }
};

std::string fnum(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.16e", v);
  return b;
}

// JSON has no literal for IEEE specials; NaN cells become null.
std::string jnum(double v) { return std::isfinite(v) ? fnum(v) : "null"; }

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 1;
}

bool parse_complex(const std::string& text, Cplx* out) {
  double re = 0, im = 0;
  char trail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &trail) != 2) return false;
  *out = Cplx(re, im);
  return true;
}

// ---------------------------------------------------------------- eval ----

int run_eval(const Options& opt, const std::string& func, const std::string& s_text,
             double a, bool a_given, int modulus, int char_index) {
  Cplx s;
  if (!parse_complex(s_text, &s))
    return usage_error("invalid --s value '" + s_text + "' (expected re,im)");
  const EvalConfig cfg = opt.cfg();

  EvalResult r;
  if (func == "zeta") {
    r = zeta(s, cfg);
  } else if (func == "eta") {
    r = eta(s, cfg);
  } else if (func == "gamma") {
    r = gamma(s);
  } else if (func == "gfactor") {
    r = g_factor(s);
  } else if (func == "xi") {
    r = xi(s, cfg);
  } else if (func == "hurwitz") {
    if (!a_given) return usage_error("--func hurwitz requires --a");
    r = hurwitz_zeta(s, a, cfg);
  } else {  // lfunc; the func token itself is validated by the option check
    auto chars = characters(modulus);
    if (char_index < 0 || char_index >= static_cast<int>(chars.size()))
      return usage_error("--char-index out of range for modulus " + std::to_string(modulus));
    r = l_function(s, chars[char_index], cfg);
  }

  if (opt.json()) {
    std::printf("{\"value\":{\"re\":%s,\"im\":%s},\"abs_err_bound\":%s,\"terms_used\":%d}\n",
                jnum(r.value.real()).c_str(), jnum(r.value.imag()).c_str(),
                jnum(r.abs_err_bound).c_str(), r.terms_used);
  } else {
    std::printf("re,im,abs_err_bound,terms_used\n%s,%s,%s,%d\n",
                fnum(r.value.real()).c_str(), fnum(r.value.imag()).c_str(),
                fnum(r.abs_err_bound).c_str(), r.terms_used);
  }
  return 0;
}

// ------------------------------------------------------------ check-fe ----

int run_check_fe(const Options& opt, const StripRect& rect, int samples,
                 double threshold) {
  if (samples < 1) return usage_error("--samples must be at least 1");
  try {
    rect.validate();
  } catch (const EvalError& e) {
    return usage_error(e.what());
  }

  // Draw the whole sample set up front so the set depends only on the seed.
  std::vector<Cplx> pts(samples);
  SampleRng rng(opt.seed);
  for (int i = 0; i < samples; ++i) {
    const double sg = rng.uniform(rect.sigma_min, rect.sigma_max);
    const double t = rng.uniform(rect.t_min, rect.t_max);
    pts[i] = Cplx(sg, t);
  }

  const EvalConfig cfg = opt.cfg();
  std::vector<double> res(samples);
  parallel_for(samples, opt.workers, [&](int i) {
    try {
      res[i] = fe_residual(pts[i], cfg);
    } catch (const EvalError&) {
      res[i] = std::numeric_limits<double>::quiet_NaN();  // pole cell: skip
    }
  });

  int skipped = 0, evaluated = 0;
  double mx = 0, sum = 0;
  for (double v : res) {
    if (std::isnan(v)) {
      ++skipped;
    } else {
      ++evaluated;
      sum += v;
      mx = std::max(mx, v);
    }
  }
  const double mean = evaluated ? sum / evaluated : std::numeric_limits<double>::quiet_NaN();
  if (!evaluated) mx = std::numeric_limits<double>::quiet_NaN();

  if (opt.json()) {
    std::printf(
        "{\"samples\":%d,\"evaluated\":%d,\"skipped\":%d,\"max_residual\":%s,"
        "\"mean_residual\":%s}\n",
        samples, evaluated, skipped, jnum(mx).c_str(), jnum(mean).c_str());
  } else {
    std::printf("samples,evaluated,skipped,max_residual,mean_residual\n%d,%d,%d,%s,%s\n",
                samples, evaluated, skipped, fnum(mx).c_str(), fnum(mean).c_str());
  }
  return (evaluated > 0 && mx < threshold) ? 0 : 3;
}

// --------------------------------------------------------- zeros/lzeros ----

template <typename Record>
int print_zero_rows(const Options& opt, const std::vector<Record>& zs,
                    double abs_value_of(const Record&)) {
  if (opt.json()) {
    std::printf("[");
    for (size_t i = 0; i < zs.size(); ++i) {
      std::printf("%s\n{\"t\":%s,\"sigma\":%s,\"abs_value\":%s,\"refine_iters\":%d}",
                  i ? "," : "", jnum(zs[i].t).c_str(), jnum(zs[i].sigma).c_str(),
                  jnum(abs_value_of(zs[i])).c_str(), zs[i].refine_iters);
    }
    std::printf("%s]\n", zs.empty() ? "" : "\n");
  } else {
    std::printf("t,sigma,abs_value,refine_iters\n");
    for (const auto& z : zs)
      std::printf("%s,%s,%s,%d\n", fnum(z.t).c_str(), fnum(z.sigma).c_str(),
                  fnum(abs_value_of(z)).c_str(), z.refine_iters);
  }
  for (const auto& z : zs) {
    if (std::fabs(z.sigma - 0.5) >= 1e-8) {
      std::fprintf(stderr, "verification failed: zero at t=%.6f off the critical line\n", z.t);
      return 3;
    }
  }
  return 0;
}

int run_zeros(const Options& opt, double tmin, double tmax, double step,
              const std::string& method) {
  if (!(tmin < tmax)) return usage_error("--tmin must be below --tmax");
  if (!(step > 0)) return usage_error("--step must be positive");
  const EvalConfig cfg = opt.cfg();

  if (method == "winding") {
    StripRect rect{0.01, 0.99, std::max(tmin, 0.01), tmax};
    const int c = count_zeros(rect, cfg);
    if (opt.json())
      std::printf("{\"count\":%d}\n", c);
    else
      std::printf("count\n%d\n", c);
    return 0;
  }

  const auto zs = find_zeros(tmin, tmax, step, opt.workers, cfg);
  return print_zero_rows<ZeroRecord>(opt, zs, [](const ZeroRecord& z) { return z.abs_zeta; });
}

int run_lzeros(const Options& opt, int modulus, int char_index, double tmin,
               double tmax, double step) {
  if (!(tmin < tmax)) return usage_error("--tmin must be below --tmax");
  if (!(step > 0)) return usage_error("--step must be positive");
  auto chars = characters(modulus);
  if (char_index < 0 || char_index >= static_cast<int>(chars.size()))
    return usage_error("--char-index out of range for modulus " + std::to_string(modulus));
  const auto zs = find_l_zeros(chars[char_index], tmin, tmax, step, opt.workers, opt.cfg());
  return print_zero_rows<LZeroRecord>(opt, zs, [](const LZeroRecord& z) { return z.abs_l; });
}

// ---------------------------------------------------------- solve-sigma ----

int run_solve_sigma(const Options& opt, const std::string& eq, double lo, double hi,
                    double tol) {
  SigmaSolveReport r;
  try {
    if (eq == "zeta-gap" || eq == "5")
      r = solve_zeta_gap(lo, hi, tol, opt.cfg());
    else
      r = solve_g_gap(lo, hi, tol, opt.cfg());
  } catch (const BracketError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  }

  if (opt.json()) {
    std::printf(
        "{\"equation\":\"%s\",\"root\":%s,\"residual\":%s,\"bracket_lo\":%s,"
        "\"bracket_hi\":%s,\"iterations\":%d}\n",
        r.equation.c_str(), jnum(r.root).c_str(), jnum(r.residual).c_str(),
        jnum(r.bracket_lo).c_str(), jnum(r.bracket_hi).c_str(), r.iterations);
  } else {
    std::printf("equation,root,residual,bracket_lo,bracket_hi,iterations\n%s,%s,%s,%s,%s,%d\n",
                r.equation.c_str(), fnum(r.root).c_str(), fnum(r.residual).c_str(),
                fnum(r.bracket_lo).c_str(), fnum(r.bracket_hi).c_str(), r.iterations);
  }
  return std::fabs(r.root - 0.5) < 10 * tol ? 0 : 3;
}

// ----------------------------------------------------------------- scan ----

int run_scan(const Options& opt, const StripRect& rect, int n_sigma, int n_t,
             const std::string& field) {
  if (!(rect.sigma_min > 0 && rect.sigma_min < rect.sigma_max && rect.sigma_max < 1) ||
      !(rect.t_min < rect.t_max) || !(rect.t_min > 0))
    return usage_error("malformed rect: need 0 < sigma-min < sigma-max < 1 and 0 < tmin < tmax");
  if (n_sigma < 2 || n_t < 2) return usage_error("grid must be at least 2x2");

  const GapField f =
      (field == "factor_gap" || field == "factor-gap") ? GapField::FactorGap : GapField::AbsGap;
  const GridScan g = locus_scan(rect, n_sigma, n_t, f, opt.workers, opt.cfg());
  if (g.warnings > 0)
    std::fprintf(stderr, "warning: %d cells failed evaluation (stored as nan)\n", g.warnings);

  if (opt.json()) {
    std::printf("[");
    bool first = true;
    for (int ti = 0; ti < n_t; ++ti)
      for (int sj = 0; sj < n_sigma; ++sj) {
        std::printf("%s\n{\"sigma\":%s,\"t\":%s,\"value\":%s}", first ? "" : ",",
                    jnum(g.sigma_at(sj)).c_str(), jnum(g.t_at(ti)).c_str(),
                    jnum(g.at(ti, sj)).c_str());
        first = false;
      }
    std::printf("\n]\n");
  } else {
    std::printf("sigma,t,value\n");
    for (int ti = 0; ti < n_t; ++ti)
      for (int sj = 0; sj < n_sigma; ++sj)
        std::printf("%s,%s,%s\n", fnum(g.sigma_at(sj)).c_str(), fnum(g.t_at(ti)).c_str(),
                    fnum(g.at(ti, sj)).c_str());
  }
  return 0;
}

// -------------------------------------------------------------- certify ----

int run_certify(const Options& opt, const std::string& target, int samples,
                double fd_step, double deriv_tol) {
  if (samples < 1) return usage_error("--samples must be at least 1");
  std::vector<MonotoneTarget> targets;
  if (target == "all") {
    targets = {MonotoneTarget::Zeta, MonotoneTarget::GFactor, MonotoneTarget::PiPow,
               MonotoneTarget::GammaHalf};
  } else if (target == "zeta") {
    targets = {MonotoneTarget::Zeta};
  } else if (target == "g-factor") {
    targets = {MonotoneTarget::GFactor};
  } else if (target == "pi-pow") {
    targets = {MonotoneTarget::PiPow};
  } else {
    targets = {MonotoneTarget::GammaHalf};
  }

  bool all_negative = true;
  double max_rel_err = 0;
  std::vector<DerivativeCheck> rows;
  for (MonotoneTarget tg : targets) {
    CertifyReport r = certify_monotone(tg, samples, fd_step, opt.cfg());
    all_negative = all_negative && r.all_negative;
    max_rel_err = std::max(max_rel_err, r.max_rel_err);
    rows.insert(rows.end(), r.checks.begin(), r.checks.end());
  }

  if (opt.json()) {
    std::printf("[");
    for (size_t i = 0; i < rows.size(); ++i)
      std::printf("%s\n{\"target\":\"%s\",\"sigma\":%s,\"analytic\":%s,\"finite_diff\":%s,"
                  "\"rel_err\":%s}",
                  i ? "," : "", to_string(rows[i].target), jnum(rows[i].sigma).c_str(),
                  jnum(rows[i].analytic).c_str(), jnum(rows[i].finite_diff).c_str(),
                  jnum(rows[i].rel_err).c_str());
    std::printf("%s]\n", rows.empty() ? "" : "\n");
  } else {
    std::printf("target,sigma,analytic,finite_diff,rel_err\n");
    for (const auto& c : rows)
      std::printf("%s,%s,%s,%s,%s\n", to_string(c.target), fnum(c.sigma).c_str(),
                  fnum(c.analytic).c_str(), fnum(c.finite_diff).c_str(),
                  fnum(c.rel_err).c_str());
  }
  if (!all_negative || max_rel_err > deriv_tol) {
    std::fprintf(stderr, "verification failed: %s\n",
                 !all_negative ? "a derivative came out non-negative"
                               : "finite-difference mismatch above tolerance");
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "zetalab: numerical laboratory for the Riemann zeta function, its "
      "reflection identity, and Dirichlet L-functions"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized sample sets")->capture_default_str();
  app.add_option("--workers", opt.workers, "worker threads (output is identical for any value)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--tol", opt.tol, "target absolute error for evaluators")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // eval
  std::string ev_func, ev_s;
  double ev_a = 0;
  int ev_modulus = 1, ev_index = 0;
  auto* sc_eval = app.add_subcommand("eval", "evaluate one function at one point");
  sc_eval->fallthrough();
  sc_eval->add_option("--func", ev_func, "which function")
      ->check(CLI::IsMember({"zeta", "eta", "gamma", "gfactor", "xi", "hurwitz", "lfunc"}))
      ->required();
  sc_eval->add_option("--s", ev_s, "evaluation point as re,im")->required();
  auto* ev_a_opt = sc_eval->add_option("--a", ev_a, "Hurwitz shift in (0,1]");
  sc_eval->add_option("--modulus", ev_modulus, "Dirichlet modulus (lfunc)");
  sc_eval->add_option("--char-index", ev_index, "character index (lfunc; 0 = principal)");

  // check-fe
  StripRect fe_rect;
  int fe_samples = 1000;
  double fe_threshold = 1e-9;
  auto* sc_fe = app.add_subcommand(
      "check-fe", "sample the reflection identity residual over a rectangle");
  sc_fe->fallthrough();
  sc_fe->add_option("--sigma-min", fe_rect.sigma_min)->capture_default_str();
  sc_fe->add_option("--sigma-max", fe_rect.sigma_max)->capture_default_str();
  sc_fe->add_option("--tmin", fe_rect.t_min)->capture_default_str();
  sc_fe->add_option("--tmax", fe_rect.t_max)->capture_default_str();
  sc_fe->add_option("--samples", fe_samples, "number of random points")->capture_default_str();
  sc_fe->add_option("--threshold", fe_threshold, "pass/fail bound on the max residual")
      ->capture_default_str();

  // zeros
  double z_tmin = 0, z_tmax = 30, z_step = 0.05;
  std::string z_method = "line-scan";
  auto* sc_zeros = app.add_subcommand("zeros", "locate zeta zeros in a t range");
  sc_zeros->fallthrough();
  sc_zeros->add_option("--tmin", z_tmin)->capture_default_str();
  sc_zeros->add_option("--tmax", z_tmax)->capture_default_str();
  sc_zeros->add_option("--step", z_step, "critical-line scan step")->capture_default_str();
  sc_zeros->add_option("--method", z_method, "line-scan emits rows; winding emits a count")
      ->check(CLI::IsMember({"line-scan", "winding"}))
      ->capture_default_str();

  // lzeros
  int lz_modulus = 4, lz_index = 1;
  double lz_tmin = 0, lz_tmax = 10, lz_step = 0.05;
  auto* sc_lzeros =
      app.add_subcommand("lzeros", "locate L-function zeros for a primitive character");
  sc_lzeros->fallthrough();
  sc_lzeros->add_option("--modulus", lz_modulus)->capture_default_str();
  sc_lzeros->add_option("--char-index", lz_index)->capture_default_str();
  sc_lzeros->add_option("--tmin", lz_tmin)->capture_default_str();
  sc_lzeros->add_option("--tmax", lz_tmax)->capture_default_str();
  sc_lzeros->add_option("--step", lz_step)->capture_default_str();

  // solve-sigma
  std::string ss_eq = "zeta-gap";
  double ss_lo = 0.1, ss_hi = 0.9, ss_tol = 1e-12;
  auto* sc_solve =
      app.add_subcommand("solve-sigma", "bisect a reflection gap equation for its root");
  sc_solve->fallthrough();
  sc_solve->add_option("--eq", ss_eq, "zeta-gap (alias 5) or g-gap (alias 9)")
      ->check(CLI::IsMember({"zeta-gap", "g-gap", "5", "9"}))
      ->capture_default_str();
  sc_solve->add_option("--lo", ss_lo)->capture_default_str();
  sc_solve->add_option("--hi", ss_hi)->capture_default_str();
  sc_solve->add_option("--tol", ss_tol, "bisection half-width target")->capture_default_str();

  // scan
  StripRect scan_rect{0.05, 0.95, 2.0, 30.0};
  int scan_ns = 91, scan_nt = 281;
  std::string scan_field = "abs_gap";
  auto* sc_scan = app.add_subcommand("scan", "evaluate a gap field over a grid");
  sc_scan->fallthrough();
  sc_scan->add_option("--sigma-min", scan_rect.sigma_min)->capture_default_str();
  sc_scan->add_option("--sigma-max", scan_rect.sigma_max)->capture_default_str();
  sc_scan->add_option("--tmin", scan_rect.t_min)->capture_default_str();
  sc_scan->add_option("--tmax", scan_rect.t_max)->capture_default_str();
  sc_scan->add_option("--n-sigma", scan_ns)->capture_default_str();
  sc_scan->add_option("--n-t", scan_nt)->capture_default_str();
  sc_scan->add_option("--field", scan_field)
      ->check(CLI::IsMember({"abs_gap", "abs-gap", "factor_gap", "factor-gap"}))
      ->capture_default_str();

  // certify
  std::string ct_target = "all";
  int ct_samples = 25;
  double ct_fd_step = 1e-6, ct_deriv_tol = 1e-5;
  auto* sc_certify = app.add_subcommand(
      "certify", "compare analytic sigma-derivatives against finite differences");
  sc_certify->fallthrough();
  sc_certify->add_option("--target", ct_target)
      ->check(CLI::IsMember({"zeta", "g-factor", "pi-pow", "gamma-half", "all"}))
      ->capture_default_str();
  sc_certify->add_option("--samples", ct_samples, "interior grid size")->capture_default_str();
  sc_certify->add_option("--fd-step", ct_fd_step)->capture_default_str();
  sc_certify->add_option("--deriv-tol", ct_deriv_tol, "pass/fail bound on rel_err")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  int rc = 0;
  try {
    if (sc_eval->parsed()) {
      rc = run_eval(opt, ev_func, ev_s, ev_a, ev_a_opt->count() > 0, ev_modulus, ev_index);
    } else if (sc_fe->parsed()) {
      rc = run_check_fe(opt, fe_rect, fe_samples, fe_threshold);
    } else if (sc_zeros->parsed()) {
      rc = run_zeros(opt, z_tmin, z_tmax, z_step, z_method);
    } else if (sc_lzeros->parsed()) {
      rc = run_lzeros(opt, lz_modulus, lz_index, lz_tmin, lz_tmax, lz_step);
    } else if (sc_solve->parsed()) {
      rc = run_solve_sigma(opt, ss_eq, ss_lo, ss_hi, ss_tol);
    } else if (sc_scan->parsed()) {
      rc = run_scan(opt, scan_rect, scan_ns, scan_nt, scan_field);
    } else if (sc_certify->parsed()) {
      rc = run_certify(opt, ct_target, ct_samples, ct_fd_step, ct_deriv_tol);
    }
  } catch (const StepTooCoarse& e) {
    std::fprintf(stderr, "%s\n", e.what());
    rc = 3;
  } catch (const RoundingDefect& e) {
    std::fprintf(stderr, "%s\n", e.what());
    rc = 3;
  } catch (const EvalError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    rc = 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    rc = 2;
  }
  return rc;
}
