// SPDX-License-Identifier: Apache-2.0
//
// Series engines: accelerated alternating (eta-type) sums, Euler-Maclaurin
// continuation, Lanczos gamma, shifted-Stirling log gamma, and the real
// sigma-derivatives built on them.

#include "zetalab/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace zetalab {

namespace {

constexpr double kPi = MathConstants::pi;
constexpr double kLn2 = MathConstants::ln_2;
constexpr double kLnPi = MathConstants::ln_pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrt2Pi = 2.50662827463100050242;  // sqrt(2 pi)

bool is_nonpositive_integer(Cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// ---------------------------------------------------------------------------
// Accelerated alternating sums.
//
// sum_{n>=1} (-1)^(n-1) a(n): the first n0 terms are added directly, the
// tail sum_{m>=0} (-1)^m a(n0+1+m) (n0 kept even so the leading sign is +)
// goes through the binomial-weighted Euler transform
//     tail = sum_k (-1)^k (Delta^k a)(n0+1) / 2^(k+1).
// The forward-difference table shrinks geometrically once n0 is past the
// oscillation scale of a (for a(n) = n^(-s) that is n0 ≳ 1.2 |im s|), so the
// stop rule is: truncation bound = 8 x |last correction|, and n0 doubles
// until that meets the target.  A roundoff guard proportional to the sum of
// added magnitudes keeps the reported bound honest at the 1e-15 floor;
// phase_scale (|im s| for power terms) charges the extra eps * |t| ln n
// rounding that the computed phases t ln n carry.
// ---------------------------------------------------------------------------

template <typename Term>
EvalResult alternating_sum(Term term, const EvalConfig& cfg, double phase_scale = 0.0) {
  cfg.validate();
  const int order = cfg.accel_order;
  std::vector<Cplx> c(static_cast<size_t>(order));
  int total_terms = 0;
  for (int n0 = 16;; n0 *= 2) {
    if (n0 + order > cfg.max_terms)
      throw NonConvergence("alternating series: no convergence within max_terms");

    Cplx direct = 0.0;
    double acc_abs = 0.0;
    double sign = 1.0;
    for (int n = 1; n <= n0; ++n, sign = -sign) {
      const Cplx a = term(n);
      direct += sign * a;
      acc_abs += std::abs(a);
    }
    for (int m = 0; m < order; ++m) c[static_cast<size_t>(m)] = term(n0 + 1 + m);
    total_terms += n0 + order;

    Cplx tail = 0.0;
    double last_abs = 0.0;
    double csign = 1.0;
    for (int k = 0; k < order; ++k, csign = -csign) {
      const Cplx corr = csign * std::ldexp(1.0, -(k + 1)) * c[0];
      tail += corr;
      last_abs = std::abs(corr);
      acc_abs += last_abs;
      for (int j = 0; j + 1 < order - k; ++j)
        c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) + 1] - c[static_cast<size_t>(j)];
    }

    // The summation floor decides convergence; the reported bound also
    // charges the eps * |t| ln n error of the computed term phases.
    const double trunc = 8.0 * last_abs;
    const double floor = 2.0 * kEps * acc_abs;
    const double phase_noise =
        kEps * acc_abs * phase_scale * std::log(static_cast<double>(n0 + order));
    if (trunc <= cfg.target_abs_err || trunc <= floor)
      return {direct + tail, trunc + floor + phase_noise, total_terms};
  }
}

// ---------------------------------------------------------------------------
// Lanczos gamma, g = 607/128, 15 coefficients.
// ---------------------------------------------------------------------------

constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// Valid for re(z) >= 1/2.
Cplx lanczos_gamma(Cplx z) {
  Cplx acc = kLanczos[0];
  for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
  const Cplx base = z + (kLanczosG - 0.5);
  return kSqrt2Pi * std::exp((z - 0.5) * std::log(base) - base) * acc;
}

// ---------------------------------------------------------------------------
// Stirling log gamma.  B_{2k} / (2k (2k-1)), k = 1..11; the last entry only
// drives the remainder bound.
// ---------------------------------------------------------------------------

constexpr double kStirling[11] = {
    8.3333333333333333333e-02,  -2.7777777777777777778e-03, 7.9365079365079365079e-04,
    -5.9523809523809523810e-04, 8.4175084175084175084e-04,  -1.9175269175269175269e-03,
    6.4102564102564102564e-03,  -2.9550653594771241830e-02, 1.7964437236883057316e-01,
    -1.3924322169059011164e+00, 1.3402864044168391994e+01};

// Asymptotic-regime log sin(pi z): used only on the log_gamma reflection
// path, where cosh(pi im z) would overflow a direct evaluation.
Cplx log_sin_pi(Cplx z) {
  const double n = std::nearbyint(z.real());
  const Cplx w(z.real() - n, z.imag());
  const double y = z.imag();
  Cplx val;
  if (std::abs(y) < 20.0) {
    val = std::log(std::sin(kPi * w));
  } else if (y > 0.0) {
    const Cplx small = -std::exp(Cplx(0.0, 2.0 * kPi) * w);  // |.| = e^(-2 pi y)
    val = Cplx(0.0, -kPi) * w + Cplx(-kLn2, 0.5 * kPi) + std::log(1.0 + small);
  } else {
    const Cplx small = -std::exp(Cplx(0.0, -2.0 * kPi) * w);
    val = Cplx(0.0, kPi) * w + Cplx(-kLn2, -0.5 * kPi) + std::log(1.0 + small);
  }
  // (-1)^n factor; the i pi n branch is tied to the reflection recurrence.
  if (std::fmod(n, 2.0) != 0.0) val += Cplx(0.0, y >= 0.0 ? kPi : -kPi);
  return val;
}

Cplx log_gamma_right(Cplx z) {
  // Shift into |z| >= 12 (re only grows, so the principal logs never cross
  // a cut and the result is continuous along vertical lines).
  Cplx shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const Cplx lz = std::log(z);
  Cplx series = 0.0;
  Cplx zpow = 1.0 / z;
  const Cplx z2 = z * z;
  for (int k = 0; k < 10; ++k) {
    series += kStirling[k] * zpow;
    zpow /= z2;
  }
  return (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

double log_gamma_tail_bound(Cplx z_shifted) {
  const double c = std::cos(0.5 * std::arg(z_shifted));
  return kStirling[10] / (std::pow(std::abs(z_shifted), 21) * std::pow(c, 22));
}

}  // namespace

namespace detail {

Cplx cplx_pow(double base, Cplx e) {
  const double L = std::log(base);
  return std::polar(std::exp(e.real() * L), e.imag() * L);
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin core for zeta(s, a):
//   sum_{n=0}^{N-1} (n+a)^(-s)  +  w^(1-s)/(s-1)  +  w^(-s)/2
//   + sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} w^(-s-2k+1),     w = N + a,
// with M = 14 and N adapted until the first-omitted-term remainder bound
//   |B_{2M+2}/(2M+2)! (s)_{2M+1} w^(-s-2M-1)| |s+2M+1|/(sigma+2M+1)
// meets the target.  The pole numerator w^(1-s) is returned unsplit so
// callers near s = 1 can fold in (s-1) analytically.
// ---------------------------------------------------------------------------

namespace {
// B_{2k} / (2k)!, k = 1..15.
constexpr double kBernFact[15] = {
    8.3333333333333333333e-02,  -1.3888888888888888889e-03, 3.3068783068783068783e-05,
    -8.2671957671957671958e-07, 2.0876756987868098979e-08,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.1748686985580618730e-16, 5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21,  -8.9535174270375468504e-23, 2.2679524523376830603e-24};
constexpr int kEmOrder = 14;
}  // namespace

EmParts em_parts(Cplx s, double a, const EvalConfig& cfg) {
  cfg.validate();
  const double sigma = s.real();
  int N = std::max(20, static_cast<int>(std::ceil(1.3 * (std::abs(s.imag()) + 6.0))));
  for (;; N *= 2) {
    if (N > cfg.max_terms)
      throw NonConvergence("euler-maclaurin: node count exceeded max_terms");

    Cplx direct = 0.0;
    double acc_abs = 0.0;
    for (int n = 0; n < N; ++n) {
      const Cplx u = cplx_pow(n + a, -s);
      direct += u;
      acc_abs += std::abs(u);
    }
    const double w = N + a;
    const Cplx wms = cplx_pow(w, -s);
    Cplx corr = 0.5 * wms;
    acc_abs += 0.5 * std::abs(wms);

    Cplx poch = s;            // (s)_{2k-1} at k = 1
    Cplx wpow = wms / w;      // w^(-s-2k+1) at k = 1
    for (int k = 1; k <= kEmOrder; ++k) {
      const Cplx term = kBernFact[k - 1] * poch * wpow;
      corr += term;
      acc_abs += std::abs(term);
      poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
      wpow /= w * w;
    }
    // poch/wpow now sit at k = M+1: the first omitted term.
    const double omis = std::abs(kBernFact[kEmOrder] * poch * wpow);
    const double rbound = omis * std::abs(s + (2.0 * kEmOrder + 1.0)) / (sigma + 2.0 * kEmOrder + 1.0);
    const double floor = 2.0 * kEps * acc_abs;
    const double phase_noise = kEps * acc_abs * std::abs(s.imag()) * std::log(w);
    if (rbound <= cfg.target_abs_err || rbound <= floor)
      return {direct + corr, wms * w, w, rbound + floor + phase_noise, N + kEmOrder};
  }
}

EvalResult zeta_any(Cplx s, const EvalConfig& cfg) {
  if (s.real() > 0.0) return zeta(s, cfg);
  return zeta_em(s, cfg);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public evaluators.
// ---------------------------------------------------------------------------

EvalResult eta(Cplx s, const EvalConfig& cfg) {
  require_finite(s, "eta");
  if (s.real() <= 0.0) throw DomainError("eta: re(s) must be positive");
  return alternating_sum([s](int n) { return detail::cplx_pow(n, -s); }, cfg,
                         std::abs(s.imag()));
}

EvalResult zeta(Cplx s, const EvalConfig& cfg) {
  require_finite(s, "zeta");
  if (s == Cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.real() <= 0.0) throw DomainError("zeta: re(s) must be positive");
  const Cplx den = 1.0 - detail::cplx_pow(2.0, 1.0 - s);
  const double ad = std::abs(den);
  // Denominator hazard: s near 1, or near the t = 2 pi k / ln 2 ladder on
  // sigma ~ 1 where 2^(1-s) returns to 1.
  if (ad < 0.1) return zeta_em(s, cfg);
  const EvalResult e = eta(s, cfg);
  const Cplx value = e.value / den;
  const double bound = e.abs_err_bound / ad +
                       4.0 * kEps * std::abs(value) * (1.0 + std::abs(den - 1.0) / ad);
  return {value, bound, e.terms_used};
}

EvalResult zeta_em(Cplx s, const EvalConfig& cfg) {
  require_finite(s, "zeta_em");
  if (s == Cplx(1.0, 0.0)) throw PoleError("zeta_em: pole at s = 1");
  if (s.real() <= -3.0) throw DomainError("zeta_em: supported region is re(s) > -3");
  const detail::EmParts p = detail::em_parts(s, 1.0, cfg);
  const Cplx pole = p.pole_num / (s - 1.0);
  const Cplx value = p.regular + pole;
  const double bound =
      p.abs_err_bound + 4.0 * kEps * (std::abs(value) + std::abs(pole));
  return {value, bound, p.terms_used};
}

Cplx sin_pi(Cplx z) {
  const double n = std::nearbyint(z.real());
  const double r = z.real() - n;
  const double y = z.imag();
  Cplx out(std::sin(kPi * r) * std::cosh(kPi * y), std::cos(kPi * r) * std::sinh(kPi * y));
  if (std::fmod(n, 2.0) != 0.0) out = -out;
  return out;
}

EvalResult gamma(Cplx s) {
  require_finite(s, "gamma");
  if (is_nonpositive_integer(s)) throw PoleError("gamma: pole at nonpositive integer");
  if (s.real() >= 0.5) {
    const Cplx value = lanczos_gamma(s);
    return {value, 5e-13 * std::abs(value), 15};
  }
  // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s)).
  const Cplx value = kPi / (sin_pi(s) * lanczos_gamma(1.0 - s));
  return {value, 2e-12 * std::abs(value), 15};
}

EvalResult log_gamma(Cplx s) {
  require_finite(s, "log_gamma");
  if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at nonpositive integer");
  if (s.real() >= 0.0) {
    const Cplx value = log_gamma_right(s);
    Cplx zs = s;
    while (std::abs(zs) < 12.0) zs += 1.0;
    const double bound = log_gamma_tail_bound(zs) + 8.0 * kEps * (std::abs(value) + 1.0);
    return {value, bound, 10};
  }
  // Branch follows the reflection recurrence here, not necessarily the
  // principal one; continuity along vertical lines is only promised for
  // re(s) > 0.
  const EvalResult rg = log_gamma(1.0 - s);
  const Cplx value = kLnPi - log_sin_pi(s) - rg.value;
  return {value, rg.abs_err_bound + 1e-13 * (1.0 + std::abs(value)), 10};
}

Cplx reciprocal_gamma(Cplx s) {
  require_finite(s, "reciprocal_gamma");
  if (s.real() >= 0.5) return 1.0 / lanczos_gamma(s);
  const Cplx sp = sin_pi(s);
  if (sp == Cplx(0.0, 0.0)) return 0.0;  // exact zero at nonpositive integers
  return sp / kPi * lanczos_gamma(1.0 - s);
}

EvalResult gamma_deriv_sigma(double sigma) {
  require_finite(sigma, "gamma_deriv_sigma");
  if (sigma <= 0.0 || sigma > 2.0)
    throw DomainError("gamma_deriv_sigma: sigma must lie in (0, 2]");
  const double x = 0.5 * sigma;
  // Series for the bracket -digamma(x) = 1/x + euler_gamma
  //   + sum_{n>=1} (1/(n+x) - 1/n); terms below 1e-14 are cut (capped at
  //   1e7 terms) and replaced by the midpoint integral tail, summing
  //   backward so rounding does not swamp the small terms.
  const double n_cut = std::ceil(std::sqrt(x * 1e14));
  const long n_max = static_cast<long>(std::min(n_cut, 1e7));
  double acc = -std::log1p(x / (static_cast<double>(n_max) + 0.5));
  for (long n = n_max; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    acc -= x / (nd * (nd + x));
  }
  const double bracket = 1.0 / x + MathConstants::euler_gamma + acc;
  const EvalResult ga = gamma(Cplx(x, 0.0));
  const double value = -0.5 * ga.value.real() * bracket;
  const double nm = static_cast<double>(n_max);
  const double series_err = x / (2.0 * nm * nm * nm) + 4.0 * kEps * (1.0 / x + 2.0);
  const double bound =
      0.5 * std::abs(ga.value.real()) * series_err + std::abs(value) * 1e-12;
  return {Cplx(value, 0.0), bound, static_cast<int>(std::min<long>(n_max, 1 << 30))};
}

EvalResult g_factor(Cplx s) {
  require_finite(s, "g_factor");
  const Cplx h = 0.5 * s;
  if (is_nonpositive_integer(h))
    throw PoleError("g_factor: gamma pole (s/2 is a nonpositive integer)");
  if (h.real() > 0.0) {
    const EvalResult lg = log_gamma(h);
    const Cplx expo = -h * kLnPi + lg.value;
    const Cplx value = std::exp(expo);
    const double bound =
        std::abs(value) * (lg.abs_err_bound + 4.0 * kEps * (std::abs(expo) + 1.0));
    return {value, bound, lg.terms_used};
  }
  const EvalResult ga = gamma(h);
  const Cplx pw = std::exp(-h * kLnPi);
  const Cplx value = pw * ga.value;
  const double bound = std::abs(pw) * ga.abs_err_bound +
                       std::abs(value) * 4.0 * kEps * (std::abs(h) * kLnPi + 1.0);
  return {value, bound, ga.terms_used};
}

double pi_pow_deriv_sigma(double sigma) {
  require_finite(sigma, "pi_pow_deriv_sigma");
  return -0.5 * kLnPi * std::exp(-0.5 * sigma * kLnPi);
}

EvalResult g_deriv_sigma(double sigma) {
  require_finite(sigma, "g_deriv_sigma");
  if (sigma <= 0.0 || sigma >= 1.0)
    throw DomainError("g_deriv_sigma: sigma must lie in (0, 1)");
  const EvalResult g = g_factor(Cplx(sigma, 0.0));
  const EvalResult dg = gamma_deriv_sigma(sigma);
  const double pipow = std::exp(-0.5 * sigma * kLnPi);
  const double value = -0.5 * kLnPi * g.value.real() + pipow * dg.value.real();
  const double bound = 0.5 * kLnPi * g.abs_err_bound + pipow * dg.abs_err_bound +
                       4.0 * kEps * std::abs(value);
  return {Cplx(value, 0.0), bound, dg.terms_used};
}

EvalResult zeta_deriv_sigma(double sigma, const EvalConfig& cfg) {
  require_finite(sigma, "zeta_deriv_sigma");
  if (sigma <= 0.0 || sigma >= 1.0)
    throw DomainError("zeta_deriv_sigma: sigma must lie in (0, 1)");
  // d/dsigma [eta/(1-2^(1-sigma))]: the eta series and its log-weighted
  // derivative series, both accelerated.
  const EvalResult e =
      alternating_sum([sigma](int n) { return Cplx(std::exp(-sigma * std::log(n)), 0.0); }, cfg);
  const EvalResult el = alternating_sum(
      [sigma](int n) {
        const double L = std::log(n);
        return Cplx(L * std::exp(-sigma * L), 0.0);
      },
      cfg);
  const double p = std::exp((1.0 - sigma) * kLn2);  // 2^(1-sigma)
  const double d = 1.0 - p;                         // in (-1, 0) on the strip
  const double value = -p * kLn2 / (d * d) * e.value.real() - el.value.real() / d;
  const double bound = p * kLn2 / (d * d) * e.abs_err_bound + el.abs_err_bound / std::abs(d) +
                       8.0 * kEps * std::abs(value) * (1.0 + p / std::abs(d));
  return {Cplx(value, 0.0), bound, e.terms_used + el.terms_used};
}

EvalResult zeta_by_reflection(Cplx s, const EvalConfig& cfg) {
  require_finite(s, "zeta_by_reflection");
  if (s.real() >= 0.5) throw DomainError("zeta_by_reflection: intended for re(s) < 1/2");
  if (s == Cplx(0.0, 0.0))
    throw DomainError("zeta_by_reflection: 0 * inf form at s = 0; use zeta_em");
  // zeta(s) = pi^(s-1/2) Gamma((1-s)/2) [1/Gamma(s/2)] zeta(1-s); the
  // reciprocal gamma is entire and vanishes exactly at the trivial zeros.
  const Cplx rg = reciprocal_gamma(0.5 * s);
  if (rg == Cplx(0.0, 0.0)) return {Cplx(0.0, 0.0), 0.0, 0};
  const EvalResult zr = zeta(1.0 - s, cfg);
  const EvalResult gr = gamma(0.5 * (1.0 - s));
  const Cplx value = detail::cplx_pow(kPi, s - 0.5) * gr.value * rg * zr.value;
  const double rel = zr.abs_err_bound / std::abs(zr.value) + gr.abs_err_bound / std::abs(gr.value) +
                     1e-12 * (1.0 + std::abs(s));
  return {value, std::abs(value) * rel + 1e-300, zr.terms_used};
}

}  // namespace zetalab
