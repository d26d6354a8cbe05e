// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zetalab/core.hpp"

namespace zetalab {

// Alternating series sum_{n>=1} (-1)^(n-1) n^(-s), continued to re(s) > 0 by
// binomial-weighted (Euler) acceleration of the tail.  DomainError for
// re(s) <= 0.
EvalResult eta(Cplx s, const EvalConfig& cfg = {});

// zeta(s) = eta(s) / (1 - 2^(1-s)) on re(s) > 0.  PoleError at s = 1.  Near
// the zeros of the denominator (|1 - 2^(1-s)| < 0.1, i.e. around s = 1 and
// the ladder t = 2*pi*k/ln 2 on sigma ~ 1) the quotient form is ill-
// conditioned and the call delegates to zeta_em.
EvalResult zeta(Cplx s, const EvalConfig& cfg = {});

// Euler-Maclaurin evaluation of zeta, independent of the eta route.
// Supported region re(s) > -3 (the correction order is sized for it);
// PoleError at s = 1.
EvalResult zeta_em(Cplx s, const EvalConfig& cfg = {});

// Lanczos gamma (g = 607/128, 15 coefficients), reflection for re(s) < 1/2.
// PoleError at nonpositive integers.
EvalResult gamma(Cplx s);

// Principal-branch log gamma via integer-shifted Stirling series; continuous
// along vertical lines in re(s) > 0.  PoleError at nonpositive integers.
EvalResult log_gamma(Cplx s);

// Entire reciprocal 1/gamma(s); exactly zero at nonpositive integers.
Cplx reciprocal_gamma(Cplx s);

// sin(pi z) with exact zeros at integer z (argument reduced before the
// libm call, so no pi-rounding residue survives).
Cplx sin_pi(Cplx z);

// d/dsigma Gamma(sigma/2) on 0 < sigma <= 2, computed as
//   -(1/2) Gamma(sigma/2) [ 2/sigma + euler_gamma
//                           + sum_{n>=1} (1/(n+sigma/2) - 1/n) ],
// the bracket being -digamma(sigma/2) written as its limit-free series.
EvalResult gamma_deriv_sigma(double sigma);

// g(s) = pi^(-s/2) Gamma(s/2).  PoleError where s/2 is a nonpositive
// integer.
EvalResult g_factor(Cplx s);

// d/dsigma g(sigma) on 0 < sigma < 1 (analytic, not finite-difference).
EvalResult g_deriv_sigma(double sigma);

// d/dsigma pi^(-sigma/2), closed form.
double pi_pow_deriv_sigma(double sigma);

// d/dsigma zeta(sigma) on 0 < sigma < 1 via the differentiated eta
// quotient: two accelerated alternating series (the eta series and its
// log-weighted derivative series).
EvalResult zeta_deriv_sigma(double sigma, const EvalConfig& cfg = {});

// zeta(s) for re(s) < 1/2 through the reflection formula
//   zeta(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2) * zeta(1-s),
// with 1/Gamma(s/2) evaluated as the entire reciprocal so the trivial
// zeros come out exactly.
EvalResult zeta_by_reflection(Cplx s, const EvalConfig& cfg = {});

namespace detail {

// Shared Euler-Maclaurin core for zeta(s, a), a in (0, 1].  The value is
// regular + pole_num / (s - 1); keeping the pole numerator separate lets
// callers fold in a (s - 1) factor analytically instead of dividing by a
// vanishing denominator.
struct EmParts {
  Cplx regular;   // truncated sum + w^(-s)/2 + Bernoulli corrections
  Cplx pole_num;  // w^(1-s)
  double w;       // boundary point N + a
  double abs_err_bound;
  int terms_used;
};

EmParts em_parts(Cplx s, double a, const EvalConfig& cfg);

// exp(-s ln n) for positive real n: cheaper and conjugate-exact next to
// std::pow on complex arguments.
Cplx cplx_pow(double base, Cplx exponent);

// Route chooser: eta-based zeta on re(s) > 0 (that path already delegates
// around its denominator hazard), Euler-Maclaurin on -3 < re(s) <= 0.
EvalResult zeta_any(Cplx s, const EvalConfig& cfg);

}  // namespace detail

}  // namespace zetalab
