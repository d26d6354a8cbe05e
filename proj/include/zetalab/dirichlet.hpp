// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "zetalab/core.hpp"

namespace zetalab {

enum class Parity { Even, Odd };

// Dirichlet character mod q, stored exactly: value at a is the root of
// unity e^(2 pi i exponent[a] / order_denom) when gcd(a, q) = 1 and 0
// otherwise (exponent[a] = -1 marks those).  Keeping exponents instead of
// floats makes conjugation and the orthogonality checks exact integer
// arithmetic; floats only appear when a value is materialized.
struct DirichletCharacter {
  int modulus = 1;
  int index = 0;            // position in characters(q); 0 is principal
  int order_denom = 1;      // common denominator (exponent of (Z/q)*)
  std::vector<int> exponent;  // size q, indexed by residue
  Parity parity = Parity::Even;
  int conductor = 1;
  bool primitive = true;

  bool is_principal() const;
  Cplx value(long long a) const;
  DirichletCharacter conjugate() const;
};

// All phi(q) characters mod q in a fixed deterministic order (CRT factor
// exponents in mixed radix; index 0 principal).  DomainError for q < 1 or
// q > 100.
std::vector<DirichletCharacter> characters(int q);

// Hurwitz zeta(s, a) for a in (0, 1], re(s) > -1, by the same
// Euler-Maclaurin core as zeta_em.  PoleError at s = 1.
EvalResult hurwitz_zeta(Cplx s, double a, const EvalConfig& cfg = {});

// L(s, chi) = q^(-s) sum_{a=1..q} chi(a) zeta(s, a/q).  PoleError at s = 1
// for principal chi; for non-principal chi the Hurwitz poles cancel and
// s = 1 is evaluated by its analytic limit.
EvalResult l_function(Cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

// Gauss sum tau(chi) = sum_m chi(m) e^(2 pi i m / q).
Cplx gauss_sum(const DirichletCharacter& chi);

// Root number epsilon(chi) = tau(chi) / (i^a sqrt(q)), a = 0 (even) or 1
// (odd); |epsilon| = 1 for primitive chi.
Cplx root_number(const DirichletCharacter& chi);

// Completed L:  Lambda(s, chi) = (q/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi).
EvalResult l_completed(Cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

// Relative mismatch of Lambda(s, chi) = epsilon(chi) Lambda(1-s, conj chi).
// NotPrimitive for imprimitive chi; PoleError on the q = 1 pole set {0, 1}.
double l_fe_residual(Cplx s, const DirichletCharacter& chi, const EvalConfig& cfg = {});

struct LZeroRecord {
  double t;
  double sigma;
  double abs_l;       // |L(sigma + it, chi)| at the refined point
  int refine_iters;
  int modulus;
  int char_index;
};

// Critical-line zero scan for a primitive chi: sign changes of the rotated
// real form e^(-i arg(eps)/2) Lambda(1/2 + it), bisection, then damped
// Newton on Lambda in the full plane; winding cross-check over
// (0.01, 0.99) x (t_min, t_max) as in find_zeros.
std::vector<LZeroRecord> find_l_zeros(const DirichletCharacter& chi, double t_min,
                                      double t_max, double step, int n_workers = 1,
                                      const EvalConfig& cfg = {});

}  // namespace zetalab
