// SPDX-License-Identifier: Apache-2.0
//
// Dirichlet characters are stored as exact root-of-unity exponents over the
// cyclic decomposition of (Z/q)*; floats appear only when a value is
// materialized.  L-functions ride on the shared Euler-Maclaurin core via
//   L(s, chi) = q^(-s) sum_{a=1..q} chi(a) zeta(s, a/q).

#include "zetalab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "contour.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zero_finder.hpp"

namespace zetalab {

namespace {

constexpr double kPi = MathConstants::pi;
constexpr double kLnPi = MathConstants::ln_pi;

// (e^z - 1)/z, accurate for small |z|; 1 at z = 0.
Cplx expm1_ratio(Cplx z) {
  if (std::abs(z) < 1e-150) return 1.0;
  const double em = std::expm1(z.real());
  const double sh = std::sin(0.5 * z.imag());
  const Cplx num{em * std::cos(z.imag()) - 2.0 * sh * sh,
                 (em + 1.0) * std::sin(z.imag())};
  return num / z;
}

long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

int multiplicative_order(int g, int m, int group_order) {
  // order divides group_order; scan its divisors ascending
  for (int d = 1; d <= group_order; ++d) {
    if (group_order % d != 0) continue;
    if (pow_mod(g, d, m) == 1) return d;
  }
  return 0;
}

struct CyclicFactor {
  int prime_power;        // p^e this factor lives in
  int order;              // size of the cyclic piece
  std::vector<int> dlog;  // discrete log base the generator; -1 off the orbit
};

// Cyclic pieces of (Z/p^e)*: odd p gives one piece on a primitive root;
// 2^e gives {1}, {+-1}, or {+-1} x <5>.
void factor_pieces(int p, int e, std::vector<CyclicFactor>& out) {
  int pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  if (p == 2) {
    if (e == 1) return;  // trivial group
    if (e == 2) {
      CyclicFactor f{pe, 2, std::vector<int>(static_cast<size_t>(pe), -1)};
      f.dlog[1] = 0;
      f.dlog[3] = 1;
      out.push_back(std::move(f));
      return;
    }
    // {+-1} piece then the <5> piece, both indexed mod 2^e
    CyclicFactor sgn{pe, 2, std::vector<int>(static_cast<size_t>(pe), -1)};
    CyclicFactor five{pe, pe / 4, std::vector<int>(static_cast<size_t>(pe), -1)};
    long long v = 1;
    for (int j = 0; j < pe / 4; ++j) {
      sgn.dlog[static_cast<size_t>(v)] = 0;
      five.dlog[static_cast<size_t>(v)] = j;
      const long long neg = pe - v;
      sgn.dlog[static_cast<size_t>(neg)] = 1;
      five.dlog[static_cast<size_t>(neg)] = j;
      v = v * 5 % pe;
    }
    out.push_back(std::move(sgn));
    out.push_back(std::move(five));
    return;
  }
  const int group_order = pe / p * (p - 1);
  int g = 0;
  for (int cand = 2; cand < pe; ++cand) {
    if (std::gcd(cand, pe) != 1) continue;
    if (multiplicative_order(cand, pe, group_order) == group_order) {
      g = cand;
      break;
    }
  }
  CyclicFactor f{pe, group_order, std::vector<int>(static_cast<size_t>(pe), -1)};
  long long v = 1;
  for (int j = 0; j < group_order; ++j) {
    f.dlog[static_cast<size_t>(v)] = j;
    v = v * g % pe;
  }
  out.push_back(std::move(f));
}

std::vector<CyclicFactor> group_structure(int q) {
  std::vector<CyclicFactor> pieces;
  int rest = q;
  for (int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factor_pieces(p, e, pieces);
  }
  return pieces;
}

int conductor_of(const DirichletCharacter& chi) {
  const int q = chi.modulus;
  for (int f = 1; f <= q; ++f) {
    if (q % f != 0) continue;
    bool trivial_on_kernel = true;
    for (int a = 1; a <= q && trivial_on_kernel; ++a) {
      if (std::gcd(a, q) != 1) continue;
      if (a % f == 1 % f && chi.exponent[static_cast<size_t>(a % q)] != 0)
        trivial_on_kernel = false;
    }
    if (trivial_on_kernel) return f;
  }
  return q;
}

}  // namespace

bool DirichletCharacter::is_principal() const {
  for (int e : exponent)
    if (e > 0) return false;
  return true;
}

Cplx DirichletCharacter::value(long long a) const {
  long long r = a % modulus;
  if (r < 0) r += modulus;
  const int e = exponent[static_cast<size_t>(r)];
  if (e < 0) return 0.0;
  // Exact values on the axes keep real characters exactly real.
  const int d = order_denom;
  if (e == 0) return {1.0, 0.0};
  if (2 * e == d) return {-1.0, 0.0};
  if (4 * e == d) return {0.0, 1.0};
  if (4 * e == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * kPi * e / d);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  DirichletCharacter out = *this;
  for (int& e : out.exponent)
    if (e > 0) e = order_denom - e;
  return out;
}

std::vector<DirichletCharacter> characters(int q) {
  if (q < 1 || q > 100) throw DomainError("characters: modulus must lie in [1, 100]");
  const std::vector<CyclicFactor> pieces = group_structure(q);
  int denom = 1;
  int count = 1;
  for (const CyclicFactor& f : pieces) {
    denom = std::lcm(denom, f.order);
    count *= f.order;
  }

  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> k(pieces.size(), 0);  // mixed-radix tuple, first factor fastest
  for (int index = 0; index < count; ++index) {
    DirichletCharacter chi;
    chi.modulus = q;
    chi.index = index;
    chi.order_denom = denom;
    chi.exponent.assign(static_cast<size_t>(q), -1);
    for (int a = 0; a < q; ++a) {
      if (std::gcd(a == 0 ? q : a, q) != 1) continue;  // a=0 only coprime when q=1
      long long e = 0;
      for (size_t j = 0; j < pieces.size(); ++j) {
        const CyclicFactor& f = pieces[j];
        const int l = f.dlog[static_cast<size_t>(a % f.prime_power)];
        e += static_cast<long long>(k[j]) * l % f.order * (denom / f.order);
      }
      chi.exponent[static_cast<size_t>(a)] = static_cast<int>(e % denom);
    }
    if (q <= 2) {
      chi.parity = Parity::Even;
    } else {
      chi.parity =
          chi.exponent[static_cast<size_t>(q - 1)] == 0 ? Parity::Even : Parity::Odd;
    }
    chi.conductor = conductor_of(chi);
    chi.primitive = (chi.conductor == q);
    out.push_back(std::move(chi));

    for (size_t j = 0; j < pieces.size(); ++j) {  // increment mixed radix
      if (++k[j] < pieces[j].order) break;
      k[j] = 0;
    }
  }
  return out;
}

EvalResult hurwitz_zeta(Cplx s, double a, const EvalConfig& cfg) {
  require_finite(s, "hurwitz_zeta");
  require_finite(a, "hurwitz_zeta");
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (s == Cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (s.real() <= -1.0) throw DomainError("hurwitz_zeta: supported region is re(s) > -1");
  const detail::EmParts p = detail::em_parts(s, a, cfg);
  const Cplx pole = p.pole_num / (s - 1.0);
  const Cplx value = p.regular + pole;
  return {value, p.abs_err_bound + 4e-16 * (std::abs(value) + std::abs(pole)),
          p.terms_used};
}

EvalResult l_function(Cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  require_finite(s, "l_function");
  const int q = chi.modulus;
  const bool principal = chi.is_principal();
  if (principal && s == Cplx(1.0, 0.0))
    throw PoleError("l_function: pole at s = 1 for the principal character");
  if (s.real() <= -1.0) throw DomainError("l_function: supported region is re(s) > -1");

  const Cplx qs = detail::cplx_pow(q, -s);
  Cplx acc = 0.0;
  double bound = 0.0;
  int terms = 0;

  if (!principal && std::abs(s - 1.0) < 0.05) {
    // Hurwitz poles cancel under sum chi(a) = 0: the pole pieces combine to
    //   sum_a chi(a) (w_a^(1-s) - 1) / (s - 1)
    //     = sum_a chi(a) (-ln w_a) phi((1-s) ln w_a),  phi(z) = (e^z - 1)/z,
    // which is regular at s = 1 and free of the 1/(s-1) cancellation.
    Cplx reg = 0.0, pole = 0.0;
    for (int a = 1; a <= q; ++a) {
      const Cplx c = chi.value(a);
      if (c == Cplx(0.0, 0.0)) continue;
      const detail::EmParts p = detail::em_parts(s, static_cast<double>(a) / q, cfg);
      reg += c * p.regular;
      bound += p.abs_err_bound;
      terms += p.terms_used;
      const double lw = std::log(p.w);
      pole += c * (-lw) * expm1_ratio((1.0 - s) * lw);
      bound += 4e-16 * std::abs(lw);
    }
    acc = reg + pole;
  } else {
    for (int a = 1; a <= q; ++a) {
      const Cplx c = chi.value(a);
      if (c == Cplx(0.0, 0.0)) continue;
      const EvalResult h = hurwitz_zeta(s, static_cast<double>(a) / q, cfg);
      acc += c * h.value;
      bound += h.abs_err_bound;
      terms += h.terms_used;
    }
  }
  const Cplx value = qs * acc;
  return {value, std::abs(qs) * bound + 4e-16 * std::abs(value), terms};
}

Cplx gauss_sum(const DirichletCharacter& chi) {
  const int q = chi.modulus;
  Cplx acc = 0.0;
  for (int m = 1; m <= q; ++m)
    acc += chi.value(m) * std::polar(1.0, 2.0 * kPi * m / q);
  return acc;
}

Cplx root_number(const DirichletCharacter& chi) {
  const Cplx tau = gauss_sum(chi);
  const Cplx ia = (chi.parity == Parity::Odd) ? Cplx(0.0, 1.0) : Cplx(1.0, 0.0);
  return tau / (ia * std::sqrt(static_cast<double>(chi.modulus)));
}

EvalResult l_completed(Cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  require_finite(s, "l_completed");
  const int q = chi.modulus;
  if (q == 1 && (s == Cplx(0.0, 0.0) || s == Cplx(1.0, 0.0)))
    throw PoleError("l_completed: pole at s in {0, 1} for modulus 1");
  const double a = (chi.parity == Parity::Odd) ? 1.0 : 0.0;
  const Cplx h = 0.5 * (s + a);
  const EvalResult L = l_function(s, chi, cfg);
  Cplx factor;
  double factor_rel;
  if (h.real() > 0.0) {
    const EvalResult lg = log_gamma(h);
    const Cplx expo = h * (std::log(static_cast<double>(q)) - kLnPi) + lg.value;
    factor = std::exp(expo);
    factor_rel = lg.abs_err_bound + 4e-16 * (std::abs(expo) + 1.0);
  } else {
    const EvalResult ga = gamma(h);
    factor = std::exp(h * (std::log(static_cast<double>(q)) - kLnPi)) * ga.value;
    factor_rel = ga.abs_err_bound / std::abs(ga.value) + 4e-16;
  }
  const Cplx value = factor * L.value;
  const double bound = std::abs(factor) * L.abs_err_bound + std::abs(value) * factor_rel;
  return {value, bound, L.terms_used};
}

double l_fe_residual(Cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  if (!chi.primitive)
    throw NotPrimitive("l_fe_residual: the reflection identity needs a primitive character");
  require_finite(s, "l_fe_residual");
  const EvalResult lhs = l_completed(s, chi, cfg);
  const EvalResult rhs = l_completed(1.0 - s, chi.conjugate(), cfg);
  const Cplx r = root_number(chi) * rhs.value;
  const double denom = std::max({std::abs(lhs.value), std::abs(r), 1e-300});
  return std::abs(lhs.value - r) / denom;
}

namespace {

// Envelope |(q/pi)^((s+a)/2) Gamma((s+a)/2)|: the zero-free scale that
// normalizes contour guards and Newton convergence tests.  Only reached for
// non-principal chi (q = 1 scans are delegated), so Lambda is entire here.
double lambda_scale(Cplx s, const DirichletCharacter& chi) {
  const double a = (chi.parity == Parity::Odd) ? 1.0 : 0.0;
  const Cplx h = 0.5 * (s + a);
  if (h.real() > 0.0) {
    const Cplx expo = h * (std::log(static_cast<double>(chi.modulus)) - kLnPi);
    return std::abs(std::exp(expo + log_gamma(h).value));
  }
  return std::abs(std::exp(h * (std::log(static_cast<double>(chi.modulus)) - kLnPi)) *
                  gamma(h).value);
}

}  // namespace

std::vector<LZeroRecord> find_l_zeros(const DirichletCharacter& chi, double t_min,
                                      double t_max, double step, int n_workers,
                                      const EvalConfig& cfg) {
  if (!chi.primitive)
    throw NotPrimitive("find_l_zeros: zero scan is defined for primitive characters");
  require_finite(t_min, "find_l_zeros");
  require_finite(t_max, "find_l_zeros");
  require_finite(step, "find_l_zeros");
  if (!(t_min >= 0.0 && t_min < t_max) || !(step > 0.0))
    throw DomainError("find_l_zeros: need 0 <= t_min < t_max and step > 0");

  if (chi.modulus == 1) {
    // The trivial character's completed L is the zeta case; reuse its scan.
    std::vector<LZeroRecord> out;
    for (const ZeroRecord& z : find_zeros(t_min, t_max, step, n_workers, cfg))
      out.push_back({z.t, z.sigma, z.abs_zeta, z.refine_iters, 1, 0});
    return out;
  }

  const double rot = -0.5 * std::arg(root_number(chi));
  const Cplx phase = std::polar(1.0, rot);
  auto z_line = [&](double t) {
    return (phase * l_completed(Cplx(0.5, t), chi, cfg).value).real();
  };

  std::vector<double> ts;
  const int nsteps = static_cast<int>(std::floor((t_max - t_min) / step + 1e-9));
  ts.reserve(static_cast<size_t>(nsteps) + 2);
  for (int k = 0; k <= nsteps; ++k) ts.push_back(t_min + k * step);
  if (ts.back() < t_max - 1e-12 * std::max(1.0, t_max)) ts.push_back(t_max);
  const int n = static_cast<int>(ts.size());

  std::vector<double> zv(static_cast<size_t>(n));
  parallel_for(n, n_workers, [&](int k) { zv[static_cast<size_t>(k)] = z_line(ts[static_cast<size_t>(k)]); });

  std::vector<LZeroRecord> out;
  for (int k = 0; k + 1 < n; ++k) {
    double t0;
    int evals = 0;
    if (zv[static_cast<size_t>(k)] == 0.0) {
      t0 = ts[static_cast<size_t>(k)];
    } else if (zv[static_cast<size_t>(k)] * zv[static_cast<size_t>(k) + 1] < 0.0) {
      double a = ts[static_cast<size_t>(k)], b = ts[static_cast<size_t>(k) + 1];
      double fa = zv[static_cast<size_t>(k)];
      t0 = 0.5 * (a + b);
      for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = z_line(m);
        ++evals;
        t0 = m;
        if (std::abs(fm) < 1e-10) break;
        if (fa * fm < 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
    } else {
      continue;
    }
    const Cplx start(0.5 + 0.01, t0);
    const double scale = lambda_scale(start, chi);
    const internal::RefineOut r = internal::refine_newton(
        [&](Cplx s) { return l_completed(s, chi, cfg).value; }, scale, start);
    const double abs_l = std::abs(l_function(r.s, chi, cfg).value);
    if (!(r.s.real() > 0.0 && r.s.real() < 1.0) || !(abs_l <= 1e-8))
      throw NonConvergence("find_l_zeros: refinement missed the certification thresholds");
    out.push_back({r.s.imag(), r.s.real(), abs_l, r.iters + evals, chi.modulus, chi.index});
  }

  const internal::ContourFn f = [&](Cplx s) {
    return internal::ScaledVal{l_completed(s, chi, cfg).value, lambda_scale(s, chi)};
  };
  const int wind = internal::winding_count(f, {0.01, 0.99, t_min, t_max});
  if (wind > static_cast<int>(out.size()))
    throw StepTooCoarse("find_l_zeros: winding count exceeds the sign-change count; reduce step");
  if (wind < static_cast<int>(out.size()))
    throw RoundingDefect("find_l_zeros: winding count below the refined zero count");
  return out;
}

}  // namespace zetalab
