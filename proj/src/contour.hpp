// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "zetalab/core.hpp"
#include "zetalab/functional_eq.hpp"

// Shared machinery for the argument-principle walkers and the damped-Newton
// zero refiner.  `scale` is the local gamma/pole envelope of the integrand;
// dividing it out makes the too-close-to-zero guard and the convergence
// test t-independent (|Lambda|-type functions decay like e^(-pi t/4), so a
// raw magnitude threshold would trip everywhere above t ~ 40).

namespace zetalab::internal {

struct ScaledVal {
  Cplx value;
  double scale;
};

using ContourFn = std::function<ScaledVal(Cplx)>;

// Winding number of f around the rect boundary, counterclockwise.  Phase
// steps are split until each |delta arg| < pi/2.  Throws ContourTooClose
// when the normalized modulus drops under 1e-12 or a step cannot be
// resolved; RoundingDefect when the phase total strays from an integer
// winding by 0.25 or more.
int winding_count(const ContourFn& f, const StripRect& rect);

struct RefineOut {
  Cplx s;
  int iters;
};

// Damped Newton iteration on f with a central finite-difference derivative;
// stops when the normalized gradient 2 |f| |f'| / scale^2 of |f|^2 falls
// under 1e-12, the step collapses, or 50 iterations pass.
RefineOut refine_newton(const std::function<Cplx(Cplx)>& f, double scale, Cplx start);

}  // namespace zetalab::internal
