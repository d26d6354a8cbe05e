// SPDX-License-Identifier: Apache-2.0
#include "zetalab/core.hpp"

#include <cmath>

namespace zetalab {

void EvalConfig::validate() const {
  if (!(target_abs_err >= std::ldexp(1.0, -48)))
    throw DomainError("EvalConfig: target_abs_err must be >= 2^-48 (and not NaN)");
  if (accel_order < 2 || accel_order > 256)
    throw DomainError("EvalConfig: accel_order out of range [2, 256]");
  if (max_terms < accel_order)
    throw DomainError("EvalConfig: max_terms must be >= accel_order");
}

void require_finite(Cplx s, const char* where) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError(std::string(where) + ": non-finite argument");
}

void require_finite(double x, const char* where) {
  if (!std::isfinite(x))
    throw DomainError(std::string(where) + ": non-finite argument");
}

}  // namespace zetalab
