// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetalab {

using Cplx = std::complex<double>;

// Double-precision anchors shared by every evaluator.  Each value is pinned
// to more digits than binary64 can hold and is cross-checked in the test
// suite against its defining series / logarithm.
struct MathConstants {
  static constexpr double pi = 3.14159265358979323846264338328;
  static constexpr double euler_gamma = 0.57721566490153286060651209008;
  static constexpr double ln_2 = 0.69314718055994530941723212146;
  static constexpr double ln_pi = 1.14472988584940017414342735135;
};

// Accuracy/effort knobs for the series evaluators.  target_abs_err below
// ~2^-48 is unreachable in binary64 once argument reduction noise is
// accounted for, so validate() rejects it.
struct EvalConfig {
  double target_abs_err = 1e-12;
  int max_terms = 400000;
  int accel_order = 32;

  void validate() const;
};

struct EvalResult {
  Cplx value;
  double abs_err_bound;  // truncation bound plus roundoff guard
  int terms_used;
};

// Error taxonomy.  Everything derives from EvalError so callers that only
// care about "this point could not be evaluated" can catch one type.
struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : EvalError {
  explicit DomainError(const std::string& what) : EvalError(what) {}
};

struct PoleError : EvalError {
  explicit PoleError(const std::string& what) : EvalError(what) {}
};

struct NonConvergence : EvalError {
  explicit NonConvergence(const std::string& what) : EvalError(what) {}
};

struct BracketError : EvalError {
  explicit BracketError(const std::string& what) : EvalError(what) {}
};

struct ContourTooClose : EvalError {
  explicit ContourTooClose(const std::string& what) : EvalError(what) {}
};

struct RoundingDefect : EvalError {
  explicit RoundingDefect(const std::string& what) : EvalError(what) {}
};

struct StepTooCoarse : EvalError {
  explicit StepTooCoarse(const std::string& what) : EvalError(what) {}
};

struct NotPrimitive : EvalError {
  explicit NotPrimitive(const std::string& what) : EvalError(what) {}
};

// No NaN/Inf is admitted into any evaluator; a poisoned input would
// otherwise propagate silently through the error bounds.
void require_finite(Cplx s, const char* where);
void require_finite(double x, const char* where);

}  // namespace zetalab
