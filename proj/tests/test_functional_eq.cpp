// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "zetalab/functional_eq.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/special.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace zetalab;

namespace {

// |zeta(0.3) - zeta(0.7)|, frozen from an independent multiprecision run.
constexpr double kAbsGap03 = -1.87382918829971206274;
constexpr double kFactorGap09_2i = -0.182733772340488233740;

}  // namespace

TEST_SUITE("functional_eq") {

TEST_CASE("completed zeta agrees on both sides at s = 2") {
  const Cplx s{2.0, 0.0};
  const Cplx lhs = g_factor(s).value * zeta(s, {}).value;
  const Cplx rhs = g_factor(1.0 - s).value * detail::zeta_any(1.0 - s, {}).value;
  CHECK(std::abs(lhs - rhs) < 1e-10);
  // Both sides equal pi/6 here: pi^{-1} * pi^2/6.
  CHECK(std::abs(lhs - Cplx(MathConstants::pi / 6.0, 0.0)) < 1e-12);
  CHECK(fe_residual(s, {}) < 1e-10);
}

TEST_CASE("fe_residual is small off the real axis") {
  CHECK(fe_residual(Cplx(0.5, 7.0), {}) < 1e-8);
  CHECK(fe_residual(Cplx(0.25, 3.0), {}) < 1e-9);
  CHECK(fe_residual(Cplx(0.75, 12.0), {}) < 1e-9);
}

TEST_CASE("fe_residual at the symmetry point is exactly zero") {
  // s and 1-s are the same number, so both sides run the same instructions.
  CHECK(fe_residual(Cplx(0.5, 0.0), {}) == 0.0);
}

TEST_CASE("fe_residual rejects poles of either side") {
  CHECK_THROWS_AS((void)fe_residual(Cplx(0.0, 0.0), {}), PoleError);
  CHECK_THROWS_AS((void)fe_residual(Cplx(1.0, 0.0), {}), PoleError);
  // At s = 3 the mirror factor hits Gamma(-1).
  CHECK_THROWS_AS((void)fe_residual(Cplx(3.0, 0.0), {}), PoleError);
  CHECK_THROWS_AS((void)fe_residual(Cplx(-2.0, 0.0), {}), PoleError);
}

TEST_CASE("fe_residual stays below 1e-9 across the strip sample") {
  SampleRng rng(314);
  for (int i = 0; i < 300; ++i) {
    const double sigma = rng.uniform(0.05, 0.95);
    const double t = rng.uniform(0.5, 50.0);
    const double r = fe_residual(Cplx(sigma, t), {});
    CAPTURE(sigma);
    CAPTURE(t);
    CHECK(r <= 1e-9);
  }
}

TEST_CASE("abs_gap matches the frozen reference at s = 0.3") {
  const double gap = abs_gap(Cplx(0.3, 0.0), {});
  CHECK(gap == doctest::Approx(kAbsGap03).epsilon(1e-13));
  // Companion facts: both values are negative there, so the plain
  // difference zeta(0.3) - zeta(0.7) is positive while the gap of
  // absolute values is negative.
  const double z03 = zeta(Cplx(0.3, 0.0), {}).value.real();
  const double z07 = zeta(Cplx(0.7, 0.0), {}).value.real();
  CHECK(z03 < 0.0);
  CHECK(z07 < 0.0);
  CHECK(z03 - z07 > 0.0);
  CHECK(gap == doctest::Approx(std::abs(z03) - std::abs(z07)).epsilon(1e-13));
}

TEST_CASE("abs_gap vanishes identically on the symmetry line") {
  // 1 - (0.5 + it) conjugates to the reflection of the same point, and
  // every evaluator path mirrors bit-for-bit under conjugation.
  CHECK(abs_gap(Cplx(0.5, 21.0), {}) == 0.0);
  CHECK(abs_gap(Cplx(0.5, 0.0), {}) == 0.0);
  SampleRng rng(2718);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(0.0, 100.0);
    CHECK(std::abs(abs_gap(Cplx(0.5, t), {})) <= 1e-9);
    CHECK(std::abs(factor_gap(Cplx(0.5, t), {})) <= 1e-9);
  }
}

TEST_CASE("abs_gap is antisymmetric under sigma -> 1 - sigma") {
  // Dyadic abscissas reflect exactly in binary floating point.
  for (int k = 1; k < 16; ++k) {
    const double sigma = k / 16.0;
    const Cplx s{sigma, 3.0};
    CHECK(abs_gap(s, {}) == -abs_gap(1.0 - s, {}));
  }
  SampleRng rng(55);
  for (int i = 0; i < 50; ++i) {
    const Cplx s{rng.uniform(0.05, 0.95), rng.uniform(0.5, 40.0)};
    CHECK(std::abs(abs_gap(s, {}) + abs_gap(1.0 - s, {})) < 1e-12);
  }
}

TEST_CASE("factor_gap fixed points") {
  CHECK(factor_gap(Cplx(0.5, 5.0), {}) == 0.0);
  // g is strictly decreasing on (0, 1), so the gap at 0.3 is positive.
  CHECK(factor_gap(Cplx(0.3, 0.0), {}) > 0.0);
  CHECK(factor_gap(Cplx(0.9, 2.0), {}) ==
        doctest::Approx(kFactorGap09_2i).epsilon(1e-12));
}

TEST_CASE("gap fields are consistent with the functional equation") {
  // |g(s) zeta(s)| == |g(1-s) zeta(1-s)| up to evaluation error, which
  // ties the sign of abs_gap to the sign of -factor_gap off the line.
  SampleRng rng(919);
  for (int i = 0; i < 100; ++i) {
    const Cplx s{rng.uniform(0.05, 0.95), rng.uniform(0.5, 40.0)};
    const double lhs =
        std::abs(g_factor(s).value) * std::abs(detail::zeta_any(s, {}).value);
    const double rhs = std::abs(g_factor(1.0 - s).value) *
                       std::abs(detail::zeta_any(1.0 - s, {}).value);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(lhs, rhs));
  }
}

TEST_CASE("locus_scan handles the degenerate 2x2 grid") {
  const StripRect rect{0.2, 0.8, 3.0, 4.0};
  const GridScan scan = locus_scan(rect, 2, 2, GapField::AbsGap, 1, {});
  CHECK(scan.n_sigma == 2);
  CHECK(scan.n_t == 2);
  CHECK(scan.warnings == 0);
  CHECK(scan.values.size() == 4);
  CHECK(scan.sigma_at(0) == 0.2);
  CHECK(scan.sigma_at(1) == 0.8);
  CHECK(scan.t_at(0) == 3.0);
  CHECK(scan.t_at(1) == 4.0);
  CHECK(scan.at(0, 0) == abs_gap(Cplx(0.2, 3.0), {}));
  CHECK(scan.at(1, 1) == abs_gap(Cplx(0.8, 4.0), {}));
}

TEST_CASE("locus_scan validates its inputs") {
  const StripRect rect{0.2, 0.8, 3.0, 4.0};
  CHECK_THROWS_AS((void)locus_scan(rect, 1, 2, GapField::AbsGap, 1, {}),
                  DomainError);
  CHECK_THROWS_AS((void)locus_scan(rect, 2, 1, GapField::AbsGap, 1, {}),
                  DomainError);
  CHECK_THROWS_AS(
      (void)locus_scan({0.2, 0.8, 0.0, 4.0}, 2, 2, GapField::AbsGap, 1, {}),
      DomainError);
  CHECK_THROWS_AS(
      (void)locus_scan({0.8, 0.2, 3.0, 4.0}, 2, 2, GapField::AbsGap, 1, {}),
      DomainError);
  CHECK_THROWS_AS(
      (void)locus_scan({0.0, 0.8, 3.0, 4.0}, 2, 2, GapField::AbsGap, 1, {}),
      DomainError);
}

TEST_CASE("scan grids reflect exactly on dyadic nodes") {
  // Nodes 0.25, 0.375, 0.5, 0.625, 0.75: each 1 - sigma_j equals
  // sigma_{n-1-j} exactly, so antisymmetry holds bit-for-bit.
  const StripRect rect{0.25, 0.75, 2.0, 3.0};
  for (const GapField field : {GapField::AbsGap, GapField::FactorGap}) {
    const GridScan scan = locus_scan(rect, 5, 3, field, 1, {});
    for (int ti = 0; ti < scan.n_t; ++ti)
      for (int j = 0; j < scan.n_sigma; ++j)
        CHECK(scan.at(ti, j) == -scan.at(ti, scan.n_sigma - 1 - j));
  }
}

TEST_CASE("cells that fail to evaluate become NaN and are counted") {
  // A term budget below the series' starting length (16 direct + 32
  // acceleration terms) makes every cell fail on its first evaluation.
  EvalConfig tiny;
  tiny.max_terms = 40;
  const StripRect rect{0.3, 0.7, 60.0, 61.0};
  const GridScan scan = locus_scan(rect, 2, 2, GapField::AbsGap, 1, tiny);
  CHECK(scan.warnings == 4);
  for (int ti = 0; ti < 2; ++ti)
    for (int j = 0; j < 2; ++j) CHECK(std::isnan(scan.at(ti, j)));
  CHECK(row_sign_changes(scan, 0).empty());
  CHECK(row_sign_changes(scan, 1).empty());
}

TEST_CASE("each scan row crosses zero exactly once, at the center") {
  const GridScan scan =
      locus_scan({0.05, 0.95, 2.0, 3.0}, 91, 3, GapField::AbsGap, 1, {});
  for (int ti = 0; ti < scan.n_t; ++ti) {
    const auto brackets = row_sign_changes(scan, ti);
    REQUIRE(brackets.size() == 1);
    // The center grid node rounds to 0.5 - ulp/2, so containment is
    // asserted up to representation error (far below the grid step).
    CHECK(brackets[0].first <= 0.5 + 1e-12);
    CHECK(brackets[0].second >= 0.5 - 1e-12);
    CHECK(brackets[0].second - brackets[0].first < 0.02 + 1e-12);
  }
}

TEST_CASE("a grid node sitting on the zero line yields a point bracket") {
  // sigma nodes 0.25, 0.375, 0.5, 0.625, 0.75 -- the middle one lands on
  // 0.5 exactly, where the field evaluates to exactly 0.0.
  const GridScan scan =
      locus_scan({0.25, 0.75, 2.0, 2.5}, 5, 2, GapField::AbsGap, 1, {});
  for (int ti = 0; ti < scan.n_t; ++ti) {
    const auto brackets = row_sign_changes(scan, ti);
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].first == 0.5);
    CHECK(brackets[0].second == 0.5);
  }
}

TEST_CASE("scan output is independent of the worker count") {
  const StripRect rect{0.1, 0.9, 2.0, 8.0};
  const GridScan a = locus_scan(rect, 7, 5, GapField::FactorGap, 1, {});
  const GridScan b = locus_scan(rect, 7, 5, GapField::FactorGap, 4, {});
  REQUIRE(a.values.size() == b.values.size());
  for (size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
  CHECK(a.warnings == b.warnings);
}

}  // TEST_SUITE
