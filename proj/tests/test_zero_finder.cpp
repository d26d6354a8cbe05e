// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "oracles.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/special.hpp"
#include "zetalab/zero_finder.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace zetalab;

namespace {

constexpr double kXi05 = 0.49712077818831410991;
constexpr double kTheta20 = 1.1868948084444840448;
constexpr double kRho1 = 14.134725141734693790;
constexpr double kRho2 = 21.022039638771554993;
constexpr double kRho3 = 25.010857580145688763;

}  // namespace

TEST_SUITE("zero_finder") {

TEST_CASE("xi fixed values") {
  const auto at_half = xi(Cplx(0.5, 0.0), {});
  CHECK(at_half.value.real() == doctest::Approx(kXi05).epsilon(1e-13));
  CHECK(at_half.value.imag() == 0.0);

  // The pole of zeta and the zero of (s-1) cancel in closed form at the
  // strip edges: xi(0) = xi(1) = 1/2.
  CHECK(std::abs(xi(Cplx(0.0, 0.0), {}).value - Cplx(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(xi(Cplx(1.0, 0.0), {}).value - Cplx(0.5, 0.0)) < 1e-12);
}

TEST_CASE("xi respects the reflection symmetry") {
  const Cplx a = xi(Cplx(0.3, 8.0), {}).value;
  const Cplx b = xi(Cplx(0.7, -8.0), {}).value;
  CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));

  // Far left of the strip the evaluation reflects to the right half
  // plane; s = -2 in particular must not trip over Gamma(s/2 + 1).
  const Cplx left = xi(Cplx(-2.0, 0.0), {}).value;
  const Cplx right = xi(Cplx(3.0, 0.0), {}).value;
  CHECK(std::abs(left - right) <= 1e-12 * std::abs(right));

  const Cplx l2 = xi(Cplx(-6.0, 2.0), {}).value;
  const Cplx r2 = xi(Cplx(7.0, -2.0), {}).value;
  CHECK(std::abs(l2 - r2) <= 1e-9 * std::max(1.0, std::abs(r2)));
}

TEST_CASE("xi vanishes at the first zero ordinate") {
  const auto r = xi(Cplx(0.5, kRho1), {});
  // The envelope decays like exp(-pi t / 4); compare against the local
  // scale rather than an absolute threshold.
  CHECK(std::abs(r.value) <
        1e-8 * std::max(std::abs(g_factor(Cplx(0.5, kRho1)).value), 1e-30));
  CHECK(std::abs(r.value) < 1e-8);
}

TEST_CASE("hardy_rotation fixed values and domain") {
  CHECK(hardy_rotation(0.0) == 0.0);
  CHECK(hardy_rotation(20.0) == doctest::Approx(kTheta20).epsilon(1e-13));
  CHECK_THROWS_AS((void)hardy_rotation(-1.0), DomainError);
}

TEST_CASE("hardy_rotation matches its asymptotic expansion") {
  for (const double t : {16.0, 20.0, 30.0, 50.0, 100.0}) {
    CAPTURE(t);
    CHECK(std::abs(hardy_rotation(t) - oracle::theta_asym(t)) <= 2e-9);
  }
}

TEST_CASE("hardy_rotation increases beyond the stationary point") {
  double prev = hardy_rotation(10.0);
  for (double t = 11.0; t <= 60.0; t += 1.0) {
    const double cur = hardy_rotation(t);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("hardy_z is real on the line") {
  SampleRng rng(808);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(0.0, 100.0);
    CAPTURE(t);
    CHECK(std::abs(hardy_z(t, {}).imag()) <= 1e-8);
  }
  CHECK(std::abs(hardy_z(kRho1, {})) < 1e-8);
}

TEST_CASE("count_zeros over reference rectangles") {
  CHECK(count_zeros({0.01, 0.99, 0.1, 30.0}, {}) == 3);
  CHECK(count_zeros({0.01, 0.99, 0.1, 1.0}, {}) == 0);
  CHECK(count_zeros({0.4, 0.6, 14.0, 14.3}, {}) == 1);
  CHECK(count_zeros({0.01, 0.99, 26.0, 30.0}, {}) == 0);
}

TEST_CASE("count_zeros refuses a contour through a zero") {
  CHECK_THROWS_AS((void)count_zeros({0.01, 0.99, 0.5, kRho1}, {}),
                  ContourTooClose);
}

TEST_CASE("find_zeros locates the first three ordinates") {
  const auto zeros = find_zeros(0.0, 30.0, 0.05, 1, {});
  REQUIRE(zeros.size() == 3);
  CHECK(zeros[0].t == doctest::Approx(kRho1).epsilon(1e-9));
  CHECK(zeros[1].t == doctest::Approx(kRho2).epsilon(1e-9));
  CHECK(zeros[2].t == doctest::Approx(kRho3).epsilon(1e-9));
  for (const auto& z : zeros) {
    CAPTURE(z.t);
    CHECK(std::abs(z.sigma - 0.5) < 1e-9);
    CHECK(z.abs_zeta < 1e-8);
    CHECK(z.refine_iters > 0);
    // The mirror point is a zero too.
    CHECK(std::abs(zeta(Cplx(0.5, -z.t), {}).value) < 1e-8);
  }
  CHECK(zeros[0].t < zeros[1].t);
  CHECK(zeros[1].t < zeros[2].t);
}

TEST_CASE("find_zeros returns nothing below the first ordinate") {
  CHECK(find_zeros(0.0, 1.0, 0.05, 1, {}).empty());
}

TEST_CASE("find_zeros isolates a single zero in a tight window") {
  const auto zeros = find_zeros(14.0, 14.3, 0.01, 1, {});
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0].t == doctest::Approx(kRho1).epsilon(1e-9));
}

TEST_CASE("find_zeros cross-checks against the winding count") {
  // A 9-wide grid straddles zeros without changing sign often enough;
  // the contour count then exposes the shortfall.
  CHECK_THROWS_AS((void)find_zeros(0.0, 30.0, 9.0, 1, {}), StepTooCoarse);
}

TEST_CASE("find_zeros validates its window") {
  CHECK_THROWS_AS((void)find_zeros(10.0, 5.0, 0.05, 1, {}), DomainError);
  CHECK_THROWS_AS((void)find_zeros(0.0, 10.0, 0.0, 1, {}), DomainError);
  CHECK_THROWS_AS((void)find_zeros(-2.0, 10.0, 0.05, 1, {}), DomainError);
}

TEST_CASE("zero records are identical across worker counts") {
  const auto a = find_zeros(0.0, 50.0, 0.05, 1, {});
  const auto b = find_zeros(0.0, 50.0, 0.05, 4, {});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].sigma == b[i].sigma);
    CHECK(a[i].abs_zeta == b[i].abs_zeta);
    CHECK(a[i].refine_iters == b[i].refine_iters);
  }
}

}  // TEST_SUITE
