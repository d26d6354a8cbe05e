// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace zetalab {

// Seeded stream for sampling scan points.  The raw-bits-to-double mapping
// is spelled out here (instead of std::uniform_real_distribution, whose
// output is implementation-defined) so identical seeds give identical
// samples on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace zetalab
