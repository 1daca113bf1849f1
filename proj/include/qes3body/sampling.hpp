#pragma once

#include <cstdint>
#include <random>

#include "qes3body/geometry.hpp"

namespace qes3body {

/// Seeded interior-point sampler: side lengths uniform in [0.2, 2] with
/// rejection of (near-)degenerate triangles. margin is the smallest accepted
/// discriminant relative to tau1^2; it keeps finite-difference probes away
/// from the singular boundary.
class InteriorSampler {
 public:
  explicit InteriorSampler(std::uint64_t seed, double margin = 0.02)
      : rng_(seed), margin_(margin) {}

  TrianglePoint sample() {
    std::uniform_real_distribution<double> side(0.2, 2.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      double a = side(rng_), b = side(rng_), c = side(rng_);
      if (c >= a + b || b >= a + c || a >= b + c) continue;
      TrianglePoint p = TrianglePoint::from_sides(a, b, c);
      double t1 = p.tau1();
      if (p.discriminant() > margin_ * t1 * t1) return p;
    }
    throw numerical_failure_error("interior sampling failed to find a point");
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  double margin_;
};

}  // namespace qes3body
