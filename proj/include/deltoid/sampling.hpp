#pragma once

// Seeded, platform-independent sampling used by the verification suite and
// the property tests.  Only the raw mt19937_64 stream is consumed; the
// uniform mapping is spelled out here so results do not depend on the
// standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "deltoid/geometry.hpp"
#include "deltoid/triangle.hpp"

namespace deltoid {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1).
  double canonical() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

  Angle angle() { return Angle(uniform(-pi, pi)); }

  Complex unit_point() { return unit(uniform(-pi, pi)); }

  // Uniform over the open deltoid region (rejection from the radius-3 disk).
  Complex interior_point();

  // Random amenable triangle from two uniform vertex angles; optionally
  // redraws until all vertex pairs are at least min_separation apart.
  AmenableTriangle triangle(double min_separation = 0.0);

  // Pair of base angles whose tangent lines are safely distinct
  // (|sin(t1 - t2)| above the given floor).
  std::pair<Angle, Angle> distinct_tangent_pair(double sin_floor = 1e-6);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace deltoid
