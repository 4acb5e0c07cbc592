#include "deltoid/sampling.hpp"

#include <cmath>
#include <utility>

#include "deltoid/curve.hpp"

namespace deltoid {

Complex Sampler::interior_point() {
  for (;;) {
    const double x = uniform(-3.0, 3.0);
    const double y = uniform(-3.0, 3.0);
    const Complex z(x, y);
    if (classify(z).verdict == Region::Inside) return z;
  }
}

AmenableTriangle Sampler::triangle(double min_separation) {
  for (;;) {
    const double p1 = uniform(-pi, pi);
    const double p2 = uniform(-pi, pi);
    const double p3 = normalize_radians(-(p1 + p2));
    const double d12 = std::abs(std::remainder(p1 - p2, two_pi));
    const double d13 = std::abs(std::remainder(p1 - p3, two_pi));
    const double d23 = std::abs(std::remainder(p2 - p3, two_pi));
    if (d12 >= min_separation && d13 >= min_separation && d23 >= min_separation)
      return AmenableTriangle::from_angles(p1, p2);
  }
}

std::pair<Angle, Angle> Sampler::distinct_tangent_pair(double sin_floor) {
  for (;;) {
    const double t1 = uniform(-pi, pi);
    const double t2 = uniform(-pi, pi);
    if (std::abs(std::sin(t1 - t2)) >= sin_floor)
      return {Angle(t1), Angle(t2)};
  }
}

}  // namespace deltoid
