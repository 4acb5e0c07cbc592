#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace deltoid {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Tolerances shared across the library.  `on` is the half-width of the
// quartic-value band that counts as "on the curve"; `geom` bounds geometric
// residuals (distances, cross products); `unit` bounds deviations from the
// unit circle accepted by triangle validation; `root` bounds residuals of
// root-based reconstructions; `dedup` is the point-merge radius.
namespace tol {
inline constexpr double on = 1e-7;
inline constexpr double geom = 1e-9;
inline constexpr double unit = 1e-6;
inline constexpr double root = 1e-8;
inline constexpr double dedup = 1e-7;
}  // namespace tol

// Maps any finite angle to the half-open interval (-pi, pi].
inline double normalize_radians(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("angle must be finite");
  double r = std::remainder(theta, two_pi);
  if (r <= -pi) r = pi;
  return r;
}

// An angle stored normalized to (-pi, pi].  Normalization is idempotent:
// re-normalizing a stored value returns it bit-for-bit.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : value_(normalize_radians(radians)) {}
  double radians() const { return value_; }
  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  double value_ = 0.0;
};

inline Complex unit(double radians) { return std::polar(1.0, radians); }

inline void require_finite(Complex z, const char* what = "point") {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument(std::string(what) + " must be finite");
}

// A line given by an anchor point and a unit direction vector.
struct Line {
  Complex anchor;
  Complex direction;

  Complex at(double s) const { return anchor + s * direction; }
};

// Signed perpendicular distance of p from the line (positive to the left of
// the direction vector).
inline double signed_distance(const Line& line, Complex p) {
  return std::imag((p - line.anchor) * std::conj(line.direction));
}

}  // namespace deltoid
