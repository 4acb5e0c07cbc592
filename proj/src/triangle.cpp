#include "deltoid/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deltoid/errors.hpp"

namespace deltoid {

namespace {

// Widest tolerated distance from a computed root to the unit circle before
// radial projection.  The On band (|quartic| <= tol::on) is spatially narrow
// on smooth arcs, but near a cusp it admits orthocenters whose roots drift
// O(sqrt(band)) off the circle, so this must be far looser than tol::unit.
constexpr double root_projection_band = 1e-3;

struct Cubic {
  Complex b, c, d;  // z^3 + b z^2 + c z + d

  Complex eval(Complex z) const { return ((z + b) * z + c) * z + d; }
  Complex deriv(Complex z) const { return (3.0 * z + 2.0 * b) * z + c; }
};

std::array<Complex, 3> solve_cubic(const Cubic& q) {
  const Complex shift = q.b / 3.0;
  const Complex p = q.c - q.b * q.b / 3.0;
  const Complex r = 2.0 * q.b * q.b * q.b / 27.0 - q.b * q.c / 3.0 + q.d;

  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  std::array<Complex, 3> t;
  if (std::abs(p) < 1e-300 && std::abs(r) < 1e-300) {
    t = {Complex(0.0), Complex(0.0), Complex(0.0)};
  } else {
    const Complex disc = std::sqrt(r * r / 4.0 + p * p * p / 27.0);
    // Pick the branch with the larger magnitude to avoid cancellation.
    Complex u3 = -r / 2.0 + disc;
    if (std::abs(-r / 2.0 - disc) > std::abs(u3)) u3 = -r / 2.0 - disc;
    if (std::abs(u3) < 1e-300) {
      // p ~ 0: three cube roots of -r.
      const Complex u = std::pow(-r, 1.0 / 3.0);
      t = {u, u * omega, u * std::conj(omega)};
    } else {
      const Complex u = std::pow(u3, 1.0 / 3.0);
      const Complex v = -p / (3.0 * u);
      t = {u + v, u * omega + v * std::conj(omega), u * std::conj(omega) + v * omega};
    }
  }

  std::array<Complex, 3> roots;
  for (int k = 0; k < 3; ++k) {
    Complex z = t[k] - shift;
    for (int step = 0; step < 2; ++step) {
      const Complex df = q.deriv(z);
      if (std::abs(df) < 1e-13) break;
      z -= q.eval(z) / df;
    }
    roots[k] = z;
  }
  return roots;
}

}  // namespace

AmenableTriangle::AmenableTriangle(const std::array<Complex, 3>& vertices) : v_(vertices) {
  Complex product(1.0, 0.0);
  for (const Complex& z : v_) {
    require_finite(z, "vertex");
    if (std::abs(std::abs(z) - 1.0) > tol::unit)
      throw std::invalid_argument("vertex is not on the unit circle");
    product *= z;
  }
  if (std::abs(product - 1.0) > tol::unit)
    throw std::invalid_argument("vertex product is not 1");
}

AmenableTriangle AmenableTriangle::from_angles(double phi1, double phi2) {
  return AmenableTriangle({unit(phi1), unit(phi2), unit(-phi1 - phi2)});
}

bool AmenableTriangle::is_degenerate() const {
  return std::abs(v_[0] - v_[1]) < degeneracy_threshold ||
         std::abs(v_[1] - v_[2]) < degeneracy_threshold ||
         std::abs(v_[2] - v_[0]) < degeneracy_threshold;
}

double vertex_multiset_distance(const std::array<Complex, 3>& a,
                                const std::array<Complex, 3>& b) {
  std::array<int, 3> idx = {0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  std::sort(idx.begin(), idx.end());
  do {
    const double worst = std::max({std::abs(a[0] - b[idx[0]]),
                                   std::abs(a[1] - b[idx[1]]),
                                   std::abs(a[2] - b[idx[2]])});
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

Complex orthocenter(const AmenableTriangle& t) {
  const auto& v = t.vertices();
  return v[0] + v[1] + v[2];
}

double cubic_discriminant(Complex z_h) {
  // 18 b c d - 4 b^3 d + b^2 c^2 - 4 c^3 - 27 d^2 for the monic cubic with
  // b = -z_H, c = conj(z_H), d = -1; the imaginary parts cancel.
  const Complex b = -z_h;
  const Complex c = std::conj(z_h);
  const Complex d(-1.0, 0.0);
  const Complex disc = 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c -
                       4.0 * c * c * c - 27.0 * d * d;
  return disc.real();
}

AmenableTriangle vertices_from_orthocenter(Complex z_h) {
  require_finite(z_h, "orthocenter");
  if (classify(z_h).verdict == Region::Outside)
    throw OutsideDeltoid("orthocenter lies outside the deltoid");

  auto roots = solve_cubic(Cubic{-z_h, std::conj(z_h), Complex(-1.0, 0.0)});
  for (Complex& z : roots) {
    const double rho = std::abs(z);
    if (std::abs(rho - 1.0) > root_projection_band)
      throw OutsideDeltoid("orthocenter lies outside the deltoid (cusp fringe)");
    z /= rho;
  }
  return AmenableTriangle(roots);
}

std::array<Complex, 3> reflected_triangle(const AmenableTriangle& t) {
  const auto& v = t.vertices();
  return {-v[0], -v[1], -v[2]};
}

std::array<Complex, 3> large_triangle(const AmenableTriangle& t) {
  const auto& v = t.vertices();
  const Complex z_h = v[0] + v[1] + v[2];
  return {2.0 * v[0] - z_h, 2.0 * v[1] - z_h, 2.0 * v[2] - z_h};
}

std::array<Line, 3> altitude_lines(const AmenableTriangle& t) {
  if (t.is_degenerate())
    throw DegenerateTriangle("altitudes need three distinct vertices");
  const auto& v = t.vertices();
  std::array<Line, 3> lines;
  for (std::size_t j = 0; j < 3; ++j) {
    const Complex side = v[(j + 2) % 3] - v[(j + 1) % 3];
    Complex dir = Complex(0.0, 1.0) * side;
    dir /= std::abs(dir);
    lines[j] = Line{v[j], dir};
  }
  return lines;
}

Complex simson_foot(const AmenableTriangle& t, std::size_t j, Angle theta) {
  if (t.is_degenerate())
    throw DegenerateTriangle("simson feet need three distinct vertices");
  const Complex z = t.vertex(j);
  const double x = z.real();
  const double y = z.imag();
  const double ct = std::cos(theta.radians());
  const double st = std::sin(theta.radians());
  return Complex((1.0 - x) * ct + y * st - x, y * ct + (1.0 + x) * st - y);
}

SimsonLineResult simson_line_check(const AmenableTriangle& t, Angle theta) {
  const std::array<Complex, 3> feet = {simson_foot(t, 0, theta),
                                       simson_foot(t, 1, theta),
                                       simson_foot(t, 2, theta)};
  const Complex centroid = (feet[0] + feet[1] + feet[2]) / 3.0;

  // Principal direction of the foot cloud.
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const Complex& f : feet) {
    const Complex d = f - centroid;
    sxx += d.real() * d.real();
    sxy += d.real() * d.imag();
    syy += d.imag() * d.imag();
  }
  const double half_angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const Line fitted{centroid, unit(half_angle)};

  double residual = 0.0;
  for (const Complex& f : feet)
    residual = std::max(residual, std::abs(signed_distance(fitted, f)));
  if (residual > tol::geom)
    throw NonCollinearFeet("simson feet failed the collinearity fit");

  const Frame fr = frame(theta);
  const double anchor_gap = std::abs(signed_distance(fitted, fr.alpha));
  const double cross = std::abs(fitted.direction.real() * fr.line_l.direction.imag() -
                                fitted.direction.imag() * fr.line_l.direction.real());
  const bool matches = anchor_gap <= 1e-8 && cross <= 1e-8;
  return SimsonLineResult{fitted, matches};
}

Line isogonal_direction_line(const AmenableTriangle& t, Angle theta) {
  if (t.is_degenerate())
    throw DegenerateTriangle("isogonal construction needs distinct vertices");
  const Complex z3 = t.vertex(2);
  const double phi3 = std::arg(z3);

  // Interior angle bisector of the reflected triangle at -z3: the chord from
  // -z3 through e^{-i phi3 / 2}.  When the chord endpoints collide, the
  // rotated difference i(e^{-i phi3/2} - z3) continues the same direction
  // (angle phi3/4 mod pi) without cancellation.
  Complex bisector = unit(-phi3 / 2.0) + z3;
  if (std::abs(bisector) < 1e-9)
    bisector = Complex(0.0, 1.0) * (unit(-phi3 / 2.0) - z3);
  bisector /= std::abs(bisector);

  Complex toward_beta = unit(-2.0 * theta.radians()) + z3;
  if (std::abs(toward_beta) < 1e-9)
    toward_beta = Complex(0.0, 1.0) * (unit(-2.0 * theta.radians()) - z3);
  toward_beta /= std::abs(toward_beta);

  // Reflect the direction about the bisector.
  Complex dir = bisector * bisector * std::conj(toward_beta);
  dir /= std::abs(dir);
  return Line{-z3, dir};
}

AmenableTriangle needle_vertices(Angle theta, double lambda0) {
  if (!std::isfinite(lambda0) || std::abs(lambda0) > 1.0 + tol::geom)
    throw LambdaOutOfRange("needle parameter must lie in [-1, 1]");
  const double clamped = std::clamp(lambda0, -1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - clamped * clamped));
  const Complex e = unit(theta.radians());
  const Complex m = unit(-2.0 * theta.radians());
  return AmenableTriangle({m, (clamped + Complex(0.0, 1.0) * s) * e,
                           (clamped - Complex(0.0, 1.0) * s) * e});
}

}  // namespace deltoid
