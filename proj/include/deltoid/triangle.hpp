#pragma once

// Amenable triangles: vertices on the unit circle with product 1, i.e.
// z_j = e^{i phi_j} with phi_1 + phi_2 + phi_3 = 0 (mod 2 pi).  Their
// orthocenter z_H = z_1 + z_2 + z_3 ranges exactly over the closed deltoid
// region, and the vertices are recovered from z_H as the roots of
//   z^3 - z_H z^2 + conj(z_H) z - 1 = 0,
// whose discriminant is the deltoid quartic itself.

#include <array>
#include <cstddef>

#include "deltoid/curve.hpp"
#include "deltoid/geometry.hpp"

namespace deltoid {

class AmenableTriangle {
 public:
  // Validates |z_j| = 1 and z_1 z_2 z_3 = 1 within tol::unit.  Vertex order
  // is preserved; equality of triangles is multiset equality.
  explicit AmenableTriangle(const std::array<Complex, 3>& vertices);

  // Vertices e^{i phi_1}, e^{i phi_2}, e^{-i(phi_1 + phi_2)}.
  static AmenableTriangle from_angles(double phi1, double phi2);

  const std::array<Complex, 3>& vertices() const { return v_; }
  Complex vertex(std::size_t j) const { return v_.at(j); }

  // Coincident vertices (within the degeneracy threshold) are allowed at
  // construction; operations needing distinct vertices reject them.
  bool is_degenerate() const;

  static constexpr double degeneracy_threshold = 1e-6;

 private:
  std::array<Complex, 3> v_;
};

// Smallest max-vertex distance over all pairings of the two vertex triples.
double vertex_multiset_distance(const std::array<Complex, 3>& a,
                                const std::array<Complex, 3>& b);

// z_1 + z_2 + z_3; lands inside or on the deltoid.
Complex orthocenter(const AmenableTriangle& t);

// Discriminant of z^3 - z_H z^2 + conj(z_H) z - 1, evaluated through the
// general cubic-discriminant formula.  Agrees with deltoid_eval(z_H).
double cubic_discriminant(Complex z_h);

// Solves the cubic above for the vertices.  Throws OutsideDeltoid when
// classify(z_h) is Outside, or when the computed roots land too far off the
// unit circle (reachable only in the cusp-adjacent fringe of the On band).
AmenableTriangle vertices_from_orthocenter(Complex z_h);

// Vertex-wise negation; the products become -1, the orthocenter -z_H.
std::array<Complex, 3> reflected_triangle(const AmenableTriangle& t);

// Homothety with center z_H and ratio 2: vertices 2 z_j - z_H, circumradius
// 2 about -z_H, orthocenter z_H again, nine-point circle = unit circle.
std::array<Complex, 3> large_triangle(const AmenableTriangle& t);

// Altitude j passes through z_j perpendicular to the opposite side.  Each
// altitude line is tangent to the deltoid.  Requires distinct vertices.
std::array<Line, 3> altitude_lines(const AmenableTriangle& t);

// Foot of the perpendicular from eps = 2 e^{i theta} - z_H onto the sideline
// of the large triangle opposite the image of vertex j (closed form).
Complex simson_foot(const AmenableTriangle& t, std::size_t j, Angle theta);

struct SimsonLineResult {
  Line line;            // fitted through the three feet
  bool matches_line_l;  // coincides with frame(theta).line_l (always true)
};

// Fits a line through the three Simson feet, asserts collinearity, and
// reports whether it coincides with the frame's tangent line L.
SimsonLineResult simson_line_check(const AmenableTriangle& t, Angle theta);

// Reflects the line from -z_3 to e^{-2i theta} about the interior angle
// bisector at -z_3 (vertex index 2 of the reflected triangle).  The result
// has direction angle theta (mod pi) and meets the unit circle again at
// e^{i(2 theta - phi_3)}.
Line isogonal_direction_line(const AmenableTriangle& t, Angle theta);

// The amenable triangle whose orthocenter is the needle point
// 2 lambda0 e^{i theta} + e^{-2i theta}: vertices e^{-2i theta} and
// (lambda0 ± i sqrt(1 - lambda0^2)) e^{i theta}.
AmenableTriangle needle_vertices(Angle theta, double lambda0);

}  // namespace deltoid
