#pragma once

// The deltoid (tricuspoid) traced by z(t) = 2 e^{it} + e^{-2it}: cusps at
// distance 3, inscribed circle of radius 1, and the quartic equation
//   (x^2+y^2)^2 + 18(x^2+y^2) - 8x^3 + 24xy^2 - 27 = 0.
// Every tangent line meets the region in a chord of length exactly 4 (the
// "needle"); the needle with base angle t has endpoints ±2e^{it} + e^{-2it},
// midpoint e^{-2it} on the unit circle, and touches the curve at
// e^{4it} + 2e^{-2it}.

#include <array>

#include "deltoid/geometry.hpp"

namespace deltoid {

enum class Region { Inside, On, Outside };

struct Classification {
  Region verdict;
  double value;  // the quartic value; negative inside, positive outside
};

// Evaluates the defining quartic through its real form, so the result is
// exactly real and invariant under conjugation bit-for-bit.
double deltoid_eval(Complex z);

Classification classify(Complex z);

const char* region_name(Region r);

// Curve point 2 e^{it} + e^{-2it}.
Complex parametrize(Angle theta);

// Point where the needle with base angle theta touches the curve;
// equals parametrize(-2 theta).
Complex tangency_point(Angle theta);

// Tangent chord of length 4: endpoints, midpoint (on the unit circle) and
// tangency point.  The tangency sits at barycentric position cos(3 theta)
// along the chord, measured from the midpoint in units of half the length.
struct Needle {
  Angle theta;
  Complex end_plus;    // 2 e^{it} + e^{-2it}
  Complex end_minus;   // -2 e^{it} + e^{-2it}
  Complex midpoint;    // e^{-2it}
  Complex tangency;    // e^{4it} + 2 e^{-2it}

  double tangency_lambda() const;  // recovered from the stored points
};

Needle needle(Angle theta);

// The full tangent line through the needle: points 2*lambda*e^{it} + e^{-2it}
// for real lambda; |lambda| <= 1 is the needle itself.
struct TangentLine {
  Angle base_theta;
  Complex anchor;     // e^{-2it}, the lambda = 0 point
  Complex direction;  // e^{it}, unit

  Complex point_at(double lambda) const { return anchor + 2.0 * lambda * direction; }
  Line as_line() const { return Line{anchor, direction}; }
};

TangentLine tangent_line(Angle theta);

// The configuration attached to one base angle: two perpendicular tangent
// lines L (through gamma, beta', alpha) and L' (through gamma', beta',
// alpha'), with alpha = e^{it} the midpoint of gamma and beta'.
struct Frame {
  Angle theta;
  Complex alpha, alpha_prime;  // ±e^{it}
  Complex beta, beta_prime;    // ±e^{-2it}
  Complex gamma, gamma_prime;  // e^{-2it} ± 2e^{it}
  Complex delta;               // e^{4it} + 2e^{-2it}
  TangentLine line_l;          // tangent at gamma, slope -tan(t/2)
  TangentLine line_l_prime;    // tangent at gamma', slope cot(t/2)
};

Frame frame(Angle theta);

// Intersection of two distinct tangent lines, solved as a 2x2 linear system.
// The needle parameters of the meeting point are cos(t1 + 2 t2) and
// cos(2 t1 + t2), so the intersection always stays inside the closed region.
struct TangentIntersection {
  Complex point;
  double lambda1;
  double lambda2;
};

TangentIntersection tangent_intersection(Angle theta1, Angle theta2);

// Minimum of |deltoid_eval| along a line, via a coarse sweep refined by
// golden–section search.  Used to confirm tangency claims numerically.
double line_min_abs_eval(const Line& line, double s_max = 6.0);

}  // namespace deltoid
