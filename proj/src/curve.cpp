#include "deltoid/curve.hpp"

#include <algorithm>
#include <cmath>

#include "deltoid/errors.hpp"

namespace deltoid {

double deltoid_eval(Complex z) {
  require_finite(z);
  const double x = z.real();
  const double y = z.imag();
  const double r2 = x * x + y * y;
  return r2 * r2 + 18.0 * r2 - 8.0 * x * x * x + 24.0 * x * y * y - 27.0;
}

Classification classify(Complex z) {
  const double value = deltoid_eval(z);
  Region verdict;
  if (std::abs(value) <= tol::on)
    verdict = Region::On;
  else if (value < 0.0)
    verdict = Region::Inside;
  else
    verdict = Region::Outside;
  return {verdict, value};
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Inside: return "Inside";
    case Region::On: return "On";
    case Region::Outside: return "Outside";
  }
  return "?";
}

Complex parametrize(Angle theta) {
  const double t = theta.radians();
  return 2.0 * unit(t) + unit(-2.0 * t);
}

Complex tangency_point(Angle theta) {
  const double t = theta.radians();
  return unit(4.0 * t) + 2.0 * unit(-2.0 * t);
}

double Needle::tangency_lambda() const {
  const Complex dir = unit(theta.radians());
  return std::real((tangency - midpoint) * std::conj(dir)) / 2.0;
}

Needle needle(Angle theta) {
  const double t = theta.radians();
  const Complex e = unit(t);
  const Complex m = unit(-2.0 * t);
  return Needle{theta, 2.0 * e + m, -2.0 * e + m, m, unit(4.0 * t) + 2.0 * m};
}

TangentLine tangent_line(Angle theta) {
  const double t = theta.radians();
  return TangentLine{theta, unit(-2.0 * t), unit(t)};
}

Frame frame(Angle theta) {
  const double t = theta.radians();
  const Complex a = unit(t);
  const Complex b = unit(-2.0 * t);
  Frame f;
  f.theta = theta;
  f.alpha = a;
  f.alpha_prime = -a;
  f.beta = b;
  f.beta_prime = -b;
  f.gamma = b + 2.0 * a;
  f.gamma_prime = b - 2.0 * a;
  f.delta = unit(4.0 * t) + 2.0 * b;
  // L is the tangent at gamma = parametrize(t); its base angle solves
  // -2 t_L = t, so t_L = -t/2 and the anchor e^{-2i t_L} = e^{it} = alpha.
  // L' is the tangent at gamma' = parametrize(t + pi).
  f.line_l = tangent_line(Angle(-t / 2.0));
  f.line_l_prime = tangent_line(Angle(-t / 2.0 - pi / 2.0));
  return f;
}

TangentIntersection tangent_intersection(Angle theta1, Angle theta2) {
  const double t1 = theta1.radians();
  const double t2 = theta2.radians();
  const double s = std::sin(t1 - t2);
  const Complex a1 = unit(-2.0 * t1);
  const Complex a2 = unit(-2.0 * t2);
  const Complex d1 = unit(t1);

  if (std::abs(s) <= tol::geom) {
    // Same direction: tangent lines of this family are then either the same
    // line (t2 = t1 mod pi shares the anchor) or parallel translates.
    const double gap = std::abs(std::imag((a2 - a1) * std::conj(d1)));
    if (gap <= tol::geom)
      throw CoincidentLines("tangent lines coincide");
    throw ParallelLines("tangent lines are parallel");
  }

  // 2 l1 e^{i t1} + e^{-2i t1} = 2 l2 e^{i t2} + e^{-2i t2}, split into real
  // and imaginary parts and solved by Cramer's rule.
  const double c1 = std::cos(t1), s1 = std::sin(t1);
  const double c2 = std::cos(t2), s2 = std::sin(t2);
  const double rhs1 = std::cos(2.0 * t2) - std::cos(2.0 * t1);
  const double rhs2 = std::sin(2.0 * t1) - std::sin(2.0 * t2);
  const double det = 4.0 * s;
  const double lambda1 = (-2.0 * s2 * rhs1 + 2.0 * c2 * rhs2) / det;
  const double lambda2 = (2.0 * c1 * rhs2 - 2.0 * s1 * rhs1) / det;
  return TangentIntersection{a1 + 2.0 * lambda1 * d1, lambda1, lambda2};
}

double line_min_abs_eval(const Line& line, double s_max) {
  const int steps = 4800;
  double best_s = -s_max;
  double best = std::abs(deltoid_eval(line.at(best_s)));
  for (int i = 1; i <= steps; ++i) {
    const double s = -s_max + 2.0 * s_max * static_cast<double>(i) / steps;
    const double v = std::abs(deltoid_eval(line.at(s)));
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  // Golden-section refinement of |eval| around the grid minimum.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_s - 2.0 * s_max / steps;
  double hi = best_s + 2.0 * s_max / steps;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = std::abs(deltoid_eval(line.at(x1)));
  double f2 = std::abs(deltoid_eval(line.at(x2)));
  for (int i = 0; i < 80 && hi - lo > 1e-14; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = std::abs(deltoid_eval(line.at(x1)));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = std::abs(deltoid_eval(line.at(x2)));
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace deltoid
