#include "deltoid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "deltoid/curve.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/loci.hpp"
#include "deltoid/powers.hpp"
#include "deltoid/sampling.hpp"
#include "deltoid/triangle.hpp"

namespace deltoid {

namespace {

struct Check {
  const char* name;
  double tolerance;
  double (*worst_residual)(const VerifyOptions&, Sampler&);
};

// Nominal sample counts assume the default 1000-sample budget.
int scaled(const VerifyOptions& o, int nominal) {
  const long long v = static_cast<long long>(nominal) * o.samples / 1000;
  return static_cast<int>(std::clamp(v, 1LL, 1000000LL));
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

const Complex kThird = unit(two_pi / 3.0);

// ---------------------------------------------------------------- curve ----

double check_curve_point_identity(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const Angle theta(-pi + two_pi * k / 10000.0);
    worst = std::max(worst, std::abs(deltoid_eval(parametrize(theta))));
  }
  return worst;
}

double check_angle_periodicity(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const double t = s.uniform(-pi, pi);
    const Complex base = parametrize(Angle(t));
    worst = std::max(worst, std::abs(parametrize(Angle(t + two_pi)) - base));
    worst = std::max(worst, std::abs(parametrize(Angle(t - two_pi)) - base));
  }
  return worst;
}

double check_rotation_invariance_eval(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    Complex z;
    do {
      z = Complex(s.uniform(-4.0, 4.0), s.uniform(-4.0, 4.0));
    } while (std::abs(z) > 4.0);
    const double base = deltoid_eval(z);
    worst = std::max(worst, std::abs(deltoid_eval(kThird * z) - base));
    worst = std::max(worst, std::abs(deltoid_eval(std::conj(kThird) * z) - base));
  }
  return worst;
}

double check_conjugation_invariance_eval(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Complex z(s.uniform(-4.0, 4.0), s.uniform(-4.0, 4.0));
    worst = std::max(worst, std::abs(deltoid_eval(std::conj(z)) - deltoid_eval(z)));
  }
  return worst;
}

double check_needle_geometry(const VerifyOptions& o, Sampler&) {
  double worst = 0.0;
  const int count = scaled(o, 1000);
  for (int k = 0; k < count; ++k) {
    const Angle theta(-pi + two_pi * k / count);
    const Needle nd = needle(theta);
    worst = std::max(worst, std::abs(std::abs(nd.end_plus - nd.end_minus) - 4.0));
    worst = std::max(worst, std::abs(std::abs(nd.midpoint) - 1.0));
    worst = std::max(worst,
                     std::abs(nd.tangency_lambda() - std::cos(3.0 * theta.radians())));
    worst = std::max(worst, std::abs((nd.end_plus + nd.end_minus) / 2.0 - nd.midpoint));
  }
  return worst;
}

double check_needle_on_curve(const VerifyOptions& o, Sampler&) {
  double worst = 0.0;
  const int count = scaled(o, 1000);
  for (int k = 0; k < count; ++k) {
    const Needle nd = needle(Angle(-pi + two_pi * k / count));
    worst = std::max(worst, std::abs(deltoid_eval(nd.end_plus)));
    worst = std::max(worst, std::abs(deltoid_eval(nd.end_minus)));
    worst = std::max(worst, std::abs(deltoid_eval(nd.tangency)));
  }
  return worst;
}

double check_needle_separation(const VerifyOptions&, Sampler&) {
  double violations = 0.0;
  for (int k = 0; k < 144; ++k) {
    const Angle theta(-pi + two_pi * k / 144.0);
    const TangentLine line = tangent_line(theta);
    for (double lambda : {-3.0, -1.5, 1.5, 3.0})
      if (classify(line.point_at(lambda)).verdict != Region::Outside) violations += 1.0;
    for (double lambda : {-0.5, 0.0, 0.5})
      if (classify(line.point_at(lambda)).verdict == Region::Outside) violations += 1.0;
  }
  return violations;
}

double check_tangent_intersection_closed_form(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const auto [a1, a2] = s.distinct_tangent_pair();
    const double t1 = a1.radians(), t2 = a2.radians();
    const TangentIntersection ti = tangent_intersection(a1, a2);
    const Complex expected = unit(2.0 * (t1 + t2)) + unit(-2.0 * t1) + unit(-2.0 * t2);
    worst = std::max(worst, std::abs(ti.point - expected));
    worst = std::max(worst, std::abs(ti.lambda1 - std::cos(t1 + 2.0 * t2)));
    worst = std::max(worst, std::abs(ti.lambda2 - std::cos(2.0 * t1 + t2)));
  }
  return worst;
}

double check_tangent_intersection_containment(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const auto [a1, a2] = s.distinct_tangent_pair();
    const TangentIntersection ti = tangent_intersection(a1, a2);
    worst = std::max(worst, std::max(0.0, deltoid_eval(ti.point)));
    worst = std::max(worst, std::max(0.0, std::abs(ti.lambda1) - 1.0));
    worst = std::max(worst, std::max(0.0, std::abs(ti.lambda2) - 1.0));
  }
  return worst;
}

double check_tangent_line_degenerate_pairs(const VerifyOptions& o, Sampler& s) {
  double violations = 0.0;
  for (int k = 0; k < scaled(o, 50); ++k) {
    const Angle theta = s.angle();
    for (double offset : {0.0, pi}) {
      try {
        tangent_intersection(theta, Angle(theta.radians() + offset));
        violations += 1.0;
      } catch (const CoincidentLines&) {
      }
    }
  }
  return violations;
}

double check_frame_structure(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Frame fr = frame(s.angle());
    worst = std::max(worst, std::abs(fr.gamma - (fr.beta + 2.0 * fr.alpha)));
    worst = std::max(worst, std::abs(fr.gamma_prime - (fr.beta - 2.0 * fr.alpha)));
    worst = std::max(worst, std::abs(fr.alpha_prime + fr.alpha));
    worst = std::max(worst, std::abs(fr.beta_prime + fr.beta));
    const Line l = fr.line_l.as_line();
    const Line lp = fr.line_l_prime.as_line();
    worst = std::max(worst, std::abs(dot(l.direction, lp.direction)));
    worst = std::max(worst, std::abs(signed_distance(l, fr.gamma)));
    worst = std::max(worst, std::abs(signed_distance(l, fr.beta_prime)));
    worst = std::max(worst, std::abs(signed_distance(lp, fr.gamma_prime)));
    worst = std::max(worst, std::abs(signed_distance(lp, fr.beta_prime)));
    worst = std::max(worst, std::abs(signed_distance(lp, fr.alpha_prime)));
    worst = std::max(worst, std::abs((fr.gamma + fr.beta_prime) / 2.0 - fr.alpha));
    const Line needle_line = tangent_line(fr.theta).as_line();
    worst = std::max(worst, std::abs(signed_distance(needle_line, fr.delta)));
  }
  return worst;
}

// ------------------------------------------------------------- triangle ----

double check_orthocenter_roundtrip_vertices(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const AmenableTriangle t = s.triangle();
    const Complex z_h = orthocenter(t);
    if (classify(z_h).verdict == Region::Outside) return 1.0;
    const AmenableTriangle back = vertices_from_orthocenter(z_h);
    worst = std::max(worst, vertex_multiset_distance(t.vertices(), back.vertices()));
  }
  return worst;
}

double check_orthocenter_roundtrip_point(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Complex z = s.interior_point();
    worst = std::max(worst, std::abs(orthocenter(vertices_from_orthocenter(z)) - z));
  }
  return worst;
}

double check_discriminant_consistency(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Complex z(s.uniform(-3.5, 3.5), s.uniform(-3.5, 3.5));
    worst = std::max(worst, std::abs(cubic_discriminant(z) - deltoid_eval(z)));
  }
  return worst;
}

double check_boundary_degeneracy(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int k = 0; k < 360; ++k) {
    const AmenableTriangle t =
        vertices_from_orthocenter(parametrize(Angle(-pi + two_pi * k / 360.0)));
    const auto& v = t.vertices();
    const double closest = std::min({std::abs(v[0] - v[1]), std::abs(v[1] - v[2]),
                                     std::abs(v[2] - v[0])});
    worst = std::max(worst, closest);
  }
  return worst;
}

double check_altitude_tangency(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 100); ++k) {
    const AmenableTriangle t = s.triangle(1e-2);
    for (const Line& altitude : altitude_lines(t))
      worst = std::max(worst, line_min_abs_eval(altitude));
  }
  return worst;
}

double check_altitude_is_tangent_line(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 100); ++k) {
    const AmenableTriangle t = s.triangle(1e-3);
    const auto altitudes = altitude_lines(t);
    for (std::size_t j = 0; j < 3; ++j) {
      const TangentLine expected = tangent_line(Angle(-std::arg(t.vertex(j)) / 2.0));
      worst = std::max(worst, std::abs(cross(altitudes[j].direction, expected.direction)));
      worst = std::max(worst, std::abs(signed_distance(altitudes[j], expected.anchor)));
    }
  }
  return worst;
}

double check_simson_feet_geometry(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 100); ++k) {
    const AmenableTriangle t = s.triangle(1e-3);
    const Angle theta = s.angle();
    const Complex eps = 2.0 * unit(theta.radians()) - orthocenter(t);
    const auto large = large_triangle(t);
    for (std::size_t j = 0; j < 3; ++j) {
      const Complex foot = simson_foot(t, j, theta);
      const Complex a = large[(j + 1) % 3];
      const Complex b = large[(j + 2) % 3];
      Complex side = b - a;
      side /= std::abs(side);
      worst = std::max(worst, std::abs(cross(foot - a, side)));  // foot on the sideline
      worst = std::max(worst, std::abs(dot(foot - eps, side)));  // drop is perpendicular
    }
  }
  return worst;
}

double check_simson_line_coincidence(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 100); ++k) {
    const AmenableTriangle t = s.triangle(1e-3);
    const Angle theta = s.angle();
    const SimsonLineResult res = simson_line_check(t, theta);
    if (!res.matches_line_l) return 1.0;
    const Frame fr = frame(theta);
    const Line l = fr.line_l.as_line();
    for (std::size_t j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs(signed_distance(l, simson_foot(t, j, theta))));
    worst = std::max(worst, std::abs(cross(res.line.direction, l.direction)));
    worst = std::max(worst, std::abs(signed_distance(res.line, fr.alpha)));
  }
  return worst;
}

double check_isogonal_needle_direction(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 100); ++k) {
    const AmenableTriangle t = s.triangle(1e-3);
    const Angle theta = s.angle();
    const Line line = isogonal_direction_line(t, theta);
    worst = std::max(worst, std::abs(cross(line.direction, unit(theta.radians()))));
    const Complex second = unit(2.0 * theta.radians() - std::arg(t.vertex(2)));
    worst = std::max(worst, std::abs(signed_distance(line, second)));
  }
  return worst;
}

double check_needle_vertices_roundtrip(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Angle theta = s.angle();
    const double lambda0 = s.uniform(-1.0, 1.0);
    const AmenableTriangle t = needle_vertices(theta, lambda0);
    const Complex z_h = orthocenter(t);
    const Complex expected = 2.0 * lambda0 * unit(theta.radians()) +
                             unit(-2.0 * theta.radians());
    worst = std::max(worst, std::abs(z_h - expected));
    const AmenableTriangle back = vertices_from_orthocenter(z_h);
    worst = std::max(worst, vertex_multiset_distance(t.vertices(), back.vertices()));
  }
  return worst;
}

// ---------------------------------------------------------------- power ----

double check_power_roots_vs_recurrence(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Complex z = s.interior_point();
    for (int n = 1; n <= 16; ++n)
      worst = std::max(worst, std::abs(pn_via_roots(z, n) - pn_recurrence(z, n)));
  }
  return worst;
}

double check_power_recurrence_vs_closed_form(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 250); ++k) {
    const Complex z = s.interior_point();
    for (int n = 1; n <= 16; ++n)
      worst = std::max(worst, std::abs(pn_recurrence(z, n) - pn_closed_form(z, n)));
  }
  return worst;
}

double check_power_rotation_equivariance(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Complex z = s.interior_point();
    for (int n = 1; n <= 16; ++n) {
      const Complex lhs = pn_recurrence(kThird * z, n);
      const Complex rhs = unit(two_pi * n / 3.0) * pn_recurrence(z, n);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double check_power_conjugation(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 1000); ++k) {
    const Complex z = s.interior_point();
    for (int n = 1; n <= 16; ++n)
      worst = std::max(worst, std::abs(pn_recurrence(std::conj(z), n) -
                                       std::conj(pn_recurrence(z, n))));
  }
  return worst;
}

double check_power_range_containment(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < scaled(o, 200); ++k) {
    const Complex z = s.interior_point();
    for (int n = 1; n <= 16; ++n)
      worst = std::max(worst, std::max(0.0, deltoid_eval(pn_via_roots(z, n))));
  }
  return worst;
}

double check_deltoid_maps_to_deltoid(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int k = 0; k < 720; ++k) {
    const Complex z = parametrize(Angle(-pi + two_pi * k / 720.0));
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12, 16})
      worst = std::max(worst, std::abs(deltoid_eval(pn_recurrence(z, n))));
  }
  return worst;
}

double check_needle_image_consistency(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n : {1, 2, 3, 5, 8})
    for (int i = 0; i < 100; ++i) {
      const Angle theta(-pi + two_pi * i / 100.0);
      for (int j = 0; j < 100; ++j) {
        const double lambda = -1.0 + 2.0 * j / 99.0;
        const Complex image = needle_image(theta, lambda, n);
        const Complex z = 2.0 * lambda * unit(theta.radians()) +
                          unit(-2.0 * theta.radians());
        worst = std::max(worst, std::abs(image - pn_recurrence(z, n)));
      }
    }
  return worst;
}

double check_needle_image_on_needle(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n : {1, 2, 3, 5, 8})
    for (int i = 0; i < 100; ++i) {
      const Angle theta(-pi + two_pi * i / 100.0);
      const TangentLine image_line = tangent_line(Angle(n * theta.radians()));
      for (int j = 0; j < 100; ++j) {
        const double lambda = -1.0 + 2.0 * j / 99.0;
        const Complex image = needle_image(theta, lambda, n);
        worst = std::max(worst, std::abs(signed_distance(image_line.as_line(), image)));
        const double along =
            dot(image - image_line.anchor, image_line.direction) / 2.0;
        worst = std::max(worst, std::max(0.0, std::abs(along) - 1.0));
      }
    }
  return worst;
}

// ----------------------------------------------------------------- loci ----

double check_q_lucas_crosscheck(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const IntegerPolynomial q = q_poly(n);
    const IntegerPolynomial lucas = lucas_poly(n);
    const Complex scale = ipow(Complex(0.0, -1.0), n);
    for (int k = 0; k < scaled(o, 50); ++k) {
      const double a = s.uniform(-3.0, 3.0);
      const Complex via_lucas = scale * lucas(Complex(0.0, a));
      // The imaginary part carries a 100x tighter budget than the real part.
      worst = std::max(worst, std::abs(q(a) - via_lucas.real()));
      worst = std::max(worst, 100.0 * std::abs(via_lucas.imag()));
    }
  }
  return worst;
}

double check_q_substitution_identity(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const IntegerPolynomial q = q_poly(n);
    for (int k = 0; k < scaled(o, 50); ++k) {
      const double a = s.uniform(-2.0, 2.0);
      const double wa = s.uniform(-pi, pi);
      const Complex w = unit(wa);
      const Complex z = w * w + a * std::conj(w);
      const Complex lhs = ipow(w, n) * pn_recurrence(z, n) - ipow(w, 3 * n);
      worst = std::max(worst, std::abs(lhs - q(a)));
    }
  }
  return worst;
}

double check_q_fibonacci_identity(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const IntegerPolynomial q = q_poly(n);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    for (int k = 0; k < scaled(o, 50); ++k) {
      const double a = s.uniform(-3.0, 3.0);
      const double qa = q(a);
      const double lhs = 4.0 - qa * qa;
      const Complex f = fibonacci_value(n, Complex(0.0, a));
      const Complex rhs = sign * (a * a - 4.0) * f * f;
      const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      worst = std::max(worst, std::abs(lhs - rhs.real()) / scale);
      worst = std::max(worst, std::abs(rhs.imag()) / scale);
    }
  }
  return worst;
}

double check_lucas_fibonacci_identity(const VerifyOptions& o, Sampler& s) {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    for (int k = 0; k < scaled(o, 50); ++k) {
      const double x = s.uniform(-3.0, 3.0);
      const double l = lucas_value(n, Complex(x, 0.0)).real();
      const double f = fibonacci_value(n, Complex(x, 0.0)).real();
      const double lhs = l * l;
      const double rhs = (x * x + 4.0) * f * f + 4.0 * sign;
      const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  return worst;
}

double check_factorization_identity(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n : {1, 2, 3, 5, 8})
    for (int bi = 0; bi <= 12; ++bi) {
      const double b = -3.0 + 0.5 * bi;
      for (int k = 0; k < 36; ++k)
        worst = std::max(
            worst, factorization_residual(b, Angle(-pi + two_pi * k / 36.0), n));
    }
  return worst;
}

double check_fibonacci_amplitude_roots(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n)
    for (double a : fibonacci_amplitudes(n))
      worst = std::max(worst, std::abs(fibonacci_value(n, Complex(0.0, a))));
  return worst;
}

double check_preimage_on_curve(const VerifyOptions& o, Sampler&) {
  double worst = 0.0;
  const int count = scaled(o, 1000);
  for (int n : {2, 3, 5, 12}) {
    std::vector<double> amplitudes = fibonacci_amplitudes(n);
    amplitudes.push_back(2.0);
    for (double a : amplitudes)
      for (int k = 0; k < count; ++k)
        worst = std::max(
            worst, preimage_deltoid_residual(a, Angle(-pi + two_pi * k / count), n));
  }
  return worst;
}

double check_zero_locus_structure(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const ZeroLocus locus = zero_locus(n);
    if (locus.entries.size() != static_cast<std::size_t>(n) * n) return 1.0;
    for (const auto& e : locus.entries)
      worst = std::max(worst, e.pn_abs);
  }
  // The dedup threshold is trusted only because true pairwise gaps stay huge.
  for (int n : {2, 3, 4, 5, 6, 7, 8, 12, 16}) {
    const ZeroLocus locus = zero_locus(n);
    double min_gap = 10.0;
    for (std::size_t i = 0; i < locus.entries.size(); ++i)
      for (std::size_t j = i + 1; j < locus.entries.size(); ++j)
        min_gap = std::min(min_gap,
                           std::abs(locus.entries[i].point - locus.entries[j].point));
    if (min_gap < 1e-3) return 1.0;
  }
  return worst;
}

double check_zero_locus_needle_concurrency(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& e : zero_locus(n).entries)
      for (double theta : e.needle_thetas) {
        const TangentLine line = tangent_line(Angle(theta));
        worst = std::max(worst, std::abs(signed_distance(line.as_line(), e.point)));
        const double along = dot(e.point - line.anchor, line.direction) / 2.0;
        worst = std::max(worst, std::max(0.0, std::abs(along) - 1.0));
      }
  return worst;
}

Complex newton_polish(Complex z, int n) {
  for (int it = 0; it < 60; ++it) {
    const Complex f = pn_recurrence(z, n);
    if (std::abs(f) < 1e-13) break;
    const double h = 1e-7 * std::max(1.0, std::abs(z));
    const Complex fx = (pn_recurrence(z + h, n) - pn_recurrence(z - h, n)) / (2.0 * h);
    const Complex fy = (pn_recurrence(z + Complex(0.0, h), n) -
                        pn_recurrence(z - Complex(0.0, h), n)) /
                       (2.0 * h);
    const double a = fx.real(), b = fy.real(), c = fx.imag(), d = fy.imag();
    const double det = a * d - b * c;
    if (std::abs(det) < 1e-12) break;
    const double dx = (-f.real() * d + b * f.imag()) / det;
    const double dy = (-a * f.imag() + f.real() * c) / det;
    z += Complex(dx, dy);
    if (std::abs(Complex(dx, dy)) < 1e-14) break;
  }
  return z;
}

double check_zero_locus_completeness(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const ZeroLocus locus = zero_locus(n);
    std::vector<bool> covered(locus.entries.size(), false);
    for (int i = -32; i <= 32; ++i)
      for (int j = -32; j <= 32; ++j) {
        const Complex root = newton_polish(Complex(0.1 * i, 0.1 * j), n);
        if (!(std::abs(pn_recurrence(root, n)) <= 1e-10) || std::abs(root) > 4.0)
          continue;
        double nearest = 10.0;
        for (std::size_t e = 0; e < locus.entries.size(); ++e) {
          const double d = std::abs(root - locus.entries[e].point);
          if (d < nearest) nearest = d;
          if (d <= 1e-6) covered[e] = true;
        }
        worst = std::max(worst, nearest);  // every found root must be enumerated
      }
    for (bool c : covered)
      if (!c) return 1.0;  // and every enumerated point must be findable
  }
  return worst;
}

double check_zero_locus_rotation_invariance(const VerifyOptions&, Sampler&) {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const ZeroLocus locus = zero_locus(n);
    for (const auto& e : locus.entries) {
      const Complex rotated = kThird * e.point;
      double nearest = 10.0;
      for (const auto& other : locus.entries)
        nearest = std::min(nearest, std::abs(rotated - other.point));
      worst = std::max(worst, nearest);
    }
  }
  return worst;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"curve-point-identity", 1e-9, check_curve_point_identity},
      {"angle-periodicity", 1e-14, check_angle_periodicity},
      {"rotation-invariance-eval", 1e-9, check_rotation_invariance_eval},
      {"conjugation-invariance-eval", 0.0, check_conjugation_invariance_eval},
      {"needle-geometry", 1e-9, check_needle_geometry},
      {"needle-on-curve", 1e-7, check_needle_on_curve},
      {"needle-separation", 0.5, check_needle_separation},
      {"tangent-intersection-closed-form", 1e-9, check_tangent_intersection_closed_form},
      {"tangent-intersection-containment", 1e-7, check_tangent_intersection_containment},
      {"tangent-line-degenerate-pairs", 0.5, check_tangent_line_degenerate_pairs},
      {"frame-structure", 1e-12, check_frame_structure},
      {"orthocenter-roundtrip-vertices", 1e-7, check_orthocenter_roundtrip_vertices},
      {"orthocenter-roundtrip-point", 1e-8, check_orthocenter_roundtrip_point},
      {"discriminant-consistency", 1e-9, check_discriminant_consistency},
      {"boundary-degeneracy", 1e-5, check_boundary_degeneracy},
      {"altitude-tangency", 1e-6, check_altitude_tangency},
      {"altitude-is-tangent-line", 1e-9, check_altitude_is_tangent_line},
      {"simson-feet-geometry", 1e-9, check_simson_feet_geometry},
      {"simson-line-coincidence", 1e-8, check_simson_line_coincidence},
      {"isogonal-needle-direction", 1e-9, check_isogonal_needle_direction},
      {"needle-vertices-roundtrip", 1e-6, check_needle_vertices_roundtrip},
      {"power-roots-vs-recurrence", 1e-7, check_power_roots_vs_recurrence},
      {"power-recurrence-vs-closed-form", 1e-10, check_power_recurrence_vs_closed_form},
      {"power-rotation-equivariance", 1e-9, check_power_rotation_equivariance},
      {"power-conjugation", 1e-10, check_power_conjugation},
      {"power-range-containment", 1e-7, check_power_range_containment},
      {"deltoid-maps-to-deltoid", 1e-7, check_deltoid_maps_to_deltoid},
      {"needle-image-consistency", 1e-7, check_needle_image_consistency},
      {"needle-image-on-needle", 1e-9, check_needle_image_on_needle},
      {"q-lucas-crosscheck", 1e-8, check_q_lucas_crosscheck},
      {"q-substitution-identity", 1e-8, check_q_substitution_identity},
      {"q-fibonacci-identity", 1e-7, check_q_fibonacci_identity},
      {"lucas-fibonacci-identity", 1e-7, check_lucas_fibonacci_identity},
      {"factorization-identity", 1e-8, check_factorization_identity},
      {"fibonacci-amplitude-roots", 1e-9, check_fibonacci_amplitude_roots},
      {"preimage-on-curve", 1e-6, check_preimage_on_curve},
      {"zero-locus-structure", 1e-8, check_zero_locus_structure},
      {"zero-locus-needle-concurrency", 1e-9, check_zero_locus_needle_concurrency},
      {"zero-locus-completeness", 1e-6, check_zero_locus_completeness},
      {"zero-locus-rotation-invariance", 1e-7, check_zero_locus_rotation_invariance},
  };
  return checks;
}

}  // namespace

std::size_t registered_check_count() { return registry().size(); }

std::vector<std::string> registered_check_names() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const Check& c : registry()) names.emplace_back(c.name);
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  results.reserve(registry().size());
  std::uint64_t salt = 0;
  for (const Check& c : registry()) {
    ++salt;
    Sampler sampler(options.seed ^ (0x9E3779B97F4A7C15ULL * salt));
    const double residual = c.worst_residual(options, sampler);
    const double tolerance = options.tolerance_override.value_or(c.tolerance);
    results.push_back(CheckResult{c.name, residual, tolerance, residual <= tolerance});
  }
  return results;
}

}  // namespace deltoid
