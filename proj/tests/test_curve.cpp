#include <cmath>
#include <vector>

#include "deltoid/curve.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/sampling.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace deltoid;
using testsupport::dist;

TEST_SUITE_BEGIN("curve");

TEST_CASE("quartic values at hand-computed points") {
  CHECK(deltoid_eval({0.0, 0.0}) == -27.0);
  CHECK(deltoid_eval({3.0, 0.0}) == 0.0);   // cusp
  CHECK(deltoid_eval({4.0, 0.0}) == 5.0);   // 256 + 288 - 512 - 27
  CHECK(deltoid_eval({-1.0, 0.0}) == 0.0);  // 1 + 18 + 8 - 27
  CHECK(deltoid_eval({1.0, 1.0}) == 29.0);  // 4 + 36 - 8 + 24 - 27
  CHECK(deltoid_eval({-1.0, 2.0}) == 0.0);  // 25 + 90 + 8 - 96 - 27
}

TEST_CASE("classification verdicts and the on-band") {
  CHECK(classify({0.0, 0.0}).verdict == Region::Inside);
  CHECK(classify({3.0, 0.0}).verdict == Region::On);
  CHECK(classify({4.0, 0.0}).verdict == Region::Outside);
  CHECK(classify({0.0, 0.0}).value == -27.0);
  CHECK(classify({4.0, 0.0}).value == 5.0);
  // Points whose quartic value sits within the on-band classify On.
  CHECK(classify({3.0 + 1e-12, 0.0}).verdict == Region::On);
  CHECK(classify({3.1, 0.0}).verdict == Region::Outside);
  CHECK(region_name(Region::Inside) == std::string("Inside"));
  CHECK(region_name(Region::On) == std::string("On"));
  CHECK(region_name(Region::Outside) == std::string("Outside"));
}

TEST_CASE("classification rejects non-finite input") {
  CHECK_THROWS_AS(classify({std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(classify({0.0, HUGE_VAL}), std::invalid_argument);
}

TEST_CASE("parametrization hits the three cusps and known curve points") {
  CHECK(dist(parametrize(Angle(0.0)), {3.0, 0.0}) == 0.0);
  CHECK(dist(parametrize(Angle(two_pi / 3.0)), 3.0 * unit(two_pi / 3.0)) < 1e-15);
  CHECK(dist(parametrize(Angle(-two_pi / 3.0)), 3.0 * unit(-two_pi / 3.0)) < 1e-15);
  CHECK(dist(parametrize(Angle(pi)), {-1.0, 0.0}) < 1e-15);
  CHECK(dist(parametrize(Angle(pi / 2.0)), {-1.0, 2.0}) < 1e-15);
}

TEST_CASE("every parametrized point satisfies the quartic") {
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const Angle theta(-pi + two_pi * k / 10000.0);
    worst = std::max(worst, std::abs(deltoid_eval(parametrize(theta))));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("quartic restricted to the unit circle is -8(1 + cos 3t)") {
  // Implies the circle lies inside the region, touching it where cos 3t = -1.
  double worst = 0.0;
  for (int k = 0; k < 3600; ++k) {
    const double t = -pi + two_pi * k / 3600.0;
    worst = std::max(worst,
                     std::abs(deltoid_eval(unit(t)) + 8.0 * (1.0 + std::cos(3.0 * t))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("angle normalization is idempotent and 2pi-periodic") {
  Sampler s(11);
  for (int k = 0; k < 1000; ++k) {
    const double raw = s.uniform(-50.0, 50.0);
    const Angle a(raw);
    CHECK(a.radians() > -pi);
    CHECK(a.radians() <= pi);
    CHECK(Angle(a.radians()).radians() == a.radians());
    CHECK(std::abs(Angle(raw + two_pi).radians() - a.radians()) <= 1e-13);
    CHECK(dist(parametrize(Angle(raw)), parametrize(Angle(raw - two_pi))) <= 1e-13);
  }
  CHECK_THROWS_AS(Angle(std::nan("")), std::invalid_argument);
}

TEST_CASE("needle at theta = 0 and theta = pi/2, by hand") {
  const Needle n0 = needle(Angle(0.0));
  CHECK(dist(n0.end_plus, {3.0, 0.0}) == 0.0);
  CHECK(dist(n0.end_minus, {-1.0, 0.0}) == 0.0);
  CHECK(dist(n0.midpoint, {1.0, 0.0}) == 0.0);
  CHECK(dist(n0.tangency, {3.0, 0.0}) == 0.0);
  CHECK(n0.tangency_lambda() == doctest::Approx(1.0).epsilon(1e-12));

  const Needle n1 = needle(Angle(pi / 2.0));
  CHECK(dist(n1.end_plus, {-1.0, 2.0}) < 1e-15);
  CHECK(dist(n1.end_minus, {-1.0, -2.0}) < 1e-15);
  CHECK(dist(n1.midpoint, {-1.0, 0.0}) < 1e-15);
  CHECK(dist(n1.tangency, {-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(n1.tangency_lambda()) < 1e-15);  // cos(3 pi / 2)
}

TEST_CASE("needle structure: length, midpoint, tangency barycentric") {
  Sampler s(12);
  for (int k = 0; k < 1000; ++k) {
    const Angle theta = s.angle();
    const Needle nd = needle(theta);
    CHECK(dist(nd.end_plus, nd.end_minus) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(nd.midpoint) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dist(0.5 * (nd.end_plus + nd.end_minus), nd.midpoint) <= 1e-12);
    CHECK(nd.tangency_lambda() ==
          doctest::Approx(std::cos(3.0 * theta.radians())).epsilon(1e-9));
    CHECK(std::abs(deltoid_eval(nd.end_plus)) <= 1e-9);
    CHECK(std::abs(deltoid_eval(nd.end_minus)) <= 1e-9);
    CHECK(std::abs(deltoid_eval(nd.tangency)) <= 1e-9);
    CHECK(dist(nd.tangency, tangency_point(theta)) <= 1e-12);
    CHECK(dist(tangency_point(theta), parametrize(Angle(-2.0 * theta.radians()))) <=
          1e-12);
  }
}

TEST_CASE("tangent line parametrizes the needle and its extension") {
  Sampler s(13);
  for (int k = 0; k < 300; ++k) {
    const Angle theta = s.angle();
    const TangentLine tl = tangent_line(theta);
    const Needle nd = needle(theta);
    CHECK(dist(tl.anchor, nd.midpoint) <= 1e-15);
    CHECK(std::abs(tl.direction) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dist(tl.point_at(1.0), nd.end_plus) <= 1e-12);
    CHECK(dist(tl.point_at(-1.0), nd.end_minus) <= 1e-12);
    CHECK(dist(tl.point_at(nd.tangency_lambda()), nd.tangency) <= 1e-9);
    // Off the chord the line leaves the closed region.
    CHECK(classify(tl.point_at(1.5)).verdict == Region::Outside);
    CHECK(classify(tl.point_at(-2.5)).verdict == Region::Outside);
    // The line is genuinely tangent: |quartic| dips to zero along it.
    CHECK(line_min_abs_eval(tl.as_line()) <= 1e-9);
  }
}

TEST_CASE("tangent intersection at perpendicular base angles, by hand") {
  const TangentIntersection ti = tangent_intersection(Angle(0.0), Angle(pi / 2.0));
  CHECK(dist(ti.point, {-1.0, 0.0}) <= 1e-15);
  CHECK(ti.lambda1 == doctest::Approx(-1.0).epsilon(1e-12));  // cos(0 + pi)
  CHECK(std::abs(ti.lambda2) <= 1e-12);                       // cos(pi / 2)
}

TEST_CASE("tangent intersection matches the closed form and stays in the region") {
  Sampler s(14);
  for (int k = 0; k < 1000; ++k) {
    const auto [t1, t2] = s.distinct_tangent_pair();
    const TangentIntersection ti = tangent_intersection(t1, t2);
    const double a1 = t1.radians(), a2 = t2.radians();
    const Complex expected =
        unit(2.0 * (a1 + a2)) + unit(-2.0 * a1) + unit(-2.0 * a2);
    CHECK(dist(ti.point, expected) <= 1e-9);
    CHECK(std::abs(ti.lambda1 - std::cos(a1 + 2.0 * a2)) <= 1e-9);
    CHECK(std::abs(ti.lambda2 - std::cos(2.0 * a1 + a2)) <= 1e-9);
    CHECK(dist(tangent_line(t1).point_at(ti.lambda1), ti.point) <= 1e-9);
    CHECK(dist(tangent_line(t2).point_at(ti.lambda2), ti.point) <= 1e-9);
    CHECK(classify(ti.point).verdict != Region::Outside);
  }
}

TEST_CASE("coincident tangent lines are rejected") {
  CHECK_THROWS_AS(tangent_intersection(Angle(0.3), Angle(0.3)), CoincidentLines);
  CHECK_THROWS_AS(tangent_intersection(Angle(0.3), Angle(0.3 + pi)), CoincidentLines);
  CHECK_THROWS_AS(tangent_intersection(Angle(-1.2), Angle(-1.2 - pi)), CoincidentLines);
}

TEST_CASE("frame at theta = 0, by hand") {
  const Frame fr = frame(Angle(0.0));
  CHECK(dist(fr.alpha, {1.0, 0.0}) == 0.0);
  CHECK(dist(fr.alpha_prime, {-1.0, 0.0}) == 0.0);
  CHECK(dist(fr.beta, {1.0, 0.0}) == 0.0);
  CHECK(dist(fr.beta_prime, {-1.0, 0.0}) == 0.0);
  CHECK(dist(fr.gamma, {3.0, 0.0}) == 0.0);
  CHECK(dist(fr.gamma_prime, {-1.0, 0.0}) == 0.0);
  CHECK(dist(fr.delta, {3.0, 0.0}) == 0.0);
}

TEST_CASE("frame structure: perpendicular tangent pair through beta_prime") {
  Sampler s(15);
  for (int k = 0; k < 500; ++k) {
    const Angle theta = s.angle();
    const Frame fr = frame(theta);
    const double t = theta.radians();
    CHECK(dist(fr.alpha, unit(t)) <= 1e-15);
    CHECK(dist(fr.alpha_prime, -fr.alpha) <= 1e-15);
    CHECK(dist(fr.beta, unit(-2.0 * t)) <= 1e-15);
    CHECK(dist(fr.beta_prime, -fr.beta) <= 1e-15);
    CHECK(dist(fr.gamma, fr.beta + 2.0 * fr.alpha) <= 1e-15);
    CHECK(dist(fr.gamma_prime, fr.beta - 2.0 * fr.alpha) <= 1e-15);
    CHECK(dist(fr.delta, unit(4.0 * t) + 2.0 * fr.beta) <= 1e-15);
    // alpha is the midpoint of [gamma, beta'].
    CHECK(dist(0.5 * (fr.gamma + fr.beta_prime), fr.alpha) <= 1e-12);
    // L and L' are perpendicular and meet at beta'.
    const Complex d1 = fr.line_l.direction, d2 = fr.line_l_prime.direction;
    CHECK(std::abs(d1.real() * d2.real() + d1.imag() * d2.imag()) <= 1e-12);
    CHECK(std::abs(signed_distance(fr.line_l.as_line(), fr.beta_prime)) <= 1e-12);
    CHECK(std::abs(signed_distance(fr.line_l_prime.as_line(), fr.beta_prime)) <= 1e-12);
    CHECK(std::abs(signed_distance(fr.line_l.as_line(), fr.gamma)) <= 1e-12);
    CHECK(std::abs(signed_distance(fr.line_l.as_line(), fr.alpha)) <= 1e-12);
    CHECK(std::abs(signed_distance(fr.line_l_prime.as_line(), fr.gamma_prime)) <= 1e-12);
    CHECK(std::abs(signed_distance(fr.line_l_prime.as_line(), fr.alpha_prime)) <= 1e-12);
    // gamma, gamma' and delta are points of the curve.
    CHECK(std::abs(deltoid_eval(fr.gamma)) <= 1e-9);
    CHECK(std::abs(deltoid_eval(fr.gamma_prime)) <= 1e-9);
    CHECK(std::abs(deltoid_eval(fr.delta)) <= 1e-9);
  }
}

TEST_CASE("line_min_abs_eval separates tangent lines from secants and misses") {
  // A chord through the interior: the quartic changes sign, so the minimum
  // of |quartic| along it is a genuine zero.
  CHECK(line_min_abs_eval(Line{{0.0, 0.0}, {1.0, 0.0}}) <= 1e-9);
  // A line far outside never approaches the curve.
  CHECK(line_min_abs_eval(Line{{0.0, 5.0}, {1.0, 0.0}}) > 100.0);
}

TEST_SUITE_END();
