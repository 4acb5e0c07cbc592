#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "deltoid/curve.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/loci.hpp"
#include "deltoid/powers.hpp"
#include "deltoid/sampling.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace deltoid;
using testsupport::dist;

namespace {

using Coeffs = std::vector<std::int64_t>;

// Multiset match of a locus against expected points.
bool locus_matches(const ZeroLocus& locus, std::vector<Complex> expected,
                   double tolerance) {
  if (locus.entries.size() != expected.size()) return false;
  for (const auto& e : locus.entries) {
    auto it = std::min_element(expected.begin(), expected.end(),
                               [&](Complex a, Complex b) {
                                 return dist(a, e.point) < dist(b, e.point);
                               });
    if (it == expected.end() || dist(*it, e.point) > tolerance) return false;
    expected.erase(it);
  }
  return expected.empty();
}

}  // namespace

TEST_SUITE_BEGIN("loci");

TEST_CASE("first members of the polynomial families, by hand") {
  CHECK(lucas_poly(0).coefficients() == Coeffs{2});
  CHECK(lucas_poly(1).coefficients() == Coeffs{0, 1});
  CHECK(lucas_poly(2).coefficients() == Coeffs{2, 0, 1});
  CHECK(lucas_poly(3).coefficients() == Coeffs{0, 3, 0, 1});
  CHECK(lucas_poly(4).coefficients() == Coeffs{2, 0, 4, 0, 1});
  CHECK(lucas_poly(5).coefficients() == Coeffs{0, 5, 0, 5, 0, 1});

  CHECK(fibonacci_poly(0).is_zero());
  CHECK(fibonacci_poly(1).coefficients() == Coeffs{1});
  CHECK(fibonacci_poly(2).coefficients() == Coeffs{0, 1});
  CHECK(fibonacci_poly(3).coefficients() == Coeffs{1, 0, 1});
  CHECK(fibonacci_poly(4).coefficients() == Coeffs{0, 2, 0, 1});
  CHECK(fibonacci_poly(5).coefficients() == Coeffs{1, 0, 3, 0, 1});
  CHECK(fibonacci_poly(6).coefficients() == Coeffs{0, 3, 0, 4, 0, 1});

  CHECK(q_poly(1).coefficients() == Coeffs{0, 1});
  CHECK(q_poly(2).coefficients() == Coeffs{-2, 0, 1});
  CHECK(q_poly(3).coefficients() == Coeffs{0, -3, 0, 1});
  CHECK(q_poly(4).coefficients() == Coeffs{2, 0, -4, 0, 1});
  CHECK(q_poly(5).coefficients() == Coeffs{0, 5, 0, -5, 0, 1});
}

TEST_CASE("degree bounds and index validation") {
  CHECK(lucas_poly(64).degree() == 64);
  CHECK(fibonacci_poly(64).degree() == 63);
  CHECK(q_poly(64).degree() == 64);
  CHECK_THROWS_AS(lucas_poly(-1), IndexOutOfRange);
  CHECK_THROWS_AS(lucas_poly(65), IndexOutOfRange);
  CHECK_THROWS_AS(fibonacci_poly(65), IndexOutOfRange);
  CHECK_THROWS_AS(q_poly(0), IndexOutOfRange);
  CHECK_THROWS_AS(q_poly(65), IndexOutOfRange);
}

TEST_CASE("integer specializations: classical number sequences at x = 1") {
  const std::vector<double> fib = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  const std::vector<double> luc = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199};
  for (int n = 0; n < 12; ++n) {
    CHECK(fibonacci_poly(n)(1.0) == fib[n]);
    CHECK(lucas_poly(n)(1.0) == luc[n]);
  }
}

TEST_CASE("q relates to the even-index family by sign-alternating coefficients") {
  // q_n(A) = (-i)^n L_n(iA) means coefficient k flips sign by (-1)^((k-n)/2).
  for (int n = 1; n <= 30; ++n) {
    const auto lc = lucas_poly(n).coefficients();
    const auto qc = q_poly(n).coefficients();
    REQUIRE(lc.size() == qc.size());
    for (std::size_t k = 0; k < lc.size(); ++k) {
      if (lc[k] == 0) {
        CHECK(qc[k] == 0);
        continue;
      }
      const int parity = ((n - static_cast<int>(k)) / 2) % 2;
      CHECK(qc[k] == (parity == 0 ? lc[k] : -lc[k]));
    }
  }
}

TEST_CASE("q interpolates doubled cosines") {
  for (int n = 1; n <= 20; ++n)
    for (int k = 0; k < 60; ++k) {
      const double phi = -pi + two_pi * k / 60.0;
      const double value = q_poly(n)(2.0 * std::cos(phi));
      // Power-basis evaluation near |A| = 2 cancels heavily; measured worst
      // over a dense grid is ~2e-9 at n = 20.
      CHECK(std::abs(value - 2.0 * std::cos(n * phi)) <= 1e-8);
    }
}

TEST_CASE("value recurrences match the coefficient form at benign arguments") {
  Sampler s(51);
  for (int k = 0; k < 100; ++k) {
    const Complex x = {s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0)};
    for (int n : {0, 1, 2, 5, 9, 12}) {
      CHECK(dist(lucas_value(n, x), lucas_poly(n)(x)) <= 1e-8);
      CHECK(dist(fibonacci_value(n, x), fibonacci_poly(n)(x)) <= 1e-8);
    }
  }
}

TEST_CASE("closed form via the golden-ratio conjugate pair") {
  // L_n(x) = u^n + v^n and F_n(x) = (u^n - v^n)/(u - v) with
  // u, v = (x ± sqrt(x^2 + 4))/2.
  Sampler s(52);
  for (int k = 0; k < 100; ++k) {
    const double x = s.uniform(-2.5, 2.5);
    const double root = std::sqrt(x * x + 4.0);
    const double u = 0.5 * (x + root), v = 0.5 * (x - root);
    double un = 1.0, vn = 1.0;
    for (int n = 0; n <= 15; ++n) {
      // u^15 reaches ~7e6 at the interval ends, so last-bit noise lands
      // around 1e-8.
      CHECK(std::abs(lucas_poly(n)(x) - (un + vn)) <= 1e-7);
      CHECK(std::abs(fibonacci_poly(n)(x) - (un - vn) / root) <= 1e-7);
      un *= u;
      vn *= v;
    }
  }
}

TEST_CASE("squared-family identity, small cases by integer arithmetic") {
  // n = 3, x = 2: 14^2 - 8 * 5^2 = -4.
  CHECK(lucas_poly(3)(2.0) == 14.0);
  CHECK(fibonacci_poly(3)(2.0) == 5.0);
  CHECK(lucas_fib_identity_residual(3, 2.0) == 0.0);
  CHECK(lucas_fib_identity_residual(1, 1.0) == 0.0);
  CHECK(lucas_fib_identity_residual(2, 0.0) == 0.0);
  Sampler s(53);
  for (int k = 0; k < 200; ++k) {
    const double x = s.uniform(-2.0, 2.0);
    for (int n = 0; n <= 10; ++n)
      CHECK(lucas_fib_identity_residual(n, x) <= 1e-6);
    // The residual is absolute while the squared terms grow like
    // (1 + sqrt(2))^(2n), so for larger n only a relative bound is fair.
    for (int n = 11; n <= 20; ++n) {
      const double l = lucas_poly(n)(x);
      const double f = fibonacci_poly(n)(x);
      const double scale =
          std::max({1.0, l * l, (x * x + 4.0) * f * f});
      CHECK(lucas_fib_identity_residual(n, x) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("quartic factorization along the parametrized family") {
  // B = 0, w = 1, n = 1: both sides equal the quartic value at 1, i.e. -16.
  CHECK(deltoid_eval({1.0, 0.0}) == -16.0);
  CHECK(factorization_residual(0.0, Angle(0.0), 1) <= 1e-12);
  // B = 2 collapses the right side to zero: the curve maps into the curve.
  Sampler s(54);
  for (int k = 0; k < 50; ++k)
    CHECK(factorization_residual(2.0, s.angle(), 1 + (k % 5)) <= 1e-10);
  // Grid over amplitude, angle, and degree.
  for (double b = -3.0; b <= 3.0 + 1e-12; b += 0.5)
    for (int j = 0; j < 36; ++j)
      for (int n : {1, 2, 3, 5, 8})
        CHECK(factorization_residual(b, Angle(-pi + two_pi * j / 36.0), n) <= 1e-8);
}

TEST_CASE("amplitude lists, hand-evaluated") {
  CHECK(fibonacci_amplitudes(1).empty());
  CHECK(fibonacci_amplitudes(2) == std::vector<double>{0.0});
  const auto a3 = fibonacci_amplitudes(3);
  REQUIRE(a3.size() == 1);
  CHECK(a3[0] == doctest::Approx(1.0).epsilon(1e-14));

  // Degree 5 produces the golden ratio and its reciprocal.
  const auto a5 = fibonacci_amplitudes(5);
  REQUIRE(a5.size() == 2);
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(a5[0] == doctest::Approx(golden - 1.0).epsilon(1e-14));
  CHECK(a5[1] == doctest::Approx(golden).epsilon(1e-14));

  const auto a12 = fibonacci_amplitudes(12);
  REQUIRE(a12.size() == 6);
  CHECK(a12[0] == 0.0);
  CHECK(a12[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a12[3] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a12[4] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(a12[5] == doctest::Approx(2.0 * std::sin(5.0 * pi / 12.0)).epsilon(1e-14));
}

TEST_CASE("amplitude lists are sorted and annihilate the imaginary evaluation") {
  for (int n = 1; n <= 20; ++n) {
    const auto amps = fibonacci_amplitudes(n);
    CHECK(std::is_sorted(amps.begin(), amps.end()));
    const std::size_t expected =
        (n % 2 == 0) ? static_cast<std::size_t>((n - 2) / 2 + 1)
                     : static_cast<std::size_t>(n >= 3 ? (n - 3) / 2 + 1 : 0);
    CHECK(amps.size() == expected);
    for (double a : amps) {
      CHECK(a >= 0.0);
      CHECK(a < 2.0);
      CHECK(std::abs(fibonacci_poly(n)(Complex{0.0, a})) <= 1e-9);
    }
  }
}

TEST_CASE("preimage curve points") {
  CHECK(dist(preimage_curve_point(1.0, Angle(0.0)), {2.0, 0.0}) == 0.0);
  CHECK(dist(preimage_curve_point(0.0, Angle(0.9)), unit(-1.8)) <= 1e-15);
  Sampler s(55);
  for (int k = 0; k < 100; ++k) {
    const Angle theta = s.angle();
    CHECK(dist(preimage_curve_point(2.0, theta), parametrize(theta)) <= 1e-15);
  }
}

TEST_CASE("preimage curves land on the curve under their power map") {
  Sampler s(56);
  for (int n : {2, 3, 5, 12}) {
    auto amps = fibonacci_amplitudes(n);
    amps.push_back(2.0);
    for (double a : amps)
      for (int k = 0; k < 100; ++k)
        CHECK(preimage_deltoid_residual(a, s.angle(), n) <= 1e-6);
  }
}

TEST_CASE("unit circle is the zero-amplitude curve of even degrees") {
  // p_2 of e^{-2i t} is a needle endpoint, hence on the curve.
  for (int k = 0; k < 90; ++k) {
    const double t = -pi + two_pi * k / 90.0;
    const Complex image = pn_recurrence(unit(-2.0 * t), 2);
    CHECK(std::abs(deltoid_eval(image)) <= 1e-10);
  }
}

TEST_CASE("invalid amplitudes are rejected") {
  CHECK_THROWS_AS(preimage_deltoid_residual(0.5, Angle(0.3), 3), InvalidAmplitude);
  CHECK_THROWS_AS(preimage_deltoid_residual(1.9, Angle(0.3), 2), InvalidAmplitude);
  // Amplitudes within 1e-9 of a valid one are accepted.
  CHECK_NOTHROW(preimage_deltoid_residual(1.0 + 5e-10, Angle(0.3), 3));
}

TEST_CASE("zero locus of degree 1 is the origin") {
  const ZeroLocus locus = zero_locus(1);
  CHECK(locus.n == 1);
  REQUIRE(locus.entries.size() == 1);
  CHECK(dist(locus.entries[0].point, {0.0, 0.0}) <= 1e-12);
  // Indices are a permutation of {0, 1, 2} and the needle angles match them.
  std::set<int> idx(locus.entries[0].indices.begin(), locus.entries[0].indices.end());
  CHECK(idx == std::set<int>{0, 1, 2});
  for (int j = 0; j < 3; ++j)
    CHECK(locus.entries[0].needle_thetas[j] ==
          doctest::Approx(-pi * locus.entries[0].indices[j] / 3.0).epsilon(1e-14));
}

TEST_CASE("zero locus of degree 2, fully hand-enumerated") {
  const double s3 = std::sqrt(3.0);
  const std::vector<Complex> expected = {
      {2.0, 0.0}, {0.0, 0.0}, {-1.0, s3}, {-1.0, -s3}};
  CHECK(locus_matches(zero_locus(2), expected, 1e-12));
}

TEST_CASE("zero locus sizes, residuals, and needle concurrency") {
  for (int n = 1; n <= 8; ++n) {
    const ZeroLocus locus = zero_locus(n);
    CHECK(locus.entries.size() == static_cast<std::size_t>(n) * n);
    for (const auto& e : locus.entries) {
      CHECK(e.pn_abs <= 1e-8);
      CHECK(std::abs(pn_recurrence(e.point, n)) <= 1e-8);
      for (int j = 0; j < 3; ++j) {
        const TangentLine line = tangent_line(Angle(e.needle_thetas[j]));
        CHECK(std::abs(signed_distance(line.as_line(), e.point)) <= 1e-9);
        // On the chord itself, not just the extended line.
        const double along =
            ((e.point - line.anchor) * std::conj(line.direction)).real() / 2.0;
        CHECK(std::abs(along) <= 1.0 + 1e-9);
      }
      // Index triple is consistent: j3 = -(j1 + j2) mod 3n, j1 != j2 (mod 3).
      CHECK((e.indices[0] + e.indices[1] + e.indices[2]) % (3 * n) == 0);
      CHECK(e.indices[0] % 3 != e.indices[1] % 3);
    }
  }
}

TEST_CASE("degree 3 locus avoids the origin") {
  // p_3(0) = 3, so no zero sits at 0 even though the index pattern of
  // degree 1 would suggest it.
  const ZeroLocus locus = zero_locus(3);
  CHECK(locus.entries.size() == 9);
  for (const auto& e : locus.entries)
    CHECK(std::abs(e.point) > 0.5);
}

TEST_CASE("zero locus points are pairwise separated far beyond the merge radius") {
  for (int n : {2, 3, 4, 8, 12}) {
    const ZeroLocus locus = zero_locus(n);
    double min_gap = 10.0;
    for (std::size_t i = 0; i < locus.entries.size(); ++i)
      for (std::size_t j = i + 1; j < locus.entries.size(); ++j)
        min_gap = std::min(min_gap, dist(locus.entries[i].point,
                                         locus.entries[j].point));
    CHECK(min_gap >= 1e-3);
  }
}

TEST_CASE("zero locus set is invariant under the third-turn rotation") {
  const Complex omega = unit(two_pi / 3.0);
  for (int n = 1; n <= 6; ++n) {
    const ZeroLocus locus = zero_locus(n);
    for (const auto& e : locus.entries) {
      double best = 10.0;
      for (const auto& f : locus.entries)
        best = std::min(best, dist(omega * e.point, f.point));
      CHECK(best <= 1e-9);
    }
  }
}

TEST_CASE("zero locus index validation") {
  CHECK_THROWS_AS(zero_locus(0), IndexOutOfRange);
  CHECK_THROWS_AS(zero_locus(-2), IndexOutOfRange);
  CHECK_THROWS_AS(zero_locus(65), IndexOutOfRange);
}

TEST_SUITE_END();
