#pragma once

// Special loci tied to the power maps: Lucas and Fibonacci polynomials,
// the Chebyshev-like family q_n (q_1 = A, q_2 = A^2 - 2,
// q_n = A q_{n-1} - q_{n-2}), curves A e^{i theta} + e^{-2i theta} that p_n
// carries onto the deltoid when F_n(iA) = 0 or A = 2, and the n^2 points
// where p_n vanishes.

#include <array>
#include <cstdint>
#include <vector>

#include "deltoid/geometry.hpp"

namespace deltoid {

inline constexpr int poly_max_n = 64;

// Dense integer polynomial, coefficients ascending by degree, no trailing
// zeros (the zero polynomial stores nothing).
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero

  double operator()(double x) const;
  Complex operator()(Complex x) const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  std::vector<std::int64_t> c_;
};

// L_0 = 2, L_1 = x, L_n = x L_{n-1} + L_{n-2}, for 0 <= n <= 64.
IntegerPolynomial lucas_poly(int n);

// F_0 = 0, F_1 = 1, F_n = x F_{n-1} + F_{n-2}, for 0 <= n <= 64.
IntegerPolynomial fibonacci_poly(int n);

// q_1 = A, q_2 = A^2 - 2, q_n = A q_{n-1} - q_{n-2}, for 1 <= n <= 64.
// Coefficient-wise q_n(A) = (-i)^n L_n(iA).
IntegerPolynomial q_poly(int n);

// Value recurrences (numerically stable at arguments where the coefficient
// expansion cancels heavily, e.g. imaginary x of modulus near 2).
Complex lucas_value(int n, Complex x);
Complex fibonacci_value(int n, Complex x);

// |L_n(x)^2 - (x^2+4) F_n(x)^2 - 4(-1)^n|; zero in exact arithmetic.
double lucas_fib_identity_residual(int n, double x);

// Residual of the parametrized factorization of the quartic: for
// z = w^{-n} B + w^{2n} with w = e^{i w_angle},
//   quartic(z) = (B-2)(B+2) w^{-6n} (1 - B w^{3n} + w^{6n})^2.
double factorization_residual(double b, Angle w_angle, int n);

// Amplitudes A >= 0 with F_n(iA) = 0 and A e^{i theta} + e^{-2i theta}
// meaningful: even n gives 2 sin(j pi / n) for j = 0..(n-2)/2, odd n gives
// 2 sin((2j+1) pi / (2n)) for j = 0..(n-3)/2.  Sorted ascending; empty for
// n = 1.  Together with A = 2 these are the valid preimage amplitudes.
std::vector<double> fibonacci_amplitudes(int n);

// Point A e^{i theta} + e^{-2i theta} of the preimage curve with amplitude A.
Complex preimage_curve_point(double a, Angle theta);

// |deltoid_eval(p_n(preimage point))|.  Requires A in {2} union
// fibonacci_amplitudes(n) within 1e-9; throws InvalidAmplitude otherwise.
double preimage_deltoid_residual(double a, Angle theta, int n);

// The n^2 points where p_n vanishes: e^{2 pi i j1/3n} + e^{2 pi i j2/3n} +
// e^{2 pi i j3/3n} over 0 <= j1, j2 < 3n with j1 != j2 (mod 3) and
// j3 = -(j1+j2) mod 3n.  Each point lies on the three needles with base
// angles -pi j_k / 3n.
struct ZeroLocus {
  struct Entry {
    std::array<int, 3> indices;         // representative (j1, j2, j3)
    Complex point;
    std::array<double, 3> needle_thetas;  // -pi j_k / (3n)
    double pn_abs;                      // |p_n(point)| via the recurrence
  };

  int n = 0;
  std::vector<Entry> entries;  // exactly n^2, in first-seen enumeration order
};

ZeroLocus zero_locus(int n);

}  // namespace deltoid
