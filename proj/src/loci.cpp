#include "deltoid/loci.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "deltoid/curve.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/powers.hpp"

namespace deltoid {

namespace {

void check_poly_index(int n, int lo) {
  if (n < lo || n > poly_max_n)
    throw IndexOutOfRange("polynomial index out of range");
}

IntegerPolynomial shift_times_x(const IntegerPolynomial& p) {
  std::vector<std::int64_t> c(p.coefficients().size() + 1, 0);
  std::copy(p.coefficients().begin(), p.coefficients().end(), c.begin() + 1);
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial add(const IntegerPolynomial& a, const IntegerPolynomial& b, std::int64_t sign_b) {
  std::vector<std::int64_t> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) c[k] += a.coefficients()[k];
  for (std::size_t k = 0; k < b.coefficients().size(); ++k) c[k] += sign_b * b.coefficients()[k];
  return IntegerPolynomial(std::move(c));
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

double IntegerPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + static_cast<double>(*it);
  return acc;
}

Complex IntegerPolynomial::operator()(Complex x) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + static_cast<double>(*it);
  return acc;
}

IntegerPolynomial lucas_poly(int n) {
  check_poly_index(n, 0);
  IntegerPolynomial prev({2});
  if (n == 0) return prev;
  IntegerPolynomial cur({0, 1});
  for (int k = 2; k <= n; ++k) {
    IntegerPolynomial next = add(shift_times_x(cur), prev, +1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntegerPolynomial fibonacci_poly(int n) {
  check_poly_index(n, 0);
  IntegerPolynomial prev(std::vector<std::int64_t>{});  // F_0 = 0
  if (n == 0) return prev;
  IntegerPolynomial cur({1});
  for (int k = 2; k <= n; ++k) {
    IntegerPolynomial next = add(shift_times_x(cur), prev, +1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntegerPolynomial q_poly(int n) {
  check_poly_index(n, 1);
  IntegerPolynomial prev({0, 1});  // q_1 = A
  if (n == 1) return prev;
  IntegerPolynomial cur({-2, 0, 1});  // q_2 = A^2 - 2
  for (int k = 3; k <= n; ++k) {
    IntegerPolynomial next = add(shift_times_x(cur), prev, -1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Complex lucas_value(int n, Complex x) {
  check_poly_index(n, 0);
  Complex prev(2.0, 0.0);
  if (n == 0) return prev;
  Complex cur = x;
  for (int k = 2; k <= n; ++k) {
    const Complex next = x * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex fibonacci_value(int n, Complex x) {
  check_poly_index(n, 0);
  Complex prev(0.0, 0.0);
  if (n == 0) return prev;
  Complex cur(1.0, 0.0);
  for (int k = 2; k <= n; ++k) {
    const Complex next = x * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double lucas_fib_identity_residual(int n, double x) {
  check_poly_index(n, 0);
  if (!std::isfinite(x)) throw std::invalid_argument("x must be finite");
  const double l = lucas_value(n, Complex(x, 0.0)).real();
  const double f = fibonacci_value(n, Complex(x, 0.0)).real();
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return std::abs(l * l - (x * x + 4.0) * f * f - 4.0 * sign);
}

double factorization_residual(double b, Angle w_angle, int n) {
  if (n < 1) throw std::invalid_argument("factorization needs n >= 1");
  if (!std::isfinite(b)) throw std::invalid_argument("B must be finite");
  const double a = w_angle.radians();
  const Complex z = b * unit(-n * a) + unit(2.0 * n * a);
  const double lhs = deltoid_eval(z);
  const Complex w3n = unit(3.0 * n * a);
  const Complex inner = 1.0 - b * w3n + unit(6.0 * n * a);
  const Complex rhs = (b - 2.0) * (b + 2.0) * unit(-6.0 * n * a) * inner * inner;
  return std::abs(lhs - rhs.real());
}

std::vector<double> fibonacci_amplitudes(int n) {
  check_poly_index(n, 1);
  std::vector<double> values;
  if (n % 2 == 0) {
    for (int j = 0; j <= (n - 2) / 2; ++j)
      values.push_back(2.0 * std::sin(j * pi / n));
  } else {
    for (int j = 0; j <= (n - 3) / 2; ++j)
      values.push_back(2.0 * std::sin((2 * j + 1) * pi / (2.0 * n)));
  }
  return values;  // already ascending: the arguments stay below pi/2
}

Complex preimage_curve_point(double a, Angle theta) {
  if (!std::isfinite(a)) throw std::invalid_argument("amplitude must be finite");
  const double t = theta.radians();
  return a * unit(t) + unit(-2.0 * t);
}

double preimage_deltoid_residual(double a, Angle theta, int n) {
  check_poly_index(n, 1);
  bool valid = std::abs(a - 2.0) <= 1e-9;
  if (!valid)
    for (double amp : fibonacci_amplitudes(n))
      if (std::abs(a - amp) <= 1e-9) {
        valid = true;
        break;
      }
  if (!valid)
    throw InvalidAmplitude("amplitude is neither 2 nor a Fibonacci amplitude of n");
  return std::abs(deltoid_eval(pn_recurrence(preimage_curve_point(a, theta), n)));
}

ZeroLocus zero_locus(int n) {
  check_poly_index(n, 1);
  const int m = 3 * n;

  ZeroLocus locus;
  locus.n = n;
  for (int j1 = 0; j1 < m; ++j1)
    for (int j2 = 0; j2 < m; ++j2) {
      if (j1 % 3 == j2 % 3) continue;
      const int j3 = ((-(j1 + j2)) % m + m) % m;
      const Complex point = unit(two_pi * j1 / m) + unit(two_pi * j2 / m) + unit(two_pi * j3 / m);
      bool seen = false;
      for (const auto& entry : locus.entries)
        if (std::abs(entry.point - point) <= tol::dedup) {
          seen = true;
          break;
        }
      if (seen) continue;
      ZeroLocus::Entry entry;
      entry.indices = {j1, j2, j3};
      entry.point = point;
      entry.needle_thetas = {-pi * j1 / m, -pi * j2 / m, -pi * j3 / m};
      entry.pn_abs = std::abs(pn_recurrence(point, n));
      locus.entries.push_back(entry);
    }

  if (locus.entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::runtime_error("zero locus enumeration did not produce n^2 points");
  return locus;
}

}  // namespace deltoid
