#include "deltoid/powers.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <vector>

#include "deltoid/errors.hpp"
#include "deltoid/triangle.hpp"

namespace deltoid {

namespace {

using BigComplex = boost::multiprecision::cpp_complex_50;
using Int128 = __int128;

// (a+b+c-1)! fits __int128 for a+b+c-1 <= 31.
const Int128* factorials() {
  static const auto table = [] {
    static Int128 f[33];
    f[0] = 1;
    for (int k = 1; k <= 32; ++k) f[k] = f[k - 1] * k;
    return f;
  }();
  return table;
}

// n * (a+b+c-1)! / (a! b! c!), an exact integer for a + 2b + 3c = n.
double power_sum_coefficient(int n, int a, int b, int c) {
  const Int128* fact = factorials();
  const int s = a + b + c;
  Int128 num = fact[s - 1] * n;
  num /= fact[a];  // exact: a <= s-1, or a == s == n where the quotient is 1
  const Int128 den = fact[b] * fact[c];
  num /= den;  // exact by the integrality of the power-sum expansion
  return static_cast<double>(num);
}

}  // namespace

Complex ipow(Complex z, long long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result(1.0, 0.0);
  Complex base = z;
  unsigned long long e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1ull) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Complex pn_via_roots(Complex z_h, int n) {
  const AmenableTriangle t = vertices_from_orthocenter(z_h);
  Complex sum(0.0, 0.0);
  // The vertices sit exactly on the unit circle, so the inverse power is the
  // conjugate power.
  for (const Complex& z : t.vertices())
    sum += n >= 0 ? ipow(z, n) : ipow(std::conj(z), -static_cast<long long>(n));
  return sum;
}

Complex pn_recurrence(Complex z, int n) {
  if (n < 0) throw NegativeIndex("the power-sum recurrence needs n >= 0");
  require_finite(z);
  const Complex zb = std::conj(z);
  Complex p0(3.0, 0.0);
  if (n == 0) return p0;
  Complex p1 = z;
  if (n == 1) return p1;
  Complex p2 = z * z - 2.0 * zb;
  if (n == 2) return p2;
  for (int k = 3; k <= n; ++k) {
    const Complex pk = z * p2 - zb * p1 + p0;
    p0 = p1;
    p1 = p2;
    p2 = pk;
  }
  return p2;
}

Complex pn_closed_form(Complex z, int n) {
  if (n < 1 || n > closed_form_max_n)
    throw IndexOutOfRange("closed form is defined for 1 <= n <= 32");
  require_finite(z);

  // The expansion cancels heavily for |z| > 1 (terms grow to ~1e9 by n = 32
  // while the value stays bounded by 3 on the region), so the powers and the
  // sum are accumulated in extended precision and rounded once at the end.
  const BigComplex zw(z.real(), z.imag());
  const BigComplex ww(-z.real(), z.imag());  // -conj(z)
  std::vector<BigComplex> zp(n + 1), wp(n + 1);
  zp[0] = 1;
  wp[0] = 1;
  for (int k = 1; k <= n; ++k) {
    zp[k] = zp[k - 1] * zw;
    wp[k] = wp[k - 1] * ww;
  }

  BigComplex acc = 0;
  for (int c = 0; 3 * c <= n; ++c)
    for (int b = 0; 2 * b + 3 * c <= n; ++b) {
      const int a = n - 2 * b - 3 * c;
      acc += power_sum_coefficient(n, a, b, c) * zp[a] * wp[b];
    }
  return Complex(acc.real().convert_to<double>(), acc.imag().convert_to<double>());
}

Complex needle_image(Angle theta, double lambda, int n) {
  if (!std::isfinite(lambda) || std::abs(lambda) > 1.0 + tol::geom)
    throw LambdaOutOfRange("needle parameter must lie in [-1, 1]");
  const double psi = std::acos(std::clamp(lambda, -1.0, 1.0));
  const double t = theta.radians();
  return unit(-2.0 * n * t) + 2.0 * std::cos(n * psi) * unit(n * t);
}

}  // namespace deltoid
