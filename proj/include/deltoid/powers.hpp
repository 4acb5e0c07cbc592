#pragma once

// Power sums p_n(z) = z_1^n + z_2^n + z_3^n over the amenable triangle with
// orthocenter z.  Three routes:
//  - roots: solve the vertex cubic and raise the roots to the n-th power
//    (ground truth; accepts any integer n, requires z inside or on);
//  - recurrence: p_n = z p_{n-1} - conj(z) p_{n-2} + p_{n-3} from
//    p_0 = 3, p_1 = z, p_2 = z^2 - 2 conj(z) (production default, n >= 0,
//    defined formally for every z);
//  - closed form: the combinatorial expansion
//    p_n = n * sum_{a+2b+3c=n} ((a+b+c-1)!/(a!b!c!)) z^a (-conj z)^b,
//    1 <= n <= 32, exact integer coefficients, high-precision accumulation.
// p_n maps the closed region onto itself and the boundary to the boundary.

#include "deltoid/geometry.hpp"

namespace deltoid {

inline constexpr int closed_form_max_n = 32;

Complex pn_via_roots(Complex z_h, int n);
Complex pn_recurrence(Complex z, int n);
Complex pn_closed_form(Complex z, int n);

// Integer power by binary exponentiation (inverse power for n < 0).
Complex ipow(Complex z, long long n);

// Image of the needle point with parameter lambda = cos(psi) under p_n:
// e^{-2i n theta} + 2 cos(n psi) e^{i n theta}, a point of needle(n theta).
Complex needle_image(Angle theta, double lambda, int n);

}  // namespace deltoid
