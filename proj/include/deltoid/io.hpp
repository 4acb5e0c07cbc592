#pragma once

#include <string>

#include "deltoid/geometry.hpp"
#include "deltoid/loci.hpp"

namespace deltoid {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

// Inverse of format_double; throws std::invalid_argument on malformed input.
double parse_double(const std::string& s);

// CSV table of a zero locus, one row per point:
// j1,j2,j3,re,im,needle_theta_1,needle_theta_2,needle_theta_3,pn_abs_residual
std::string zeros_csv(const ZeroLocus& locus);

}  // namespace deltoid
