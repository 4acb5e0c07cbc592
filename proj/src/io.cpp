#include "deltoid/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace deltoid {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("failed to format double");
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("invalid floating-point literal: " + s);
  return value;
}

std::string zeros_csv(const ZeroLocus& locus) {
  std::ostringstream out;
  out << "j1,j2,j3,re,im,needle_theta_1,needle_theta_2,needle_theta_3,pn_abs_residual\n";
  for (const auto& entry : locus.entries) {
    out << entry.indices[0] << ',' << entry.indices[1] << ',' << entry.indices[2] << ','
        << format_double(entry.point.real()) << ',' << format_double(entry.point.imag()) << ','
        << format_double(entry.needle_thetas[0]) << ',' << format_double(entry.needle_thetas[1])
        << ',' << format_double(entry.needle_thetas[2]) << ',' << format_double(entry.pn_abs)
        << '\n';
  }
  return out.str();
}

}  // namespace deltoid
