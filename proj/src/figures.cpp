#include "deltoid/figures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltoid/curve.hpp"
#include "deltoid/loci.hpp"
#include "deltoid/triangle.hpp"

namespace deltoid {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  std::string s(buf);
  if (s == "-0.00000") s = "0.00000";
  return s;
}

std::string points_attr(const std::vector<Complex>& pts) {
  std::string s;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) s += ' ';
    s += fmt(pts[k].real());
    s += ',';
    s += fmt(pts[k].imag());
  }
  return s;
}

void polygon(std::ostringstream& out, const std::vector<Complex>& pts, const std::string& cls,
             const std::string& stroke, double width, const std::string& extra = "") {
  out << "  <polygon class=\"" << cls << "\" points=\"" << points_attr(pts)
      << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << "\"";
  if (!extra.empty()) out << ' ' << extra;
  out << "/>\n";
}

void segment(std::ostringstream& out, Complex a, Complex b, const std::string& cls,
             const std::string& stroke, double width, const std::string& extra = "") {
  out << "  <line class=\"" << cls << "\" x1=\"" << fmt(a.real()) << "\" y1=\"" << fmt(a.imag())
      << "\" x2=\"" << fmt(b.real()) << "\" y2=\"" << fmt(b.imag()) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << fmt(width) << "\"";
  if (!extra.empty()) out << ' ' << extra;
  out << "/>\n";
}

void dot(std::ostringstream& out, Complex c, double r, const std::string& cls,
         const std::string& fill) {
  out << "  <circle class=\"" << cls << "\" cx=\"" << fmt(c.real()) << "\" cy=\""
      << fmt(c.imag()) << "\" r=\"" << fmt(r) << "\" fill=\"" << fill << "\"/>\n";
}

void label(std::ostringstream& out, Complex at, const std::string& text) {
  const double x = at.real() + 0.09;
  const double y = at.imag() + 0.09;
  out << "  <text class=\"label\" transform=\"translate(" << fmt(x) << ' ' << fmt(y)
      << ") scale(1 -1)\" font-size=\"0.26\" font-family=\"sans-serif\" fill=\"#000000\">"
      << text << "</text>\n";
}

std::vector<Complex> deltoid_samples(int samples) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k)
    pts.push_back(parametrize(Angle(two_pi * k / samples - pi)));
  return pts;
}

std::vector<Complex> preimage_samples(double amplitude, int samples) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k)
    pts.push_back(preimage_curve_point(amplitude, Angle(two_pi * k / samples - pi)));
  return pts;
}

void draw_deltoid(std::ostringstream& out, int samples) {
  polygon(out, deltoid_samples(samples), "deltoid", "#1f77b4", 0.022);
}

void draw_unit_circle(std::ostringstream& out) {
  out << "  <circle class=\"unit-circle\" cx=\"0.00000\" cy=\"0.00000\" r=\"1.00000\""
      << " fill=\"none\" stroke=\"#999999\" stroke-width=\"0.012\"/>\n";
}

void figure_triangles(std::ostringstream& out, const FigureSpec& spec) {
  const Angle theta(spec.theta);
  const Frame fr = frame(theta);
  const AmenableTriangle ref = needle_vertices(theta, spec.lambda0);
  const Complex z_h = orthocenter(ref);
  const auto refl = reflected_triangle(ref);
  const auto large = large_triangle(ref);

  draw_deltoid(out, spec.samples);
  draw_unit_circle(out);

  // Full tangent lines L and L', then the needle chord of the base angle.
  segment(out, fr.line_l.point_at(-1.9), fr.line_l.point_at(1.9), "line-L", "#17becf", 0.012);
  segment(out, fr.line_l_prime.point_at(-1.9), fr.line_l_prime.point_at(1.9), "line-L-prime",
          "#17becf", 0.012, "stroke-dasharray=\"0.10 0.06\"");
  const Needle nd = needle(theta);
  segment(out, nd.end_minus, nd.end_plus, "needle", "#555555", 0.018);

  polygon(out, {large[0], large[1], large[2]}, "triangle-large", "#ff7f0e", 0.016,
          "stroke-dasharray=\"0.14 0.09\"");
  polygon(out, {refl[0], refl[1], refl[2]}, "triangle-reflected", "#9467bd", 0.016);
  polygon(out, {ref.vertex(0), ref.vertex(1), ref.vertex(2)}, "triangle-reference", "#2ca02c",
          0.02);

  dot(out, z_h, 0.05, "orthocenter", "#000000");
  label(out, z_h, "H");

  const struct {
    Complex at;
    const char* name;
  } marks[] = {{fr.alpha, "&#945;"},        {fr.alpha_prime, "&#945;&#8242;"},
               {fr.beta, "&#946;"},         {fr.beta_prime, "&#946;&#8242;"},
               {fr.gamma, "&#947;"},        {fr.gamma_prime, "&#947;&#8242;"},
               {fr.delta, "&#948;"}};
  for (const auto& m : marks) {
    dot(out, m.at, 0.04, "frame-point", "#d62728");
    label(out, m.at, m.name);
  }
}

void figure_preimage_curves(std::ostringstream& out, const FigureSpec& spec, int n) {
  static const char* palette[] = {"#d62728", "#9467bd", "#8c564b", "#e377c2",
                                  "#2ca02c", "#ff7f0e", "#17becf", "#bcbd22"};
  draw_deltoid(out, spec.samples);
  const std::vector<double> amplitudes = fibonacci_amplitudes(n);
  for (std::size_t k = 0; k < amplitudes.size(); ++k)
    polygon(out, preimage_samples(amplitudes[k], spec.samples), "preimage-curve",
            palette[k % (sizeof(palette) / sizeof(palette[0]))], 0.016);
}

void figure_needle_crossings(std::ostringstream& out, const FigureSpec& spec, int n) {
  draw_deltoid(out, spec.samples);
  const int m = 3 * n;
  for (int j = 0; j < m; ++j) {
    const Needle nd = needle(Angle(-pi * j / m));
    segment(out, nd.end_minus, nd.end_plus, "needle", "#888888", 0.01);
  }
  const ZeroLocus locus = zero_locus(n);
  for (const auto& entry : locus.entries)
    dot(out, entry.point, 0.045, "crossing", "#d62728");
}

}  // namespace

std::string render_figure(const FigureSpec& spec) {
  if (spec.samples < 16) throw std::invalid_argument("figure needs at least 16 samples");
  if (!(spec.canvas > 0.0) || !std::isfinite(spec.canvas))
    throw std::invalid_argument("canvas size must be positive");
  if (!std::isfinite(spec.theta) || !std::isfinite(spec.lambda0))
    throw std::invalid_argument("figure parameters must be finite");

  int n = spec.n;
  std::string name;
  std::ostringstream desc;
  switch (spec.id) {
    case FigureId::Triangles:
      name = "triangles";
      desc << "Deltoid, unit circle, the frame of base angle theta=" << fmt(spec.theta)
           << " (points alpha, alpha', beta, beta', gamma, gamma', delta; perpendicular tangent"
           << " lines L, L'; needle chord), and the amenable triangle with orthocenter at needle"
           << " parameter lambda0=" << fmt(spec.lambda0)
           << " together with its reflected and doubled companions."
           << " theta and lambda0 are rendering defaults, not distinguished values.";
      break;
    case FigureId::PreimageCurves:
      if (n == 0) n = 12;
      name = "preimage-curves";
      desc << "Deltoid plus the " << fibonacci_amplitudes(n).size()
           << " closed curves A e^(i theta) + e^(-2 i theta) whose amplitudes A make the"
           << " degree-" << n << " power map land on the deltoid.";
      break;
    case FigureId::NeedleCrossings:
      if (n == 0) n = 8;
      name = "needle-crossings";
      desc << "Deltoid with the " << 3 * n << " needles of base angles -pi j/" << 3 * n
           << " and the " << n * n << " triple-crossing points where the degree-" << n
           << " power map vanishes.";
      break;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(spec.canvas)
      << "\" height=\"" << fmt(spec.canvas) << "\" viewBox=\"-4 -4 8 8\" data-figure=\"" << name
      << "\">\n"
      << "  <desc>" << desc.str() << "</desc>\n"
      << "  <rect x=\"-4\" y=\"-4\" width=\"8\" height=\"8\" fill=\"#ffffff\"/>\n"
      << "  <g transform=\"scale(1,-1)\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";

  std::ostringstream body;
  switch (spec.id) {
    case FigureId::Triangles:
      figure_triangles(body, spec);
      break;
    case FigureId::PreimageCurves:
      figure_preimage_curves(body, spec, n);
      break;
    case FigureId::NeedleCrossings:
      figure_needle_crossings(body, spec, n);
      break;
  }
  out << body.str() << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace deltoid
