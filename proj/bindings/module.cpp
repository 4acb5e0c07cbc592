#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "deltoid/curve.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/figures.hpp"
#include "deltoid/io.hpp"
#include "deltoid/loci.hpp"
#include "deltoid/powers.hpp"
#include "deltoid/triangle.hpp"
#include "deltoid/verify.hpp"

namespace py = pybind11;

namespace {

deltoid::FigureId figure_id_from_name(const std::string& kind) {
  if (kind == "triangles") return deltoid::FigureId::Triangles;
  if (kind == "preimage-curves") return deltoid::FigureId::PreimageCurves;
  if (kind == "needle-crossings") return deltoid::FigureId::NeedleCrossings;
  throw std::invalid_argument(
      "kind must be one of: triangles, preimage-curves, needle-crossings");
}

std::vector<std::complex<double>> to_vector(const std::array<deltoid::Complex, 3>& a) {
  return {a[0], a[1], a[2]};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deltoid curve geometry: membership, needles, orthocenter triangles, "
            "power maps, special loci, figures, and the verification suite.";

  py::register_exception<deltoid::OutsideDeltoid>(m, "OutsideDeltoid", PyExc_ValueError);

  m.def("deltoid_eval", &deltoid::deltoid_eval, py::arg("z"),
        "Value of the defining quartic; negative inside, positive outside.");

  m.def(
      "classify",
      [](std::complex<double> z) {
        const deltoid::Classification c = deltoid::classify(z);
        return py::make_tuple(deltoid::region_name(c.verdict), c.value);
      },
      py::arg("z"), "Returns (verdict, quartic value).");

  m.def(
      "parametrize",
      [](double theta) { return deltoid::parametrize(deltoid::Angle(theta)); },
      py::arg("theta"), "Curve point 2 e^(i theta) + e^(-2 i theta).");

  m.def(
      "needle",
      [](double theta) {
        const deltoid::Needle nd = deltoid::needle(deltoid::Angle(theta));
        py::dict out;
        out["theta"] = nd.theta.radians();
        out["end_plus"] = std::complex<double>(nd.end_plus);
        out["end_minus"] = std::complex<double>(nd.end_minus);
        out["midpoint"] = std::complex<double>(nd.midpoint);
        out["tangency"] = std::complex<double>(nd.tangency);
        out["tangency_lambda"] = nd.tangency_lambda();
        return out;
      },
      py::arg("theta"), "The length-4 tangent chord at the given base angle.");

  m.def(
      "solve",
      [](std::complex<double> z_h) {
        return to_vector(deltoid::vertices_from_orthocenter(z_h).vertices());
      },
      py::arg("z_h"),
      "Vertices of the unit-circle triangle whose orthocenter is z_h.");

  m.def(
      "orthocenter",
      [](const std::vector<std::complex<double>>& vertices) {
        if (vertices.size() != 3)
          throw std::invalid_argument("expected exactly three vertices");
        const deltoid::AmenableTriangle t(
            std::array<deltoid::Complex, 3>{vertices[0], vertices[1], vertices[2]});
        return deltoid::orthocenter(t);
      },
      py::arg("vertices"), "Vertex sum z1 + z2 + z3 of a validated triangle.");

  m.def(
      "needle_vertices",
      [](double theta, double lambda0) {
        return to_vector(
            deltoid::needle_vertices(deltoid::Angle(theta), lambda0).vertices());
      },
      py::arg("theta"), py::arg("lambda0"),
      "Triangle whose orthocenter sits at needle parameter lambda0.");

  m.def(
      "power_recurrence",
      [](std::complex<double> z, int n) { return deltoid::pn_recurrence(z, n); },
      py::arg("z"), py::arg("n"));
  m.def(
      "power_closed_form",
      [](std::complex<double> z, int n) { return deltoid::pn_closed_form(z, n); },
      py::arg("z"), py::arg("n"));
  m.def(
      "power_roots",
      [](std::complex<double> z, int n) { return deltoid::pn_via_roots(z, n); },
      py::arg("z"), py::arg("n"));

  m.def(
      "needle_image",
      [](double theta, double lambda, int n) {
        return deltoid::needle_image(deltoid::Angle(theta), lambda, n);
      },
      py::arg("theta"), py::arg("lambda"), py::arg("n"));

  m.def(
      "lucas_coefficients",
      [](int n) { return deltoid::lucas_poly(n).coefficients(); }, py::arg("n"));
  m.def(
      "fibonacci_coefficients",
      [](int n) { return deltoid::fibonacci_poly(n).coefficients(); }, py::arg("n"));
  m.def(
      "q_coefficients", [](int n) { return deltoid::q_poly(n).coefficients(); },
      py::arg("n"));

  m.def("fibonacci_amplitudes", &deltoid::fibonacci_amplitudes, py::arg("n"));

  m.def(
      "zero_locus",
      [](int n) {
        py::list out;
        for (const auto& e : deltoid::zero_locus(n).entries) {
          py::dict row;
          row["indices"] = e.indices;
          row["point"] = std::complex<double>(e.point);
          row["needle_thetas"] = e.needle_thetas;
          row["pn_abs_residual"] = e.pn_abs;
          out.append(row);
        }
        return out;
      },
      py::arg("n"), "The n^2 points where the degree-n power map vanishes.");

  m.def(
      "zeros_csv", [](int n) { return deltoid::zeros_csv(deltoid::zero_locus(n)); },
      py::arg("n"));

  m.def(
      "render_figure",
      [](const std::string& kind, int n, double theta, double lambda0, int samples,
         double canvas) {
        deltoid::FigureSpec spec;
        spec.id = figure_id_from_name(kind);
        spec.n = n;
        spec.theta = theta;
        spec.lambda0 = lambda0;
        spec.samples = samples;
        spec.canvas = canvas;
        return deltoid::render_figure(spec);
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("theta") = deltoid::pi / 5,
      py::arg("lambda0") = 0.4, py::arg("samples") = 720, py::arg("canvas") = 800.0,
      "Deterministic SVG for one of: triangles, preimage-curves, needle-crossings.");

  m.def(
      "verify",
      [](std::uint64_t seed, int samples) {
        deltoid::VerifyOptions options;
        options.seed = seed;
        options.samples = samples;
        py::list rows;
        for (const auto& r : deltoid::run_verification(options)) {
          py::dict row;
          row["name"] = r.name;
          row["pass"] = r.pass;
          row["max_residual"] = r.max_residual;
          row["tolerance"] = r.tolerance;
          rows.append(row);
        }
        return rows;
      },
      py::arg("seed") = 0, py::arg("samples") = 1000,
      "Run every registered numeric invariant; one row per check.");
}
