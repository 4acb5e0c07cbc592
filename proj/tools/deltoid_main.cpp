#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deltoid/curve.hpp"
#include "deltoid/errors.hpp"
#include "deltoid/figures.hpp"
#include "deltoid/io.hpp"
#include "deltoid/loci.hpp"
#include "deltoid/powers.hpp"
#include "deltoid/triangle.hpp"
#include "deltoid/verify.hpp"

namespace {

using deltoid::Complex;
using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json point_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string point_text(Complex z) {
  return deltoid::format_double(z.real()) + " " + deltoid::format_double(z.imag());
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + out_path);
  file << content;
  file.flush();
  if (!file) throw IoError("failed while writing output file: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deltoid curve toolkit: membership, orthocenter triangles, power maps,"
               " zero loci, SVG figures, and the numeric verification suite."};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 0;
  int samples = 1000;
  std::string out_path;
  app.add_flag("--json", as_json, "Emit JSON instead of plain text/CSV");
  app.add_option("--seed", seed, "Seed for randomized verification sampling");
  app.add_option("--samples", samples, "Sample budget for randomized verification")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  double re = 0.0, im = 0.0;
  int n = 1;
  std::string output;
  int exit_code = 0;

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a point against the deltoid");
  classify_cmd->add_option("re", re, "Real part")->required();
  classify_cmd->add_option("im", im, "Imaginary part")->required();
  classify_cmd->callback([&] {
    const deltoid::Classification c = deltoid::classify(Complex(re, im));
    if (as_json) {
      const json doc = {{"re", re},
                        {"im", im},
                        {"verdict", deltoid::region_name(c.verdict)},
                        {"value", c.value}};
      output = doc.dump(2) + "\n";
    } else {
      output = std::string(deltoid::region_name(c.verdict)) + " value=" +
               deltoid::format_double(c.value) + "\n";
    }
  });

  auto* solve_cmd = app.add_subcommand(
      "solve", "Recover the unit-circle triangle with the given orthocenter");
  solve_cmd->add_option("re", re, "Real part of the orthocenter")->required();
  solve_cmd->add_option("im", im, "Imaginary part of the orthocenter")->required();
  solve_cmd->callback([&] {
    const deltoid::AmenableTriangle t =
        deltoid::vertices_from_orthocenter(Complex(re, im));
    if (as_json) {
      json verts = json::array();
      for (const Complex& v : t.vertices()) verts.push_back(point_json(v));
      const json doc = {{"orthocenter", point_json(Complex(re, im))},
                        {"vertices", verts}};
      output = doc.dump(2) + "\n";
    } else {
      output.clear();
      for (const Complex& v : t.vertices()) output += point_text(v) + "\n";
    }
  });

  auto* power_cmd = app.add_subcommand(
      "power", "Evaluate the power map through every applicable algorithm");
  power_cmd->add_option("re", re, "Real part")->required();
  power_cmd->add_option("im", im, "Imaginary part")->required();
  power_cmd->add_option("n", n, "Power index")->required();
  power_cmd->callback([&] {
    const Complex z(re, im);
    std::map<std::string, Complex> values;
    if (n >= 0) values["recurrence"] = deltoid::pn_recurrence(z, n);
    if (n >= 1 && n <= deltoid::closed_form_max_n)
      values["closed_form"] = deltoid::pn_closed_form(z, n);
    if (deltoid::classify(z).verdict != deltoid::Region::Outside)
      values["roots"] = deltoid::pn_via_roots(z, n);
    if (values.empty())
      throw deltoid::OutsideDeltoid(
          "negative power index needs a point inside or on the deltoid");
    double disagreement = 0.0;
    for (const auto& [name_a, value_a] : values)
      for (const auto& [name_b, value_b] : values)
        disagreement = std::max(disagreement, std::abs(value_a - value_b));
    if (as_json) {
      json algs;
      for (const auto& [name, value] : values) algs[name] = point_json(value);
      const json doc = {{"z", point_json(z)},
                        {"n", n},
                        {"values", algs},
                        {"max_disagreement", disagreement}};
      output = doc.dump(2) + "\n";
    } else {
      output.clear();
      for (const auto& [name, value] : values)
        output += name + " " + point_text(value) + "\n";
      output += "max_disagreement " + deltoid::format_double(disagreement) + "\n";
    }
  });

  auto* zeros_cmd = app.add_subcommand(
      "zeros", "Enumerate the n^2 points where the power map vanishes");
  zeros_cmd->add_option("n", n, "Power index")->required()->check(CLI::PositiveNumber);
  zeros_cmd->callback([&] {
    const deltoid::ZeroLocus locus = deltoid::zero_locus(n);
    if (as_json) {
      json entries = json::array();
      for (const auto& e : locus.entries)
        entries.push_back(json{{"j1", e.indices[0]},
                               {"j2", e.indices[1]},
                               {"j3", e.indices[2]},
                               {"point", point_json(e.point)},
                               {"needle_thetas",
                                {e.needle_thetas[0], e.needle_thetas[1],
                                 e.needle_thetas[2]}},
                               {"pn_abs_residual", e.pn_abs}});
      const json doc = {{"n", locus.n}, {"points", entries}};
      output = doc.dump(2) + "\n";
    } else {
      output = deltoid::zeros_csv(locus);
    }
  });

  deltoid::FigureSpec fig;
  std::string figure_kind;
  auto* figure_cmd = app.add_subcommand("figure", "Render one of the SVG figures");
  figure_cmd
      ->add_option("kind", figure_kind,
                   "triangles | preimage-curves | needle-crossings")
      ->required()
      ->check(CLI::IsMember({"triangles", "preimage-curves", "needle-crossings"}));
  figure_cmd->add_option("--n", fig.n, "Power index (0 uses the figure default)");
  figure_cmd->add_option("--theta", fig.theta, "Frame angle for the triangles figure");
  figure_cmd->add_option("--lambda0", fig.lambda0,
                         "Needle parameter of the reference orthocenter");
  figure_cmd->add_option("--curve-samples", fig.samples,
                         "Polyline samples per curve (minimum 16)");
  figure_cmd->add_option("--canvas", fig.canvas, "Rendered width/height in px");
  figure_cmd->callback([&] {
    if (figure_kind == "triangles")
      fig.id = deltoid::FigureId::Triangles;
    else if (figure_kind == "preimage-curves")
      fig.id = deltoid::FigureId::PreimageCurves;
    else
      fig.id = deltoid::FigureId::NeedleCrossings;
    output = deltoid::render_figure(fig);
  });

  double tolerance_override = -1.0;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run every registered numeric invariant");
  verify_cmd->add_option("--tolerance-override", tolerance_override,
                         "Replace every check's tolerance (self-test hook)");
  verify_cmd->callback([&] {
    deltoid::VerifyOptions options;
    options.seed = seed;
    options.samples = samples;
    if (tolerance_override >= 0.0) options.tolerance_override = tolerance_override;
    const std::vector<deltoid::CheckResult> results =
        deltoid::run_verification(options);
    bool all_pass = true;
    if (as_json) {
      json rows = json::array();
      for (const auto& r : results) {
        rows.push_back(json{{"name", r.name},
                            {"pass", r.pass},
                            {"max_residual", r.max_residual},
                            {"tolerance", r.tolerance}});
        all_pass = all_pass && r.pass;
      }
      output = rows.dump(2) + "\n";
    } else {
      output.clear();
      for (const auto& r : results) {
        output += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.name +
                  "  residual=" + deltoid::format_double(r.max_residual) +
                  "  tolerance=" + deltoid::format_double(r.tolerance) + "\n";
        all_pass = all_pass && r.pass;
      }
      output += std::string(all_pass ? "OK" : "FAILED") + " (" +
                std::to_string(results.size()) + " checks)\n";
    }
    exit_code = all_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
    write_output(out_path, output);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
