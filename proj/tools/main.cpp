#include <gaugephase/catalog.hpp>
#include <gaugephase/errors.hpp>
#include <gaugephase/scenario.hpp>
#include <gaugephase/semiclassical.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>

using namespace gaugephase;

namespace {

int list_configs() {
  for (const auto& e : builtin_catalog()) {
    std::cout << e.name << "\n  " << e.summary << "\n  gauge: " << e.gauge << "\n";
    for (const auto& p : e.params) {
      std::cout << "    " << std::left << std::setw(10) << p.name << " default ";
      if (std::isinf(p.default_value)) std::cout << (p.default_value > 0 ? "inf" : "-inf");
      else std::cout << p.default_value;
      std::cout << "  " << p.doc << "\n";
    }
  }
  return 0;
}

int print_fringe(const FringeResult& r) {
  std::cout << std::setprecision(12) << "phi_ab   = " << r.phi_ab << "\n"
            << "x_c      = " << r.x_c << "\n"
            << "phi_semi = " << r.phi_semi << "\n"
            << "sum      = " << r.sum << "\n";
  for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
  bool ok = std::fabs(r.sum) <= 1e-12 * std::max(std::fabs(r.phi_ab), 1.0);
  std::cout << (ok ? "phi_semi = -phi_ab holds" : "phi_semi = -phi_ab FAILS") << "\n";
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized gauge functions: evaluation and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string seed;
  app.add_option("--seed", seed, "Not supported: every computation is deterministic");

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string file, csv, json_path;
  bool quiet = false;
  run->add_option("file", file, "Scenario JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--csv", csv, "Write the report as CSV (- for stdout)");
  run->add_option("--json", json_path, "Write the report as JSON (- for stdout)");
  run->add_flag("--quiet", quiet, "Do not print the table");

  auto* list = app.add_subcommand("list-configs", "Show the built-in field configurations");

  auto* fringe = app.add_subcommand("fringe", "Double-slit fringe shift calculator");
  std::string kind = "magnetic";
  FringeSetupMagnetic m;
  FringeSetupElectric e;
  double q = -1, d = 1, L = 10, lambda = 0.05;
  PhysicalConstants k;
  fringe->add_option("--kind", kind, "magnetic or electric")
      ->check(CLI::IsMember({"magnetic", "electric"}));
  fringe->add_option("--q-over-e", q, "Charge in units of e");
  fringe->add_option("--B", m.B, "Strip field (magnetic)");
  fringe->add_option("--W", m.W, "Strip width (magnetic)");
  fringe->add_option("--E", e.E, "Field amplitude (electric)");
  fringe->add_option("--T", e.T, "Pulse duration (electric)");
  fringe->add_option("--v", e.v, "Particle speed (electric)");
  fringe->add_option("--d", d, "Slit separation");
  fringe->add_option("--L", L, "Slit-to-screen distance");
  fringe->add_option("--lambda", lambda, "de Broglie wavelength");
  fringe->add_option("--c", k.c, "Speed of light");
  fringe->add_option("--flux-quantum", k.flux_quantum, "hc/e");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }
  if (app.count("--seed")) {
    std::cerr << "error: --seed is not accepted; all computation is deterministic\n";
    return 2;
  }

  try {
    if (*list) return list_configs();
    if (*fringe) {
      if (kind == "magnetic") {
        m.q_over_e = q, m.d = d, m.L = L, m.lambda_dB = lambda, m.constants = k;
        return print_fringe(magnetic_fringe(m));
      }
      e.q_over_e = q, e.d = d, e.L = L, e.lambda_dB = lambda, e.constants = k;
      return print_fringe(electric_fringe(e));
    }
    Scenario s = load_scenario(file);
    if (!csv.empty()) s.output.csv = csv;
    if (!json_path.empty()) s.output.json = json_path;
    Report r = run_scenario(s);
    if (s.output.table && !quiet) print_table(r, std::cout);
    if (!s.output.csv.empty()) emit_csv(r, s.output.csv);
    if (!s.output.json.empty()) emit_json(r, s.output.json);
    return r.exit_code();
  } catch (const ScenarioError& err) {
    std::cerr << "scenario error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
