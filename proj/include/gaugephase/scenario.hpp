#pragma once

#include <gaugephase/catalog.hpp>
#include <gaugephase/fields.hpp>
#include <gaugephase/quadrature.hpp>
#include <gaugephase/semiclassical.hpp>

#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gaugephase {

/// Built-in name plus parameters, or a grid file (relative paths resolve
/// against the scenario file's directory).
struct ConfigSpec {
  std::string builtin;
  ParamMap params;
  std::string grid;

  bool operator==(const ConfigSpec&) const = default;
};

/// Frame dimensionality, deduced from the keys present.
/// plane: x0 y0 x y; spacetime: x0 t0 x t; full: all six; polar: rho0 phi0 rho phi.
enum class FrameKind { plane, spacetime, full, polar };
const char* to_string(FrameKind k);

struct FrameSpec {
  FrameKind kind = FrameKind::plane;
  double x0 = 0, y0 = 0, t0 = 0, x = 0, y = 0, t = 0;
  std::optional<double> x_ref, y_ref, t_ref;
  double ox = 0, oy = 0, rho0 = 0, phi0 = 0, rho = 0, phi = 0;
  std::optional<double> rho_ref, phi_ref;
  double lambda0 = 0;
  bool multiplicities = true;

  bool operator==(const FrameSpec&) const = default;
};

struct TaskSpec {
  std::string kind; ///< consistency, lambda1..4, naive, naive-initial, polar, full, cancel,
                    ///< multiplicities, faraday, vankampen-sweep, fringe-magnetic,
                    ///< fringe-electric, verify
  std::string variant;              ///< full
  std::string branch = "both";      ///< polar: clockwise, counterclockwise, both
  std::vector<double> times;        ///< vankampen-sweep
  std::vector<std::string> solvers; ///< verify
  double step = 1e-4;               ///< verify
  double tol = 1e-6;                ///< verify, consistency, cancel, polar
  int samples = 0;                  ///< verify: Halton draws in sample_box; consistency grid
  std::optional<FringeSetupMagnetic> magnetic;
  std::optional<FringeSetupElectric> electric;

  bool operator==(const TaskSpec&) const = default;
};

struct OutputSpec {
  bool table = true;
  std::string csv;
  std::string json;

  bool operator==(const OutputSpec&) const = default;
};

struct Scenario {
  std::string name;
  std::string description;
  ConfigSpec config;
  PhysicalConstants constants;
  QuadratureSpec quadrature;
  std::vector<FrameSpec> frames;
  std::optional<Region> sample_box;
  std::vector<TaskSpec> tasks;
  OutputSpec output;
  std::string base_dir; ///< not serialized

  bool operator==(const Scenario& o) const;
};

/// Parse JSON text. Errors are ScenarioError carrying a JSON pointer or line number.
Scenario parse_scenario(const std::string& text, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);
/// Canonical JSON text with every default spelled out.
std::string serialize_scenario(const Scenario& s);

FieldConfig build_config(const Scenario& s);

/// One row of a report. NaN marks a column that does not apply.
struct Record {
  static constexpr double na = std::numeric_limits<double>::quiet_NaN();
  std::string task;
  double x0 = na, y0 = na, t0 = na, x = na, y = na, t = na;
  double lambda = na, dirac_part = na, nonlocal_part = na, gauge_fix_part = na,
         multiplicity_part = na;
  double residual_x = na, residual_y = na, residual_t = na;
  std::optional<bool> pass; ///< empty for informational rows
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, std::string>> notes;
  std::string error;
  double seconds = 0;
};

struct Report {
  std::string scenario;
  std::vector<Record> records;

  /// True when no row failed and no task errored.
  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
};

Report run_scenario(const Scenario& s);
Report run_scenario(const std::string& path);

void emit_csv(const Report& r, const std::string& path);
void write_csv(const Report& r, std::ostream& out);
void emit_json(const Report& r, const std::string& path);
std::string report_json(const Report& r);
void print_table(const Report& r, std::ostream& out);

} // namespace gaugephase
