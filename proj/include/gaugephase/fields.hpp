#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gaugephase {

/// Gaussian-style units with explicit c. Lambda is kept in flux units; a phase
/// is obtained only through phase().
struct PhysicalConstants {
  double c = 1.0;
  double q_over_hbar_c = 1.0;
  double flux_quantum = 1.0; ///< hc/e, used by the fringe calculator only

  void validate() const;
  double phase(double lambda) const { return q_over_hbar_c * lambda; }
  bool operator==(const PhysicalConstants&) const = default;
};

struct Point3 {
  double x = 0, y = 0, t = 0;
};

enum class Axis { x, y, t };
const char* axis_name(Axis a);
double get(const Point3& p, Axis a);
Point3 with(Point3 p, Axis a, double v);

using Evaluator = std::function<double(double x, double y, double t)>;

/// Axis-aligned box in (x, y, t); infinite bounds allowed.
struct Box {
  static constexpr double inf = std::numeric_limits<double>::infinity();
  double x_lo = -inf, x_hi = inf, y_lo = -inf, y_hi = inf, t_lo = -inf, t_hi = inf;

  static Box everywhere() { return {}; }
  static Box nowhere() { return {inf, -inf, inf, -inf, inf, -inf}; }
  bool contains(const Point3& p) const;
  bool bounded() const;
};

// Discontinuity curves published by a config. Quadrature splits at them and
// consistency sampling keeps a collar around them.

/// Segment in the (x,y) plane, extruded in t. `infinite` turns it into a full line.
struct EdgeSegment {
  double x1, y1, x2, y2;
  bool infinite = false;
};
struct EdgeCircle {
  double xc, yc, r;
};
/// t = const.
struct EdgeTime {
  double t;
};
/// Light front r = c (t - t0) around (xc, yc).
struct EdgeLightFront {
  double xc, yc, t0, c;
};
/// Singular locus. Unset coordinates are free, so {x,y} is a line along t
/// (solenoid) and {x,t} is a line along y (spacetime vortex).
struct EdgeSingular {
  std::optional<double> x, y, t;
};
using Discontinuity = std::variant<EdgeSegment, EdgeCircle, EdgeTime, EdgeLightFront, EdgeSingular>;

enum class ConfigKind { analytic, tabulated_grid };

/// Physically inaccessible magnetic flux threading (xc, yc).
struct EnclosedMagneticFlux {
  double xc = 0, yc = 0;
  std::function<double(double t)> flux;
};

/// Inaccessible "electric flux" c*integral(E) around the spacetime point (xc, tc).
struct EnclosedElectricFlux {
  double xc = 0, tc = 0;
  double flux = 0;
};

/// Potential and field differences between the two mapped systems.
struct FieldConfig {
  std::string name = "zero";
  ConfigKind kind = ConfigKind::analytic;
  std::string gauge; ///< human-readable gauge statement
  PhysicalConstants constants;
  Evaluator A_x, A_y, phi, B_z, E_x, E_y;
  Box support = Box::nowhere();       ///< all six evaluators vanish outside
  Box field_support = Box::nowhere(); ///< B_z and E vanish outside
  std::vector<Discontinuity> edges;
  std::optional<EnclosedMagneticFlux> magnetic_flux;
  std::optional<EnclosedElectricFlux> electric_flux;

  bool multiply_connected() const { return magnetic_flux || electric_flux; }
};

/// Calls f, turning exceptions and non-finite values into EvaluationError.
double evaluate(const Evaluator& f, const char* what, double x, double y, double t);

/// All evaluators identically zero.
FieldConfig zero_config(const PhysicalConstants& k = {});

struct Region {
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1, t_lo = 0, t_hi = 0;

  bool operator==(const Region&) const = default;
};

struct ConsistencyReport {
  double curl_residual = 0;   ///< max |B_z - (dA_y/dx - dA_x/dy)|
  double faraday_residual = 0; ///< max |E + grad phi + (1/c) dA/dt|
  Point3 worst_curl, worst_faraday;
  int sampled = 0;
  int skipped = 0; ///< points inside a discontinuity collar
  double tol = 0;
  bool pass = false;
};

/// Finite-difference check of the defining relations on a samples^2 grid
/// (samples^3 when the region has a time extent). Points within collar*size of
/// a published discontinuity are skipped.
ConsistencyReport check_consistency(const FieldConfig& config, const Region& region, int samples,
                                    double tol, double collar = 1e-3);

/// Smallest distance from p to a published discontinuity (infinity if none).
double collar_distance(const FieldConfig& config, const Point3& p);

/// Flux ramp: Phi(s) = phi0 for s < t0, phi0 + k (s - t0) after.
struct FluxProfile {
  double phi0 = 1.0;
  double k = 0.0;
  double t0 = 0.0;
  double value(double s) const { return s < t0 ? phi0 : phi0 + k * (s - t0); }
  double rate(double s) const { return s < t0 ? 0.0 : k; }
};

struct RetardedFields {
  double E_x, E_y, B_z, A_x, A_y;
};

/// Sharp-front model built on A_phi = Phi(t - r/c) / (2 pi r).
RetardedFields retarded_flux_fields(const FluxProfile& profile, double xc, double yc, double x,
                                    double y, double t, double c);

} // namespace gaugephase
