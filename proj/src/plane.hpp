#pragma once

// Shared two-variable machinery. A plane problem asks for Lambda(u,v) with
// dLambda/du = P, dLambda/dv = Q; F = dQ/du - dP/dv is the accessible flux density.

#include <gaugephase/fields.hpp>
#include <gaugephase/quadrature.hpp>
#include <gaugephase/solution.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gaugephase::detail {

using Breaks1 = std::function<std::vector<double>(double fixed, double lo, double hi)>;
using BreaksRect = std::function<std::vector<double>(double a, double b, double lo, double hi)>;

struct Plane {
  Fn2 P, Q, F;
  Breaks1 along_u;    ///< breaks along u at fixed v
  Breaks1 along_v;    ///< breaks along v at fixed u
  BreaksRect rect_v;  ///< outer-v breaks for inner u in [a,b]
  BreaksRect rect_u;  ///< outer-u breaks for inner v in [a,b]
  std::optional<std::pair<double, double>> center; ///< inaccessible flux location
  double enclosed = 0;                             ///< inaccessible flux in plane orientation
  std::string u_name = "u", v_name = "v";
  std::string g_name = "g", h_name = "h";
};

struct PlaneFrame {
  double u0 = 0, v0 = 0, u = 0, v = 0;
  double u_ref = 0, v_ref = 0;
  double lambda0 = 0;
  bool multiplicities = true;
};

constexpr double kValidationTol = 1e-6;
constexpr double kFieldTol = 1e-9;

/// Integral of F over [u0,U] x [v0,V] (inner u), accessible part only.
double flux_accessible(const Plane& pl, double u0, double v0, double U, double V,
                       const QuadratureSpec& spec);

/// Signed inaccessible flux when the center lies strictly inside the rectangle.
double flux_inside(const Plane& pl, double u0, double v0, double U, double V);

void require_field_free(const Plane& pl, double u, double v, const std::string& what);

/// Nine-point sampling plus line integral of F along u = const from v_a to v_b;
/// returns the largest magnitude seen.
double validate_segment_v(const Plane& pl, double u, double va, double vb,
                          const QuadratureSpec& spec, const std::string& fn);
/// Same along v = const from u_a to u_b.
double validate_segment_u(const Plane& pl, double v, double ua, double ub,
                          const QuadratureSpec& spec, const std::string& fn);

/// Up the initial side then across: + flux, gauge fix g(u) = -flux(u, v_ref).
GaugeSolution plane_clockwise(const Plane& pl, const PlaneFrame& f, const QuadratureSpec& spec);
/// Across the base then up: - flux, gauge fix h(v) = flux(u_ref, v) - flux(u_ref, v_ref).
GaugeSolution plane_counterclockwise(const Plane& pl, const PlaneFrame& f,
                                     const QuadratureSpec& spec);

/// The (x,y) plane of cfg at time t: P = A_x, Q = A_y, F = B_z.
Plane xy_plane(const FieldConfig& cfg, double t);

/// Multiplicity constants: clockwise gets -inside, counterclockwise +inside.
std::pair<double, double> plane_ledger(const Plane& pl, const PlaneFrame& f);

} // namespace gaugephase::detail
