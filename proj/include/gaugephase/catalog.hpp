#pragma once

#include <gaugephase/fields.hpp>

#include <map>
#include <string>
#include <vector>

namespace gaugephase {

using ParamMap = std::map<std::string, double>;

struct ParamDoc {
  std::string name;
  double default_value; ///< +-infinity means "unbounded"
  std::string doc;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string gauge;
  std::vector<ParamDoc> params;
};

const std::vector<CatalogEntry>& builtin_catalog();

/// Build a catalog entry by name. Unknown names or parameters throw PreconditionError.
FieldConfig make_builtin(const std::string& name, const ParamMap& params,
                         const PhysicalConstants& k = {});

/// B_z = B0 for x_lo <= x <= x_hi. Gauge: A_x = 0, A_y = B0 clamp(x - x_lo, 0, w).
FieldConfig vertical_strip(double x_lo, double x_hi, double B0, const PhysicalConstants& k = {});

/// B_z = B0 for y_lo <= y <= y_hi. Gauge: A_y = 0, A_x = -B0 clamp(y - y_lo, 0, w).
FieldConfig horizontal_strip(double y_lo, double y_hi, double B0,
                             const PhysicalConstants& k = {});

/// E_x = E0 everywhere for t_lo <= t <= t_hi. Temporal gauge: phi = 0,
/// A_x = -c E0 clamp(t - t_lo, 0, T).
FieldConfig time_strip(double t_lo, double t_hi, double E0, const PhysicalConstants& k = {});

/// E_x = E0 between the plates while t_on <= t <= t_off. Gauge: A = 0,
/// phi = -E0 clamp(x - x_lo, 0, w).
FieldConfig capacitor_1d(double x_lo, double x_hi, double E0, double t_on = -Box::inf,
                         double t_off = Box::inf, const PhysicalConstants& k = {});

/// Equilateral triangle of side a with vertices (0,0), (a,0), (a/2, sqrt(3)a/2),
/// shifted by the offsets; B_z = B0 inside. Gauge: A_y = 0,
/// A_x = -B0 clamp(y, 0, height of the triangle at x).
FieldConfig triangle(double a, double B0, double x_offset = 0, double y_offset = 0,
                     const PhysicalConstants& k = {});

/// Idealized line flux at (xc, yc); accessible B_z = 0 and the flux is declared
/// as enclosed. Gauge: A = flux/(2 pi r) azimuthal.
FieldConfig solenoid_flux(double flux, double xc, double yc, const PhysicalConstants& k = {});

/// Uniform B_z = B0 inside a disk. Gauge: symmetric about the disk center.
FieldConfig circular_blob(double B0, double xc, double yc, double radius,
                          const PhysicalConstants& k = {});

/// Time-dependent confined flux with the sharp-front retarded model, temporal gauge.
FieldConfig retarded_flux(const FluxProfile& profile, double xc, double yc,
                          const PhysicalConstants& k = {});

/// Field-free (x,t) potentials winding around (xc, tc): the enclosed electric
/// flux is `flux`, i.e. c * integral(E) over any rectangle holding (xc,tc) is -flux.
FieldConfig spacetime_vortex(double flux, double xc, double tc, const PhysicalConstants& k = {});

/// Tabulated config from whitespace-separated columns
/// `x y t A_x A_y phi B_z E_x E_y` on a full tensor grid. Bilinear in space,
/// linear in time; zero outside the grid box.
FieldConfig load_grid(const std::string& path, const PhysicalConstants& k = {});

} // namespace gaugephase
