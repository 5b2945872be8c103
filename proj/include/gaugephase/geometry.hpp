#pragma once

#include <gaugephase/fields.hpp>

#include <vector>

namespace gaugephase {

// Breakpoints derived from a config's published discontinuities. All return
// sorted values strictly inside (lo, hi).

/// Along the line through p parallel to `along`.
std::vector<double> axis_breaks(const FieldConfig& cfg, Axis along, const Point3& p, double lo,
                                double hi);

/// Kinks of the outer integrand of an iterated integral whose inner variable
/// `inner` runs over [a,b]; the remaining coordinate is taken from p.
std::vector<double> rect_breaks(const FieldConfig& cfg, Axis inner, double a, double b,
                                Axis outer, const Point3& p, double lo, double hi);

// Polar variants about (ox, oy) at time t.
std::vector<double> ray_breaks(const FieldConfig& cfg, double ox, double oy, double t, double phi,
                               double lo, double hi);
std::vector<double> arc_breaks(const FieldConfig& cfg, double ox, double oy, double t, double rho,
                               double lo, double hi);
/// Outer (angle) breaks when the inner radius spans [rho_a, rho_b].
std::vector<double> sector_breaks(const FieldConfig& cfg, double ox, double oy, double t,
                                  double rho_a, double rho_b, double lo, double hi);

} // namespace gaugephase
