#pragma once

#include <gaugephase/fields.hpp>
#include <gaugephase/quadrature.hpp>
#include <gaugephase/solution.hpp>

#include <functional>
#include <optional>

namespace gaugephase {

/// Initial point, observation point and the reference coordinates of the
/// gauge-fixing functions. Unset references resolve to y_ref = y0 and
/// x_ref = x (the observation abscissa), then stay frozen.
struct ObservationFrame {
  double x0 = 0, y0 = 0;
  double x = 0, y = 0;
  std::optional<double> x_ref, y_ref;
  double lambda0 = 0;
  double t = 0; ///< time slice at which a static config is read
  bool multiplicities = true;

  ObservationFrame resolved() const;
};

/// Clockwise path: up x = x0, then along y. g(x) = -flux([x0,x] x [y0,y_ref]).
GaugeSolution lambda1_static(const FieldConfig& cfg, const ObservationFrame& frame,
                             const QuadratureSpec& spec = {});

/// Counterclockwise path: along y0, then up x. h(y) = flux at x_ref up to y minus up to y_ref.
GaugeSolution lambda2_static(const FieldConfig& cfg, const ObservationFrame& frame,
                             const QuadratureSpec& spec = {});

using StaticSolver =
    std::function<GaugeSolution(const FieldConfig&, const ObservationFrame&, const QuadratureSpec&)>;

/// Central differences of the solver output against A_x, A_y at the observation point.
ResidualReport verify_gradient(const FieldConfig& cfg, const ObservationFrame& frame,
                               const StaticSolver& solver, double step, double tol,
                               const QuadratureSpec& spec = {});

/// Lambda_1 - Lambda_2.
double cancellation_check(const FieldConfig& cfg, const ObservationFrame& frame,
                          const QuadratureSpec& spec = {});

struct MultiplicityLedger {
  double f_y0 = 0;     ///< added to Lambda_1
  double h_hat_x0 = 0; ///< added to Lambda_2
};

/// f(y0) = -flux, h^(x0) = +flux when a declared flux line sits inside the rectangle.
MultiplicityLedger ab_multiplicities(const FieldConfig& cfg, const ObservationFrame& frame);

struct PolarPoint {
  double rho = 0;
  double phi = 0; ///< radians in (-pi, pi]
};

/// Polar frame about (ox, oy). Unset references resolve to phi_ref = phi0 and
/// rho_ref = rho.
struct PolarFrame {
  double ox = 0, oy = 0;
  PolarPoint p0, p;
  std::optional<double> rho_ref, phi_ref;
  double lambda0 = 0;
  double t = 0;
  bool multiplicities = true;
};

/// Annular-sector analog of the Cartesian branches, flux measure rho' drho' dphi'.
GaugeSolution lambda_polar(const FieldConfig& cfg, const PolarFrame& frame, Branch branch,
                           const QuadratureSpec& spec = {});

} // namespace gaugephase
