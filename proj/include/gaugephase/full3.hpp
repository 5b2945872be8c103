#pragma once

#include <gaugephase/fields.hpp>
#include <gaugephase/quadrature.hpp>
#include <gaugephase/solution.hpp>

#include <optional>
#include <string>

namespace gaugephase {

/// The four closed-form solutions of the (x, y, t) system.
/// full1/full2 take the A path along y0 first; full4/fin take it up x0 first.
/// full2/fin read B_z at t0 and run the E path in the same sense as the A path.
enum class Variant { full1, full2, full4, fin };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Unset references resolve to x_ref = x0 and y_ref = y0, which makes the
/// constructed G and G^ vanish.
struct Frame3 {
  double x0 = 0, y0 = 0, t0 = 0;
  double x = 0, y = 0, t = 0;
  std::optional<double> x_ref, y_ref;
  double lambda0 = 0;
  bool multiplicities = true;

  Frame3 resolved() const;
};

/// Optional user-supplied gauge-fixing functions. Anything left empty is
/// constructed from the frame references (G, G^) or taken as zero (F).
/// Every function is validated against its independence condition.
struct ConditionSet {
  Fn1 G;     ///< G(y) at t0, used by full1/full2
  Fn1 G_hat; ///< G^(x) at t0, used by full4/fin
  Fn2 F;     ///< F(x, y)
};

struct Ledger3 {
  double f_x0_t0 = 0;     ///< added to full1/full2
  double h_hat_y0_t0 = 0; ///< added to full4/fin
};

/// f = +flux(t0), h^ = -flux(t0) when a declared flux line sits inside the rectangle.
Ledger3 full_multiplicities(const FieldConfig& cfg, const Frame3& frame);

/// dirac_part holds the A path and -c int phi(x0,y0,t') dt'; nonlocal_part the
/// B_z and E double integrals; gauge_fix_part G or G^ plus F.
GaugeSolution lambda_full(const FieldConfig& cfg, const Frame3& frame, Variant variant,
                          const ConditionSet& conditions = {}, const QuadratureSpec& spec = {});

/// Residuals of dLambda/dx = A_x, dLambda/dy = A_y, -(1/c) dLambda/dt = phi.
ResidualReport verify_full_system(const FieldConfig& cfg, const Frame3& frame, Variant variant,
                                  double step, double tol, const ConditionSet& conditions = {},
                                  const QuadratureSpec& spec = {});

/// Lambda_full2 - Lambda_fin with zero condition functions and the ledger applied.
/// Requires phi = 0 on the frame.
double van_kampen_delta(const FieldConfig& cfg, const Frame3& frame, const QuadratureSpec& spec = {});

/// Frame whose initial point is offset by (-delta, -delta) from the flux center
/// and whose observation point lies at distance R along the diagonal.
Frame3 van_kampen_frame(double xc, double yc, double R, double t0, double t, double delta = 0.5);

struct FaradayCheck {
  double e_circulation = 0; ///< c int_{t0}^{t} (closed E line integral) dt'
  double a_circulation_t = 0;
  double a_circulation_t0 = 0;
  double residual = 0; ///< |e_circulation + a_circulation_t - a_circulation_t0|
  bool pass = false;
};

/// Integral form of Faraday's law around the frame rectangle, positive sense.
/// Passes when the residual is within rel_tol of the circulation change (floor 1e-12).
FaradayCheck faraday_check(const FieldConfig& cfg, const Frame3& frame,
                           const QuadratureSpec& spec = {}, double rel_tol = 1e-6);

} // namespace gaugephase
