#pragma once

#include <gaugephase/fields.hpp>
#include <gaugephase/quadrature.hpp>
#include <gaugephase/solution.hpp>

#include <functional>
#include <optional>

namespace gaugephase {

/// One spatial dimension plus time; the config is read on the line y = const.
/// Unset references resolve to t_ref = t0 and x_ref = x, then stay frozen.
struct SpacetimeFrame {
  double x0 = 0, t0 = 0;
  double x = 0, t = 0;
  std::optional<double> x_ref, t_ref;
  double lambda0 = 0;
  double y = 0;
  bool multiplicities = true;

  SpacetimeFrame resolved() const;
};

/// Lambda_3: A at t, phi at x0, + c int int E, g(x), tau(t0).
GaugeSolution lambda3_dynamic(const FieldConfig& cfg, const SpacetimeFrame& frame,
                              const QuadratureSpec& spec = {});

/// Lambda_4: A at t0, phi at x, - c int int E, g^(t), chi(x0).
GaugeSolution lambda4_dynamic(const FieldConfig& cfg, const SpacetimeFrame& frame,
                              const QuadratureSpec& spec = {});

enum class NaiveVariant {
  running,      ///< A at t, phi at x
  initial_point ///< A at t0, phi at x0
};

/// The literature formula without nonlocal terms. Kept as a negative control.
GaugeSolution lambda_naive(const FieldConfig& cfg, const SpacetimeFrame& frame,
                           const QuadratureSpec& spec = {},
                           NaiveVariant variant = NaiveVariant::running);

using DynamicSolver =
    std::function<GaugeSolution(const FieldConfig&, const SpacetimeFrame&, const QuadratureSpec&)>;

/// Residuals |dLambda/dx - A| and |-(1/c) dLambda/dt - phi| by central differences.
ResidualReport verify_xt_system(const FieldConfig& cfg, const SpacetimeFrame& frame,
                                const DynamicSolver& solver, double step, double tol,
                                const QuadratureSpec& spec = {});

struct ElectricMultiplicities {
  double tau_t0 = 0;
  double chi_x0 = 0;
};

/// tau(t0) = +flux, chi(x0) = -flux when a declared spacetime flux sits inside the rectangle.
ElectricMultiplicities electric_ab_multiplicities(const FieldConfig& cfg,
                                                  const SpacetimeFrame& frame);

} // namespace gaugephase
