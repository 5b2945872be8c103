#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gaugephase {

/// Sense of the two-segment path around the observation rectangle.
/// clockwise: up the initial side first (Lambda_1, Lambda_3);
/// counterclockwise: along the initial base first (Lambda_2, Lambda_4).
enum class Branch { clockwise, counterclockwise };

const char* to_string(Branch b);

/// Outcome of one independence condition on a gauge-fixing function.
struct ConditionCheck {
  std::string name;
  double residual = 0;
  bool ok = true;
};

/// A Lambda value split into its parts. lambda is the sum of the parts by construction.
struct GaugeSolution {
  double lambda = 0;
  double lambda0 = 0;
  double dirac_part = 0;
  double nonlocal_part = 0;
  double gauge_fix_part = 0;
  double multiplicity_part = 0;
  Branch branch = Branch::clockwise;

  // Three-variable solutions also record the sense of the E path and the time
  // at which the B_z flux term is taken.
  std::optional<Branch> e_branch;
  std::optional<double> flux_time;

  std::vector<ConditionCheck> conditions;
  std::vector<std::string> warnings;

  void assemble() {
    lambda = lambda0 + dirac_part + nonlocal_part + gauge_fix_part + multiplicity_part;
  }
};

/// Finite-difference residuals of the defining PDEs; NaN marks a component that
/// does not apply to the system.
struct ResidualReport {
  static constexpr double na = std::numeric_limits<double>::quiet_NaN();
  double residual_x = na;
  double residual_y = na;
  double residual_t = na;
  double lambda = 0;
  double tol = 0;
  bool pass = false;

  double worst() const;
};

} // namespace gaugephase
