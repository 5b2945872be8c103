#pragma once

#include <gaugephase/fields.hpp>

#include <string>
#include <vector>

namespace gaugephase {

// Double-slit fringe shifts. h and e never appear on their own: every formula
// goes through constants.flux_quantum (hc/e) and the de Broglie wavelength.
// The screen axis points up, so a positive x_c is an upward shift.

/// Thin magnetic strip of width W between the slits and the screen.
/// Defaults are an electron with W/L = 0.01.
struct FringeSetupMagnetic {
  double q_over_e = -1;
  double B = 1;
  double W = 0.1;
  double d = 1;
  double L = 10;
  double lambda_dB = 0.05;
  PhysicalConstants constants;

  bool operator==(const FringeSetupMagnetic&) const = default;
};

/// Uniform field E switched on for a time T while the packets pass.
struct FringeSetupElectric {
  double q_over_e = -1;
  double E = -1;
  double T = 0.1;
  double d = 1;
  double L = 10;
  double lambda_dB = 0.05;
  double v = 1;
  PhysicalConstants constants;

  bool operator==(const FringeSetupElectric&) const = default;
};

struct FringeResult {
  double phi_ab = 0;
  double x_c = 0;
  double phi_semi = 0;
  double sum = 0; ///< phi_ab + phi_semi, zero up to rounding
  std::vector<std::string> warnings;
};

/// phi_ab = 2 pi (q/e) B W d / flux_quantum, x_c = -(q/e) B W L lambda / flux_quantum.
FringeResult magnetic_fringe(const FringeSetupMagnetic& s);

/// phi_ab = -2 pi (q/e) c T E d / flux_quantum, x_c = (q/e) c E T L lambda / flux_quantum.
FringeResult electric_fringe(const FringeSetupElectric& s);

} // namespace gaugephase
