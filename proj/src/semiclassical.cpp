#include <gaugephase/semiclassical.hpp>

#include <gaugephase/errors.hpp>

#include <cmath>
#include <numbers>

namespace gaugephase {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;
constexpr double small_ratio = 0.1;

void positive(double v, const char* name) {
  if (!(v > 0) || !std::isfinite(v)) throw PreconditionError(std::string(name) + " must be > 0");
}

void finite(double v, const char* name) {
  if (!std::isfinite(v)) throw PreconditionError(std::string(name) + " must be finite");
}

FringeResult finish(double phi_ab, double x_c, double d, double L, double lambda) {
  FringeResult r;
  r.phi_ab = phi_ab;
  r.x_c = x_c;
  r.phi_semi = two_pi / lambda * d * x_c / L;
  r.sum = r.phi_ab + r.phi_semi;
  return r;
}

} // namespace

FringeResult magnetic_fringe(const FringeSetupMagnetic& s) {
  s.constants.validate();
  finite(s.q_over_e, "q_over_e");
  finite(s.B, "B");
  positive(s.W, "W");
  positive(s.d, "d");
  positive(s.L, "L");
  positive(s.lambda_dB, "lambda_dB");
  double flux = s.B * s.W;
  double phi0 = s.constants.flux_quantum;
  FringeResult r = finish(two_pi * s.q_over_e * flux * s.d / phi0,
                          -s.q_over_e * flux * s.L * s.lambda_dB / phi0, s.d, s.L, s.lambda_dB);
  if (s.W / s.L > small_ratio)
    r.warnings.push_back("W/L = " + std::to_string(s.W / s.L) +
                         " exceeds 0.1; the small-deflection picture is doubtful");
  return r;
}

FringeResult electric_fringe(const FringeSetupElectric& s) {
  s.constants.validate();
  finite(s.q_over_e, "q_over_e");
  finite(s.E, "E");
  positive(s.T, "T");
  positive(s.d, "d");
  positive(s.L, "L");
  positive(s.lambda_dB, "lambda_dB");
  positive(s.v, "v");
  double impulse = s.constants.c * s.E * s.T;
  double phi0 = s.constants.flux_quantum;
  FringeResult r = finish(-two_pi * s.q_over_e * impulse * s.d / phi0,
                          s.q_over_e * impulse * s.L * s.lambda_dB / phi0, s.d, s.L, s.lambda_dB);
  if (s.T * s.v / s.L > small_ratio)
    r.warnings.push_back("T v / L = " + std::to_string(s.T * s.v / s.L) +
                         " exceeds 0.1; the small-deflection picture is doubtful");
  return r;
}

} // namespace gaugephase
