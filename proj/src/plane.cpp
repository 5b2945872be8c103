#include "plane.hpp"

#include <gaugephase/errors.hpp>

#include <cmath>

namespace gaugephase::detail {

namespace {

std::vector<double> call(const Breaks1& b, double fixed, double lo, double hi) {
  return b ? b(fixed, lo, hi) : std::vector<double>{};
}

double checked(const Fn2& f, double u, double v, const Plane& pl, const char* what) {
  double r = f(u, v);
  if (!std::isfinite(r))
    throw EvaluationError(std::string(what) + " is not finite (" + pl.u_name + "=" +
                              std::to_string(u) + ", " + pl.v_name + "=" + std::to_string(v) + ")",
                          u, v, 0);
  return r;
}

} // namespace

double flux_accessible(const Plane& pl, double u0, double v0, double U, double V,
                       const QuadratureSpec& spec) {
  if (u0 == U || v0 == V) return 0.0;
  InnerBreaks inner = [&](double v) {
    return call(pl.along_u, v, std::min(u0, U), std::max(u0, U));
  };
  std::vector<double> outer;
  if (pl.rect_v) outer = pl.rect_v(u0, U, std::min(v0, V), std::max(v0, V));
  return integrate_rect(pl.F, Rect{u0, U, v0, V}, spec, inner, outer);
}

double flux_inside(const Plane& pl, double u0, double v0, double U, double V) {
  if (!pl.center) return 0.0;
  auto [uc, vc] = *pl.center;
  bool in_u = (uc > std::min(u0, U) && uc < std::max(u0, U));
  bool in_v = (vc > std::min(v0, V) && vc < std::max(v0, V));
  if (!in_u || !in_v) return 0.0;
  double sign = ((U > u0) == (V > v0)) ? 1.0 : -1.0;
  return sign * pl.enclosed;
}

void require_field_free(const Plane& pl, double u, double v, const std::string& what) {
  double f = checked(pl.F, u, v, pl, "field density");
  if (std::fabs(f) > kFieldTol)
    throw FieldAtObservationError(what + ": fields differ at the observation point (" +
                                      pl.u_name + "=" + std::to_string(u) + ", " + pl.v_name +
                                      "=" + std::to_string(v) + ", value " + std::to_string(f) +
                                      ")",
                                  f);
}

double validate_segment_v(const Plane& pl, double u, double va, double vb,
                          const QuadratureSpec& spec, const std::string& fn) {
  double worst = 0;
  for (int k = 0; k <= 8; ++k) {
    double v = va + (vb - va) * k / 8.0;
    double f = std::fabs(checked(pl.F, u, v, pl, "field density"));
    worst = std::max(worst, f);
    if (f > kValidationTol)
      throw DecompositionUnsupported(fn + " independence check failed: field on the segment " +
                                         pl.v_name + " in [" + std::to_string(va) + ", " +
                                         std::to_string(vb) + "]",
                                     pl.u_name, u);
  }
  auto br = call(pl.along_v, u, std::min(va, vb), std::max(va, vb));
  double line = integrate_1d([&](double v) { return pl.F(u, v); }, va, vb, spec, br);
  if (std::fabs(line) > kValidationTol)
    throw DecompositionUnsupported(fn + " independence check failed: line flux " +
                                       std::to_string(line),
                                   pl.u_name, u);
  return std::max(worst, std::fabs(line));
}

double validate_segment_u(const Plane& pl, double v, double ua, double ub,
                          const QuadratureSpec& spec, const std::string& fn) {
  double worst = 0;
  for (int k = 0; k <= 8; ++k) {
    double u = ua + (ub - ua) * k / 8.0;
    double f = std::fabs(checked(pl.F, u, v, pl, "field density"));
    worst = std::max(worst, f);
    if (f > kValidationTol)
      throw DecompositionUnsupported(fn + " independence check failed: field on the segment " +
                                         pl.u_name + " in [" + std::to_string(ua) + ", " +
                                         std::to_string(ub) + "]",
                                     pl.v_name, v);
  }
  auto br = call(pl.along_u, v, std::min(ua, ub), std::max(ua, ub));
  double line = integrate_1d([&](double u) { return pl.F(u, v); }, ua, ub, spec, br);
  if (std::fabs(line) > kValidationTol)
    throw DecompositionUnsupported(fn + " independence check failed: line flux " +
                                       std::to_string(line),
                                   pl.v_name, v);
  return std::max(worst, std::fabs(line));
}

std::pair<double, double> plane_ledger(const Plane& pl, const PlaneFrame& f) {
  double in = flux_inside(pl, f.u0, f.v0, f.u, f.v);
  return {0.0 - in, in};
}

GaugeSolution plane_clockwise(const Plane& pl, const PlaneFrame& f, const QuadratureSpec& spec) {
  require_field_free(pl, f.u, f.v, "clockwise solution");
  validate_segment_v(pl, f.u, f.v_ref, f.v, spec, pl.g_name);

  GaugeSolution s;
  s.branch = Branch::clockwise;
  s.lambda0 = f.lambda0;
  double a = integrate_1d([&](double u) { return pl.P(u, f.v); }, f.u0, f.u, spec,
                          call(pl.along_u, f.v, std::min(f.u0, f.u), std::max(f.u0, f.u)));
  double b = integrate_1d([&](double v) { return pl.Q(f.u0, v); }, f.v0, f.v, spec,
                          call(pl.along_v, f.u0, std::min(f.v0, f.v), std::max(f.v0, f.v)));
  s.dirac_part = a + b;
  s.nonlocal_part = flux_accessible(pl, f.u0, f.v0, f.u, f.v, spec) +
                    flux_inside(pl, f.u0, f.v0, f.u, f.v);
  s.gauge_fix_part = -flux_accessible(pl, f.u0, f.v0, f.u, f.v_ref, spec);
  if (f.multiplicities) s.multiplicity_part = plane_ledger(pl, f).first;
  s.assemble();
  return s;
}

GaugeSolution plane_counterclockwise(const Plane& pl, const PlaneFrame& f,
                                     const QuadratureSpec& spec) {
  require_field_free(pl, f.u, f.v, "counterclockwise solution");
  validate_segment_u(pl, f.v, f.u_ref, f.u, spec, pl.h_name);

  GaugeSolution s;
  s.branch = Branch::counterclockwise;
  s.lambda0 = f.lambda0;
  double a = integrate_1d([&](double u) { return pl.P(u, f.v0); }, f.u0, f.u, spec,
                          call(pl.along_u, f.v0, std::min(f.u0, f.u), std::max(f.u0, f.u)));
  double b = integrate_1d([&](double v) { return pl.Q(f.u, v); }, f.v0, f.v, spec,
                          call(pl.along_v, f.u, std::min(f.v0, f.v), std::max(f.v0, f.v)));
  s.dirac_part = a + b;
  double acc = flux_accessible(pl, f.u0, f.v0, f.u, f.v, spec);
  s.nonlocal_part = -(acc + flux_inside(pl, f.u0, f.v0, f.u, f.v));
  double at_ref = f.u_ref == f.u ? acc : flux_accessible(pl, f.u0, f.v0, f.u_ref, f.v, spec);
  s.gauge_fix_part = at_ref - flux_accessible(pl, f.u0, f.v0, f.u_ref, f.v_ref, spec);
  if (f.multiplicities) s.multiplicity_part = plane_ledger(pl, f).second;
  s.assemble();
  return s;
}

} // namespace gaugephase::detail
