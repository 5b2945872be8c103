#include <gaugephase/dynamic1d.hpp>

#include "plane.hpp"

#include <gaugephase/errors.hpp>
#include <gaugephase/geometry.hpp>

#include <cmath>

namespace gaugephase {

using detail::Plane;
using detail::PlaneFrame;

namespace {

Plane xt_plane(const FieldConfig& cfg, double y) {
  double c = cfg.constants.c;
  Plane pl;
  pl.P = [&cfg, y](double x, double t) { return evaluate(cfg.A_x, "A_x", x, y, t); };
  pl.Q = [&cfg, y, c](double x, double t) { return -c * evaluate(cfg.phi, "phi", x, y, t); };
  pl.F = [&cfg, y, c](double x, double t) { return c * evaluate(cfg.E_x, "E_x", x, y, t); };
  pl.along_u = [&cfg, y](double t, double lo, double hi) {
    return axis_breaks(cfg, Axis::x, {0, y, t}, lo, hi);
  };
  pl.along_v = [&cfg, y](double x, double lo, double hi) {
    return axis_breaks(cfg, Axis::t, {x, y, 0}, lo, hi);
  };
  pl.rect_v = [&cfg, y](double a, double b, double lo, double hi) {
    return rect_breaks(cfg, Axis::x, a, b, Axis::t, {0, y, 0}, lo, hi);
  };
  pl.rect_u = [&cfg, y](double a, double b, double lo, double hi) {
    return rect_breaks(cfg, Axis::t, a, b, Axis::x, {0, y, 0}, lo, hi);
  };
  if (cfg.electric_flux) {
    pl.center = {cfg.electric_flux->xc, cfg.electric_flux->tc};
    // c int int E over a rectangle around the center is minus the declared flux
    pl.enclosed = -cfg.electric_flux->flux;
  }
  pl.u_name = "x";
  pl.v_name = "t";
  pl.g_name = "g(x)";
  pl.h_name = "g^(t)";
  return pl;
}

PlaneFrame plane_frame(const SpacetimeFrame& f) {
  SpacetimeFrame r = f.resolved();
  return {r.x0, r.t0, r.x, r.t, *r.x_ref, *r.t_ref, r.lambda0, r.multiplicities};
}

} // namespace

SpacetimeFrame SpacetimeFrame::resolved() const {
  SpacetimeFrame r = *this;
  if (!r.x_ref) r.x_ref = x;
  if (!r.t_ref) r.t_ref = t0;
  return r;
}

GaugeSolution lambda3_dynamic(const FieldConfig& cfg, const SpacetimeFrame& frame,
                              const QuadratureSpec& spec) {
  return detail::plane_clockwise(xt_plane(cfg, frame.y), plane_frame(frame), spec);
}

GaugeSolution lambda4_dynamic(const FieldConfig& cfg, const SpacetimeFrame& frame,
                              const QuadratureSpec& spec) {
  return detail::plane_counterclockwise(xt_plane(cfg, frame.y), plane_frame(frame), spec);
}

GaugeSolution lambda_naive(const FieldConfig& cfg, const SpacetimeFrame& frame,
                           const QuadratureSpec& spec, NaiveVariant variant) {
  Plane pl = xt_plane(cfg, frame.y);
  double tA = variant == NaiveVariant::running ? frame.t : frame.t0;
  double xphi = variant == NaiveVariant::running ? frame.x : frame.x0;
  auto lo_hi = [](double a, double b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  auto [xl, xh] = lo_hi(frame.x0, frame.x);
  auto [tl, th] = lo_hi(frame.t0, frame.t);
  GaugeSolution s;
  s.branch = variant == NaiveVariant::running ? Branch::clockwise : Branch::counterclockwise;
  s.lambda0 = frame.lambda0;
  s.dirac_part =
      integrate_1d([&](double x) { return pl.P(x, tA); }, frame.x0, frame.x, spec,
                   pl.along_u(tA, xl, xh)) +
      integrate_1d([&](double t) { return pl.Q(xphi, t); }, frame.t0, frame.t, spec,
                   pl.along_v(xphi, tl, th));
  s.assemble();
  return s;
}

ResidualReport verify_xt_system(const FieldConfig& cfg, const SpacetimeFrame& frame,
                                const DynamicSolver& solver, double step, double tol,
                                const QuadratureSpec& spec) {
  if (!(step > 0)) throw PreconditionError("finite-difference step must be > 0");
  SpacetimeFrame base = frame.resolved();
  double c = cfg.constants.c;
  auto at = [&](double dx, double dt) {
    SpacetimeFrame f = base;
    f.x += dx;
    f.t += dt;
    return solver(cfg, f, spec).lambda;
  };
  ResidualReport r;
  r.tol = tol;
  r.lambda = solver(cfg, base, spec).lambda;
  double dLx = (at(step, 0) - at(-step, 0)) / (2 * step);
  double dLt = (at(0, step) - at(0, -step)) / (2 * step);
  r.residual_x = std::fabs(dLx - evaluate(cfg.A_x, "A_x", base.x, base.y, base.t));
  r.residual_t = std::fabs(-dLt / c - evaluate(cfg.phi, "phi", base.x, base.y, base.t));
  r.pass = r.residual_x <= tol && r.residual_t <= tol;
  return r;
}

ElectricMultiplicities electric_ab_multiplicities(const FieldConfig& cfg,
                                                  const SpacetimeFrame& frame) {
  auto [tau, chi] = detail::plane_ledger(xt_plane(cfg, frame.y), plane_frame(frame));
  return {tau, chi};
}

} // namespace gaugephase
