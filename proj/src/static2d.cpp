#include <gaugephase/static2d.hpp>

#include "plane.hpp"

#include <gaugephase/errors.hpp>
#include <gaugephase/geometry.hpp>

#include <cmath>
#include <numbers>

namespace gaugephase {

using detail::Plane;
using detail::PlaneFrame;

namespace detail {

Plane xy_plane(const FieldConfig& cfg, double t) {
  Plane pl;
  pl.P = [&cfg, t](double x, double y) { return evaluate(cfg.A_x, "A_x", x, y, t); };
  pl.Q = [&cfg, t](double x, double y) { return evaluate(cfg.A_y, "A_y", x, y, t); };
  pl.F = [&cfg, t](double x, double y) { return evaluate(cfg.B_z, "B_z", x, y, t); };
  pl.along_u = [&cfg, t](double y, double lo, double hi) {
    return axis_breaks(cfg, Axis::x, {0, y, t}, lo, hi);
  };
  pl.along_v = [&cfg, t](double x, double lo, double hi) {
    return axis_breaks(cfg, Axis::y, {x, 0, t}, lo, hi);
  };
  pl.rect_v = [&cfg, t](double a, double b, double lo, double hi) {
    return rect_breaks(cfg, Axis::x, a, b, Axis::y, {0, 0, t}, lo, hi);
  };
  pl.rect_u = [&cfg, t](double a, double b, double lo, double hi) {
    return rect_breaks(cfg, Axis::y, a, b, Axis::x, {0, 0, t}, lo, hi);
  };
  if (cfg.magnetic_flux) {
    pl.center = {cfg.magnetic_flux->xc, cfg.magnetic_flux->yc};
    pl.enclosed = cfg.magnetic_flux->flux(t);
  }
  pl.u_name = "x";
  pl.v_name = "y";
  pl.g_name = "g(x)";
  pl.h_name = "h(y)";
  return pl;
}

} // namespace detail

namespace {

using detail::xy_plane;

PlaneFrame plane_frame(const ObservationFrame& f) {
  ObservationFrame r = f.resolved();
  return {r.x0, r.y0, r.x, r.y, *r.x_ref, *r.y_ref, r.lambda0, r.multiplicities};
}

} // namespace

ObservationFrame ObservationFrame::resolved() const {
  ObservationFrame r = *this;
  if (!r.x_ref) r.x_ref = x;
  if (!r.y_ref) r.y_ref = y0;
  return r;
}

GaugeSolution lambda1_static(const FieldConfig& cfg, const ObservationFrame& frame,
                             const QuadratureSpec& spec) {
  return detail::plane_clockwise(xy_plane(cfg, frame.t), plane_frame(frame), spec);
}

GaugeSolution lambda2_static(const FieldConfig& cfg, const ObservationFrame& frame,
                             const QuadratureSpec& spec) {
  return detail::plane_counterclockwise(xy_plane(cfg, frame.t), plane_frame(frame), spec);
}

ResidualReport verify_gradient(const FieldConfig& cfg, const ObservationFrame& frame,
                               const StaticSolver& solver, double step, double tol,
                               const QuadratureSpec& spec) {
  if (!(step > 0)) throw PreconditionError("finite-difference step must be > 0");
  ObservationFrame base = frame.resolved();
  auto at = [&](double dx, double dy) {
    ObservationFrame f = base;
    f.x += dx;
    f.y += dy;
    return solver(cfg, f, spec).lambda;
  };
  ResidualReport r;
  r.tol = tol;
  r.lambda = solver(cfg, base, spec).lambda;
  double dLx = (at(step, 0) - at(-step, 0)) / (2 * step);
  double dLy = (at(0, step) - at(0, -step)) / (2 * step);
  r.residual_x = std::fabs(dLx - evaluate(cfg.A_x, "A_x", base.x, base.y, base.t));
  r.residual_y = std::fabs(dLy - evaluate(cfg.A_y, "A_y", base.x, base.y, base.t));
  r.pass = r.residual_x <= tol && r.residual_y <= tol;
  return r;
}

double cancellation_check(const FieldConfig& cfg, const ObservationFrame& frame,
                          const QuadratureSpec& spec) {
  return lambda1_static(cfg, frame, spec).lambda - lambda2_static(cfg, frame, spec).lambda;
}

MultiplicityLedger ab_multiplicities(const FieldConfig& cfg, const ObservationFrame& frame) {
  auto [f, h] = detail::plane_ledger(xy_plane(cfg, frame.t), plane_frame(frame));
  return {f, h};
}

GaugeSolution lambda_polar(const FieldConfig& cfg, const PolarFrame& frame, Branch branch,
                           const QuadratureSpec& spec) {
  constexpr double pi = std::numbers::pi;
  for (const PolarPoint& q : {frame.p0, frame.p}) {
    if (q.rho < 0) throw PreconditionError("polar radius must be >= 0");
    if (!(q.phi > -pi && q.phi <= pi)) throw PreconditionError("polar angle must be in (-pi, pi]");
  }
  double ox = frame.ox, oy = frame.oy, t = frame.t;
  auto X = [=](double r, double p) { return ox + r * std::cos(p); };
  auto Y = [=](double r, double p) { return oy + r * std::sin(p); };

  Plane pl;
  pl.P = [&, X, Y](double r, double p) {
    double ax = evaluate(cfg.A_x, "A_x", X(r, p), Y(r, p), t);
    double ay = evaluate(cfg.A_y, "A_y", X(r, p), Y(r, p), t);
    return ax * std::cos(p) + ay * std::sin(p);
  };
  pl.Q = [&, X, Y](double r, double p) {
    if (r == 0) return 0.0;
    double ax = evaluate(cfg.A_x, "A_x", X(r, p), Y(r, p), t);
    double ay = evaluate(cfg.A_y, "A_y", X(r, p), Y(r, p), t);
    return r * (-ax * std::sin(p) + ay * std::cos(p));
  };
  pl.F = [&, X, Y](double r, double p) {
    return r * evaluate(cfg.B_z, "B_z", X(r, p), Y(r, p), t);
  };
  pl.along_u = [&](double p, double lo, double hi) { return ray_breaks(cfg, ox, oy, t, p, lo, hi); };
  pl.along_v = [&](double r, double lo, double hi) { return arc_breaks(cfg, ox, oy, t, r, lo, hi); };
  pl.rect_v = [&](double a, double b, double lo, double hi) {
    return sector_breaks(cfg, ox, oy, t, a, b, lo, hi);
  };
  if (cfg.magnetic_flux) {
    double dx = cfg.magnetic_flux->xc - ox, dy = cfg.magnetic_flux->yc - oy;
    pl.center = {std::hypot(dx, dy), std::atan2(dy, dx)};
    pl.enclosed = cfg.magnetic_flux->flux(t);
  }
  pl.u_name = "rho";
  pl.v_name = "phi";
  pl.g_name = "g(rho)";
  pl.h_name = "h(phi)";

  PlaneFrame pf{frame.p0.rho, frame.p0.phi, frame.p.rho, frame.p.phi,
                frame.rho_ref.value_or(frame.p.rho), frame.phi_ref.value_or(frame.p0.phi),
                frame.lambda0, frame.multiplicities};
  GaugeSolution s = branch == Branch::clockwise ? detail::plane_clockwise(pl, pf, spec)
                                                : detail::plane_counterclockwise(pl, pf, spec);
  if (std::min(frame.p0.rho, frame.p.rho) == 0)
    s.warnings.push_back("integration range touches rho = 0; azimuthal potentials may be singular");
  return s;
}

} // namespace gaugephase
