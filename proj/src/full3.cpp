#include <gaugephase/full3.hpp>

#include "plane.hpp"

#include <gaugephase/errors.hpp>
#include <gaugephase/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaugephase {

using detail::kFieldTol;
using detail::kValidationTol;
using detail::Plane;

const char* to_string(Variant v) {
  switch (v) {
  case Variant::full1: return "full1";
  case Variant::full2: return "full2";
  case Variant::full4: return "full4";
  case Variant::fin: return "fin";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  for (Variant v : {Variant::full1, Variant::full2, Variant::full4, Variant::fin})
    if (s == to_string(v)) return v;
  throw PreconditionError("unknown full3 variant '" + s + "' (expected full1, full2, full4, fin)");
}

Frame3 Frame3::resolved() const {
  Frame3 r = *this;
  if (!r.x_ref) r.x_ref = x0;
  if (!r.y_ref) r.y_ref = y0;
  return r;
}

namespace {

bool overlaps(double lo, double hi, double a, double b) {
  return std::max(lo, std::min(a, b)) <= std::min(hi, std::max(a, b));
}

// Whether the field support box reaches the given coordinate ranges.
bool fields_reach(const Box& box, double xa, double xb, double ya, double yb, double ta,
                  double tb) {
  return overlaps(box.x_lo, box.x_hi, xa, xb) && overlaps(box.y_lo, box.y_hi, ya, yb) &&
         overlaps(box.t_lo, box.t_hi, ta, tb);
}

double a_path(const FieldConfig& cfg, const Frame3& f, double t, Branch sense,
              const QuadratureSpec& spec) {
  double y_along = sense == Branch::counterclockwise ? f.y0 : f.y;
  double x_up = sense == Branch::counterclockwise ? f.x : f.x0;
  double ax = integrate_1d([&](double u) { return evaluate(cfg.A_x, "A_x", u, y_along, t); },
                           f.x0, f.x, spec, axis_breaks(cfg, Axis::x, {0, y_along, t}, f.x0, f.x));
  double ay = integrate_1d([&](double v) { return evaluate(cfg.A_y, "A_y", x_up, v, t); }, f.y0,
                           f.y, spec, axis_breaks(cfg, Axis::y, {x_up, 0, t}, f.y0, f.y));
  return ax + ay;
}

// c int_{t0}^{t} dt' int E_along(s', fixed, t') ds' along x (at y = fixed) or y (at x = fixed).
double e_line(const FieldConfig& cfg, Axis along, double fixed, double s0, double s, double t0,
              double t, const QuadratureSpec& spec) {
  if (s0 == s || t0 == t) return 0.0;
  bool ax = along == Axis::x;
  if (ax ? !fields_reach(cfg.field_support, s0, s, fixed, fixed, t0, t)
         : !fields_reach(cfg.field_support, fixed, fixed, s0, s, t0, t))
    return 0.0;
  const Evaluator& E = ax ? cfg.E_x : cfg.E_y;
  const char* name = ax ? "E_x" : "E_y";
  Point3 base = ax ? Point3{0, fixed, 0} : Point3{fixed, 0, 0};
  auto f = [&](double sp, double tp) {
    return ax ? evaluate(E, name, sp, fixed, tp) : evaluate(E, name, fixed, sp, tp);
  };
  InnerBreaks inner = [&](double tp) {
    return axis_breaks(cfg, along, with(base, Axis::t, tp), s0, s);
  };
  auto outer = rect_breaks(cfg, along, s0, s, Axis::t, base, t0, t);
  return cfg.constants.c * integrate_rect(f, Rect{s0, s, t0, t}, spec, inner, outer);
}

double e_path(const FieldConfig& cfg, const Frame3& f, Branch sense, const QuadratureSpec& spec) {
  double y_along = sense == Branch::counterclockwise ? f.y0 : f.y;
  double x_up = sense == Branch::counterclockwise ? f.x : f.x0;
  return e_line(cfg, Axis::x, y_along, f.x0, f.x, f.t0, f.t, spec) +
         e_line(cfg, Axis::y, x_up, f.y0, f.y, f.t0, f.t, spec);
}

double magnetic_flux(const FieldConfig& cfg, const Frame3& f, double t, const QuadratureSpec& spec) {
  Plane pl = detail::xy_plane(cfg, t);
  double acc = 0;
  if (fields_reach(cfg.field_support, f.x0, f.x, f.y0, f.y, t, t))
    acc = detail::flux_accessible(pl, f.x0, f.y0, f.x, f.y, spec);
  return acc + detail::flux_inside(pl, f.x0, f.y0, f.x, f.y);
}

double time_integral(const FieldConfig& cfg, const Evaluator& e, const char* what, double x,
                     double y, double t0, double t, const QuadratureSpec& spec) {
  return integrate_1d([&](double s) { return evaluate(e, what, x, y, s); }, t0, t, spec,
                      axis_breaks(cfg, Axis::t, {x, y, 0}, t0, t));
}

void require_fields_free(const FieldConfig& cfg, const Frame3& f) {
  struct {
    const Evaluator& e;
    const char* name;
  } fields[] = {{cfg.B_z, "B_z"}, {cfg.E_x, "E_x"}, {cfg.E_y, "E_y"}};
  for (const auto& [e, name] : fields) {
    double v = evaluate(e, name, f.x, f.y, f.t);
    if (std::fabs(v) > kFieldTol)
      throw FieldAtObservationError(std::string(name) + " differs at the observation event (x=" +
                                        std::to_string(f.x) + ", y=" + std::to_string(f.y) +
                                        ", t=" + std::to_string(f.t) + ", value " +
                                        std::to_string(v) + ")",
                                    v);
  }
}

double fd_step(const Frame3& f) {
  return 1e-5 * std::max({1.0, std::fabs(f.x - f.x0), std::fabs(f.y - f.y0)});
}

double derivative(const Fn1& g, double s, double h) { return (g(s + h) - g(s - h)) / (2 * h); }

// G(y) for the paths along y0 first.
ConditionCheck g_condition(const FieldConfig& cfg, const Frame3& f, const ConditionSet& cs,
                           const QuadratureSpec& spec, double& value) {
  Plane pl0 = detail::xy_plane(cfg, f.t0);
  if (cs.G) {
    double want = integrate_1d([&](double u) { return pl0.F(u, f.y); }, f.x0, f.x, spec,
                               axis_breaks(cfg, Axis::x, {0, f.y, f.t0}, f.x0, f.x));
    double r = std::fabs(derivative(cs.G, f.y, fd_step(f)) - want);
    if (r > kValidationTol * std::max(1.0, std::fabs(want)))
      throw DecompositionUnsupported("G(y) independence check failed: residual " +
                                         std::to_string(r),
                                     "y", f.y);
    value = cs.G(f.y);
    return {"G(y)", r, true};
  }
  double r = detail::validate_segment_u(pl0, f.y, *f.x_ref, f.x, spec, "G(y)");
  value = 0;
  if (*f.x_ref != f.x0)
    value = detail::flux_accessible(pl0, f.x0, f.y0, *f.x_ref, f.y, spec) -
            detail::flux_accessible(pl0, f.x0, f.y0, *f.x_ref, *f.y_ref, spec);
  return {"G(y)", r, true};
}

// G^(x) for the paths up x0 first.
ConditionCheck g_hat_condition(const FieldConfig& cfg, const Frame3& f, const ConditionSet& cs,
                               const QuadratureSpec& spec, double& value) {
  Plane pl0 = detail::xy_plane(cfg, f.t0);
  if (cs.G_hat) {
    double want = -integrate_1d([&](double v) { return pl0.F(f.x, v); }, f.y0, f.y, spec,
                                axis_breaks(cfg, Axis::y, {f.x, 0, f.t0}, f.y0, f.y));
    double r = std::fabs(derivative(cs.G_hat, f.x, fd_step(f)) - want);
    if (r > kValidationTol * std::max(1.0, std::fabs(want)))
      throw DecompositionUnsupported("G^(x) independence check failed: residual " +
                                         std::to_string(r),
                                     "x", f.x);
    value = cs.G_hat(f.x);
    return {"G^(x)", r, true};
  }
  double r = detail::validate_segment_v(pl0, f.x, *f.y_ref, f.y, spec, "G^(x)");
  value = 0;
  if (*f.y_ref != f.y0) value = -detail::flux_accessible(pl0, f.x0, f.y0, f.x, *f.y_ref, spec);
  return {"G^(x)", r, true};
}

ConditionCheck f_condition(const FieldConfig& cfg, const Frame3& f, const ConditionSet& cs,
                           const QuadratureSpec& spec, double& value) {
  double c = cfg.constants.c;
  double ix = c * time_integral(cfg, cfg.E_x, "E_x", f.x, f.y, f.t0, f.t, spec);
  double iy = c * time_integral(cfg, cfg.E_y, "E_y", f.x, f.y, f.t0, f.t, spec);
  if (cs.F) {
    double h = fd_step(f);
    double rx = std::fabs(derivative([&](double s) { return cs.F(s, f.y); }, f.x, h) + ix);
    double ry = std::fabs(derivative([&](double s) { return cs.F(f.x, s); }, f.y, h) + iy);
    if (rx > kValidationTol * std::max(1.0, std::fabs(ix)))
      throw DecompositionUnsupported("F(x,y) independence check failed in x: residual " +
                                         std::to_string(rx),
                                     "x", f.x);
    if (ry > kValidationTol * std::max(1.0, std::fabs(iy)))
      throw DecompositionUnsupported("F(x,y) independence check failed in y: residual " +
                                         std::to_string(ry),
                                     "y", f.y);
    value = cs.F(f.x, f.y);
    return {"F(x,y)", std::max(rx, ry), true};
  }
  // F = 0 needs the E integrals to stop depending on the upper limits x and y.
  double worst = std::max(std::fabs(ix), std::fabs(iy));
  for (int k = 0; k <= 8; ++k) {
    double s = f.t0 + (f.t - f.t0) * k / 8.0;
    worst = std::max({worst, std::fabs(evaluate(cfg.E_x, "E_x", f.x, f.y, s)),
                      std::fabs(evaluate(cfg.E_y, "E_y", f.x, f.y, s))});
  }
  if (worst > kValidationTol) {
    bool x_side = std::fabs(ix) >= std::fabs(iy);
    throw DecompositionUnsupported(
        "F(x,y) = 0 fails: E reaches the observation point between t0 and t (largest " +
            std::to_string(worst) + ")",
        x_side ? "x" : "y", x_side ? f.x : f.y);
  }
  value = 0;
  return {"F(x,y)", worst, true};
}

bool along_y0_first(Variant v) { return v == Variant::full1 || v == Variant::full2; }

} // namespace

Ledger3 full_multiplicities(const FieldConfig& cfg, const Frame3& frame) {
  Plane pl0 = detail::xy_plane(cfg, frame.t0);
  double in = detail::flux_inside(pl0, frame.x0, frame.y0, frame.x, frame.y);
  return {in, -in};
}

GaugeSolution lambda_full(const FieldConfig& cfg, const Frame3& frame, Variant variant,
                          const ConditionSet& conditions, const QuadratureSpec& spec) {
  Frame3 f = frame.resolved();
  require_fields_free(cfg, f);

  bool ccw = along_y0_first(variant);
  Branch a_sense = ccw ? Branch::counterclockwise : Branch::clockwise;
  Branch e_sense = (variant == Variant::full1 || variant == Variant::fin)
                       ? Branch::clockwise
                       : Branch::counterclockwise;
  double t_b = (variant == Variant::full1 || variant == Variant::full4) ? f.t : f.t0;

  GaugeSolution s;
  s.branch = a_sense;
  s.e_branch = e_sense;
  s.flux_time = t_b;
  s.lambda0 = f.lambda0;

  double g = 0, fxy = 0;
  s.conditions.push_back(ccw ? g_condition(cfg, f, conditions, spec, g)
                             : g_hat_condition(cfg, f, conditions, spec, g));
  s.conditions.push_back(f_condition(cfg, f, conditions, spec, fxy));

  double c = cfg.constants.c;
  s.dirac_part = a_path(cfg, f, f.t, a_sense, spec) -
                 c * time_integral(cfg, cfg.phi, "phi", f.x0, f.y0, f.t0, f.t, spec);
  double flux = magnetic_flux(cfg, f, t_b, spec);
  s.nonlocal_part = (ccw ? -flux : flux) + e_path(cfg, f, e_sense, spec);
  s.gauge_fix_part = g + fxy;
  if (f.multiplicities) {
    Ledger3 l = full_multiplicities(cfg, f);
    s.multiplicity_part = ccw ? l.f_x0_t0 : l.h_hat_y0_t0;
  }
  s.assemble();
  return s;
}

ResidualReport verify_full_system(const FieldConfig& cfg, const Frame3& frame, Variant variant,
                                  double step, double tol, const ConditionSet& conditions,
                                  const QuadratureSpec& spec) {
  if (!(step > 0)) throw PreconditionError("finite-difference step must be > 0");
  Frame3 base = frame.resolved();
  auto at = [&](double dx, double dy, double dt) {
    Frame3 f = base;
    f.x += dx;
    f.y += dy;
    f.t += dt;
    return lambda_full(cfg, f, variant, conditions, spec).lambda;
  };
  ResidualReport r;
  r.tol = tol;
  r.lambda = lambda_full(cfg, base, variant, conditions, spec).lambda;
  double dx = (at(step, 0, 0) - at(-step, 0, 0)) / (2 * step);
  double dy = (at(0, step, 0) - at(0, -step, 0)) / (2 * step);
  double dt = (at(0, 0, step) - at(0, 0, -step)) / (2 * step);
  r.residual_x = std::fabs(dx - evaluate(cfg.A_x, "A_x", base.x, base.y, base.t));
  r.residual_y = std::fabs(dy - evaluate(cfg.A_y, "A_y", base.x, base.y, base.t));
  r.residual_t =
      std::fabs(-dt / cfg.constants.c - evaluate(cfg.phi, "phi", base.x, base.y, base.t));
  r.pass = r.residual_x <= tol && r.residual_y <= tol && r.residual_t <= tol;
  return r;
}

double van_kampen_delta(const FieldConfig& cfg, const Frame3& frame, const QuadratureSpec& spec) {
  for (int k = 0; k <= 4; ++k) {
    double s = frame.t0 + (frame.t - frame.t0) * k / 4.0;
    for (auto [px, py] : {std::pair{frame.x0, frame.y0}, std::pair{frame.x, frame.y}})
      if (evaluate(cfg.phi, "phi", px, py, s) != 0.0)
        throw PreconditionError("van Kampen difference needs the temporal gauge (phi = 0)");
  }
  Frame3 f = frame;
  f.x_ref.reset();
  f.y_ref.reset();
  f.multiplicities = true;
  return lambda_full(cfg, f, Variant::full2, {}, spec).lambda -
         lambda_full(cfg, f, Variant::fin, {}, spec).lambda;
}

Frame3 van_kampen_frame(double xc, double yc, double R, double t0, double t, double delta) {
  if (!(R > 0)) throw PreconditionError("observation distance must be > 0");
  Frame3 f;
  f.x0 = xc - delta;
  f.y0 = yc - delta;
  f.t0 = t0;
  f.x = xc + R / std::sqrt(2.0);
  f.y = yc + R / std::sqrt(2.0);
  f.t = t;
  return f;
}

FaradayCheck faraday_check(const FieldConfig& cfg, const Frame3& frame, const QuadratureSpec& spec,
                           double rel_tol) {
  FaradayCheck r;
  r.e_circulation = e_path(cfg, frame, Branch::counterclockwise, spec) -
                    e_path(cfg, frame, Branch::clockwise, spec);
  auto loop = [&](double t) {
    return a_path(cfg, frame, t, Branch::counterclockwise, spec) -
           a_path(cfg, frame, t, Branch::clockwise, spec);
  };
  r.a_circulation_t = loop(frame.t);
  r.a_circulation_t0 = loop(frame.t0);
  double change = r.a_circulation_t - r.a_circulation_t0;
  r.residual = std::fabs(r.e_circulation + change);
  r.pass = r.residual <= rel_tol * std::max(std::fabs(change), 1e-12);
  return r;
}

} // namespace gaugephase
