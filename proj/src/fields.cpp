#include <gaugephase/fields.hpp>

#include <gaugephase/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaugephase {

void PhysicalConstants::validate() const {
  if (!(c > 0)) throw PreconditionError("speed of light c must be > 0");
  if (!(flux_quantum > 0)) throw PreconditionError("flux_quantum must be > 0");
  if (!std::isfinite(q_over_hbar_c)) throw PreconditionError("q_over_hbar_c must be finite");
}

const char* axis_name(Axis a) {
  switch (a) {
  case Axis::x: return "x";
  case Axis::y: return "y";
  default: return "t";
  }
}

double get(const Point3& p, Axis a) {
  return a == Axis::x ? p.x : a == Axis::y ? p.y : p.t;
}

Point3 with(Point3 p, Axis a, double v) {
  (a == Axis::x ? p.x : a == Axis::y ? p.y : p.t) = v;
  return p;
}

bool Box::contains(const Point3& p) const {
  return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi && p.t >= t_lo && p.t <= t_hi;
}

bool Box::bounded() const {
  return std::isfinite(x_lo) && std::isfinite(x_hi) && std::isfinite(y_lo) &&
         std::isfinite(y_hi) && std::isfinite(t_lo) && std::isfinite(t_hi);
}

double evaluate(const Evaluator& f, const char* what, double x, double y, double t) {
  double v;
  try {
    v = f(x, y, t);
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(std::string(what) + " failed: " + e.what(), x, y, t);
  }
  if (!std::isfinite(v)) throw EvaluationError(std::string(what) + " is not finite", x, y, t);
  return v;
}

FieldConfig zero_config(const PhysicalConstants& k) {
  FieldConfig f;
  f.name = "zero";
  f.gauge = "all potentials zero";
  f.constants = k;
  auto z = [](double, double, double) { return 0.0; };
  f.A_x = f.A_y = f.phi = f.B_z = f.E_x = f.E_y = z;
  return f;
}

namespace {

double segment_distance(const EdgeSegment& s, double x, double y) {
  double dx = s.x2 - s.x1, dy = s.y2 - s.y1;
  double len2 = dx * dx + dy * dy;
  double u = len2 > 0 ? ((x - s.x1) * dx + (y - s.y1) * dy) / len2 : 0.0;
  if (!s.infinite) u = std::clamp(u, 0.0, 1.0);
  return std::hypot(x - (s.x1 + u * dx), y - (s.y1 + u * dy));
}

struct CollarVisitor {
  const Point3& p;
  double operator()(const EdgeSegment& s) const { return segment_distance(s, p.x, p.y); }
  double operator()(const EdgeCircle& c) const {
    return std::fabs(std::hypot(p.x - c.xc, p.y - c.yc) - c.r);
  }
  double operator()(const EdgeTime& e) const { return std::fabs(p.t - e.t); }
  double operator()(const EdgeLightFront& f) const {
    double r = std::hypot(p.x - f.xc, p.y - f.yc);
    double front = f.c * (p.t - f.t0);
    return front >= 0 ? std::fabs(r - front) : r - front;
  }
  double operator()(const EdgeSingular& s) const {
    double d2 = 0;
    if (s.x) d2 += (p.x - *s.x) * (p.x - *s.x);
    if (s.y) d2 += (p.y - *s.y) * (p.y - *s.y);
    if (s.t) d2 += (p.t - *s.t) * (p.t - *s.t);
    return std::sqrt(d2);
  }
};

} // namespace

double collar_distance(const FieldConfig& config, const Point3& p) {
  double d = Box::inf;
  for (const auto& e : config.edges) d = std::min(d, std::visit(CollarVisitor{p}, e));
  return d;
}

ConsistencyReport check_consistency(const FieldConfig& cfg, const Region& reg, int samples,
                                    double tol, double collar) {
  if (samples < 4) throw PreconditionError("consistency check needs samples >= 4");
  if (!(reg.x_hi > reg.x_lo) || reg.y_hi < reg.y_lo || reg.t_hi < reg.t_lo)
    throw PreconditionError("consistency region is empty");
  double size = std::max({reg.x_hi - reg.x_lo, reg.y_hi - reg.y_lo, reg.t_hi - reg.t_lo});
  double eps = collar * size;
  double h = std::min(1e-5 * size, 0.25 * eps);
  double c = cfg.constants.c;
  int nt = reg.t_hi > reg.t_lo ? samples : 1;
  int ny = reg.y_hi > reg.y_lo ? samples : 1;

  ConsistencyReport rep;
  rep.tol = tol;
  auto ev = [](const Evaluator& f, const char* n, const Point3& q) {
    return evaluate(f, n, q.x, q.y, q.t);
  };
  for (int k = 0; k < nt; ++k) {
    double t = nt == 1 ? reg.t_lo : reg.t_lo + (k + 0.5) * (reg.t_hi - reg.t_lo) / nt;
    for (int i = 0; i < samples; ++i) {
      double x = reg.x_lo + (i + 0.5) * (reg.x_hi - reg.x_lo) / samples;
      for (int j = 0; j < ny; ++j) {
        double y = ny == 1 ? reg.y_lo : reg.y_lo + (j + 0.5) * (reg.y_hi - reg.y_lo) / ny;
        Point3 p{x, y, t};
        if (collar_distance(cfg, p) < eps) {
          ++rep.skipped;
          continue;
        }
        ++rep.sampled;
        auto d = [&](const Evaluator& f, const char* n, Axis a) {
          return (ev(f, n, with(p, a, get(p, a) + h)) - ev(f, n, with(p, a, get(p, a) - h))) /
                 (2 * h);
        };
        double curl = d(cfg.A_y, "A_y", Axis::x) - d(cfg.A_x, "A_x", Axis::y);
        double rc = std::fabs(ev(cfg.B_z, "B_z", p) - curl);
        double rx = ev(cfg.E_x, "E_x", p) + d(cfg.phi, "phi", Axis::x) +
                    d(cfg.A_x, "A_x", Axis::t) / c;
        double ry = ev(cfg.E_y, "E_y", p) + d(cfg.phi, "phi", Axis::y) +
                    d(cfg.A_y, "A_y", Axis::t) / c;
        double rf = std::max(std::fabs(rx), std::fabs(ry));
        if (rc > rep.curl_residual) {
          rep.curl_residual = rc;
          rep.worst_curl = p;
        }
        if (rf > rep.faraday_residual) {
          rep.faraday_residual = rf;
          rep.worst_faraday = p;
        }
      }
    }
  }
  rep.pass = rep.curl_residual <= tol && rep.faraday_residual <= tol;
  return rep;
}

RetardedFields retarded_flux_fields(const FluxProfile& prof, double xc, double yc, double x,
                                    double y, double t, double c) {
  double dx = x - xc, dy = y - yc;
  double r = std::hypot(dx, dy);
  if (r == 0) throw SingularPointError("retarded flux fields are singular at the flux line");
  double tau = t - r / c;
  double two_pi_r = 2 * std::numbers::pi * r;
  double a_phi = prof.value(tau) / two_pi_r;
  double e_phi = -prof.rate(tau) / (two_pi_r * c);
  double ux = -dy / r, uy = dx / r; // azimuthal unit vector
  return {e_phi * ux, e_phi * uy, e_phi, a_phi * ux, a_phi * uy};
}

} // namespace gaugephase
