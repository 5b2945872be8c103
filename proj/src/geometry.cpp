#include <gaugephase/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaugephase {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

std::vector<double> finish(std::vector<double> v, double lo, double hi) {
  std::erase_if(v, [&](double b) { return !(b > lo && b < hi); });
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void add_angle(std::vector<double>& out, double ang, double lo, double hi) {
  double k = std::ceil((lo - ang) / two_pi);
  for (double a = ang + k * two_pi; a < hi; a += two_pi) out.push_back(a);
}

// The spatial axis other than a (a spatial).
Axis other(Axis a) { return a == Axis::x ? Axis::y : Axis::x; }

void segment_along(const EdgeSegment& s, Axis along, const Point3& p, std::vector<double>& out) {
  if (along == Axis::t) return;
  Axis o = other(along);
  double a1 = along == Axis::x ? s.x1 : s.y1, a2 = along == Axis::x ? s.x2 : s.y2;
  double o1 = o == Axis::x ? s.x1 : s.y1, o2 = o == Axis::x ? s.x2 : s.y2;
  double fixed = get(p, o);
  if (o1 == o2) {
    if (fixed == o1 && !s.infinite) {
      out.push_back(a1);
      out.push_back(a2);
    }
    return;
  }
  double u = (fixed - o1) / (o2 - o1);
  if (s.infinite || (u >= 0 && u <= 1)) out.push_back(a1 + u * (a2 - a1));
}

void circle_along(double xc, double yc, double r, Axis along, const Point3& p,
                  std::vector<double>& out) {
  if (along == Axis::t || r < 0) return;
  Axis o = other(along);
  double cc = along == Axis::x ? xc : yc;
  double d = get(p, o) - (o == Axis::x ? xc : yc);
  if (std::fabs(d) > r) return;
  double w = std::sqrt(r * r - d * d);
  out.push_back(cc - w);
  out.push_back(cc + w);
}

struct AlongVisitor {
  Axis along;
  const Point3& p;
  std::vector<double>& out;

  void operator()(const EdgeSegment& s) const { segment_along(s, along, p, out); }
  void operator()(const EdgeCircle& c) const { circle_along(c.xc, c.yc, c.r, along, p, out); }
  void operator()(const EdgeTime& e) const {
    if (along == Axis::t) out.push_back(e.t);
  }
  void operator()(const EdgeLightFront& f) const {
    if (along == Axis::t) {
      out.push_back(f.t0 + std::hypot(p.x - f.xc, p.y - f.yc) / f.c);
      return;
    }
    double rho = f.c * (p.t - f.t0);
    if (rho >= 0) circle_along(f.xc, f.yc, rho, along, p, out);
  }
  void operator()(const EdgeSingular& s) const {
    const std::optional<double>& v = along == Axis::x ? s.x : along == Axis::y ? s.y : s.t;
    if (v) out.push_back(*v);
  }
};

struct RectVisitor {
  Axis inner;
  double a, b;
  Axis outer;
  const Point3& p;
  std::vector<double>& out;

  bool in(double v) const { return v >= std::min(a, b) && v <= std::max(a, b); }
  bool spatial_pair() const { return inner != Axis::t && outer != Axis::t; }

  void operator()(const EdgeSegment& s) const {
    if (!spatial_pair() || s.infinite) return;
    double i1 = inner == Axis::x ? s.x1 : s.y1, i2 = inner == Axis::x ? s.x2 : s.y2;
    double o1 = outer == Axis::x ? s.x1 : s.y1, o2 = outer == Axis::x ? s.x2 : s.y2;
    if (in(i1)) out.push_back(o1);
    if (in(i2)) out.push_back(o2);
  }
  void circle(double xc, double yc, double r) const {
    double ic = inner == Axis::x ? xc : yc, oc = outer == Axis::x ? xc : yc;
    if (in(ic)) {
      out.push_back(oc - r);
      out.push_back(oc + r);
    }
  }
  void operator()(const EdgeCircle& c) const {
    if (spatial_pair()) circle(c.xc, c.yc, c.r);
  }
  void operator()(const EdgeTime& e) const {
    if (outer == Axis::t) out.push_back(e.t);
  }
  void operator()(const EdgeLightFront& f) const {
    if (spatial_pair()) {
      double rho = f.c * (p.t - f.t0);
      if (rho > 0) circle(f.xc, f.yc, rho);
    } else if (outer == Axis::t) {
      double ic = inner == Axis::x ? f.xc : f.yc;
      Axis rest = other(inner);
      double d = get(p, rest) - (rest == Axis::x ? f.xc : f.yc);
      if (in(ic)) out.push_back(f.t0 + std::fabs(d) / f.c);
    }
  }
  void operator()(const EdgeSingular& s) const {
    auto pick = [&](Axis ax) -> const std::optional<double>& {
      return ax == Axis::x ? s.x : ax == Axis::y ? s.y : s.t;
    };
    const auto& o = pick(outer);
    const auto& i = pick(inner);
    if (o && (!i || in(*i))) out.push_back(*o);
  }
};

// ---- polar helpers ----

// Distances rho >= 0 along the ray from o with direction angle phi that hit the circle.
void ray_circle(double ox, double oy, double phi, double xc, double yc, double r,
                std::vector<double>& out) {
  double dx = std::cos(phi), dy = std::sin(phi);
  double fx = ox - xc, fy = oy - yc;
  double bq = fx * dx + fy * dy;
  double cq = fx * fx + fy * fy - r * r;
  double disc = bq * bq - cq;
  if (disc < 0) return;
  double s = std::sqrt(disc);
  out.push_back(-bq - s);
  out.push_back(-bq + s);
}

void arc_circle(double ox, double oy, double rho, double xc, double yc, double r, double lo,
                double hi, std::vector<double>& out) {
  double D = std::hypot(xc - ox, yc - oy);
  if (D == 0 || rho <= 0 || D > rho + r || D < std::fabs(rho - r)) return;
  double base = std::atan2(yc - oy, xc - ox);
  double half = std::acos(std::clamp((rho * rho + D * D - r * r) / (2 * rho * D), -1.0, 1.0));
  add_angle(out, base - half, lo, hi);
  add_angle(out, base + half, lo, hi);
}

struct PolarVisitor {
  double ox, oy, t;
  std::vector<double>& out;
  double lo, hi;

  // ray mode
  void ray(const Discontinuity& d, double phi) const {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, EdgeSegment>) {
            double dx = std::cos(phi), dy = std::sin(phi);
            double ex = e.x2 - e.x1, ey = e.y2 - e.y1;
            double den = dx * ey - dy * ex;
            if (den == 0) return;
            double wx = e.x1 - ox, wy = e.y1 - oy;
            double rho = (wx * ey - wy * ex) / den;
            double s = (wx * dy - wy * dx) / den;
            if (e.infinite || (s >= 0 && s <= 1)) out.push_back(rho);
          } else if constexpr (std::is_same_v<T, EdgeCircle>) {
            ray_circle(ox, oy, phi, e.xc, e.yc, e.r, out);
          } else if constexpr (std::is_same_v<T, EdgeLightFront>) {
            double rho = e.c * (t - e.t0);
            if (rho > 0) ray_circle(ox, oy, phi, e.xc, e.yc, rho, out);
          } else if constexpr (std::is_same_v<T, EdgeSingular>) {
            if (e.x && e.y) out.push_back((*e.x - ox) * std::cos(phi) + (*e.y - oy) * std::sin(phi));
          }
        },
        d);
  }

  void arc(const Discontinuity& d, double rho) const {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, EdgeSegment>) {
            double ex = e.x2 - e.x1, ey = e.y2 - e.y1;
            double fx = e.x1 - ox, fy = e.y1 - oy;
            double aq = ex * ex + ey * ey, bq = 2 * (fx * ex + fy * ey),
                   cq = fx * fx + fy * fy - rho * rho;
            double disc = bq * bq - 4 * aq * cq;
            if (aq == 0 || disc < 0) return;
            for (double sg : {-1.0, 1.0}) {
              double s = (-bq + sg * std::sqrt(disc)) / (2 * aq);
              if (e.infinite || (s >= 0 && s <= 1))
                add_angle(out, std::atan2(fy + s * ey, fx + s * ex), lo, hi);
            }
          } else if constexpr (std::is_same_v<T, EdgeCircle>) {
            arc_circle(ox, oy, rho, e.xc, e.yc, e.r, lo, hi, out);
          } else if constexpr (std::is_same_v<T, EdgeLightFront>) {
            double r = e.c * (t - e.t0);
            if (r > 0) arc_circle(ox, oy, rho, e.xc, e.yc, r, lo, hi, out);
          } else if constexpr (std::is_same_v<T, EdgeSingular>) {
            if (e.x && e.y) add_angle(out, std::atan2(*e.y - oy, *e.x - ox), lo, hi);
          }
        },
        d);
  }

  void sector(const Discontinuity& d, double ra, double rb) const {
    auto in = [&](double r) { return r >= std::min(ra, rb) && r <= std::max(ra, rb); };
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, EdgeSegment>) {
            for (auto [px, py] : {std::pair{e.x1, e.y1}, std::pair{e.x2, e.y2}})
              if (!e.infinite && in(std::hypot(px - ox, py - oy)))
                add_angle(out, std::atan2(py - oy, px - ox), lo, hi);
            double ex = e.x2 - e.x1, ey = e.y2 - e.y1, len2 = ex * ex + ey * ey;
            if (len2 == 0) return;
            double s = ((ox - e.x1) * ex + (oy - e.y1) * ey) / len2;
            double fx = e.x1 + s * ex - ox, fy = e.y1 + s * ey - oy;
            if ((e.infinite || (s >= 0 && s <= 1)) && in(std::hypot(fx, fy)))
              add_angle(out, std::atan2(fy, fx), lo, hi);
          } else if constexpr (std::is_same_v<T, EdgeCircle> || std::is_same_v<T, EdgeLightFront>) {
            double r;
            if constexpr (std::is_same_v<T, EdgeCircle>) r = e.r;
            else r = e.c * (t - e.t0);
            if (r <= 0) return;
            double D = std::hypot(e.xc - ox, e.yc - oy);
            if (D <= r) return;
            double tangent = std::sqrt(D * D - r * r);
            if (!in(tangent)) return;
            double base = std::atan2(e.yc - oy, e.xc - ox), half = std::asin(r / D);
            add_angle(out, base - half, lo, hi);
            add_angle(out, base + half, lo, hi);
          } else if constexpr (std::is_same_v<T, EdgeSingular>) {
            if (e.x && e.y && in(std::hypot(*e.x - ox, *e.y - oy)))
              add_angle(out, std::atan2(*e.y - oy, *e.x - ox), lo, hi);
          }
        },
        d);
  }
};

} // namespace

std::vector<double> axis_breaks(const FieldConfig& cfg, Axis along, const Point3& p, double lo,
                                double hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> out;
  for (const auto& e : cfg.edges) std::visit(AlongVisitor{along, p, out}, e);
  return finish(std::move(out), lo, hi);
}

std::vector<double> rect_breaks(const FieldConfig& cfg, Axis inner, double a, double b,
                                Axis outer, const Point3& p, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> out;
  for (double edge : {a, b}) {
    Point3 q = with(p, inner, edge);
    for (const auto& e : cfg.edges) std::visit(AlongVisitor{outer, q, out}, e);
  }
  for (const auto& e : cfg.edges) std::visit(RectVisitor{inner, a, b, outer, p, out}, e);
  return finish(std::move(out), lo, hi);
}

std::vector<double> ray_breaks(const FieldConfig& cfg, double ox, double oy, double t, double phi,
                               double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> out;
  PolarVisitor v{ox, oy, t, out, lo, hi};
  for (const auto& e : cfg.edges) v.ray(e, phi);
  return finish(std::move(out), lo, hi);
}

std::vector<double> arc_breaks(const FieldConfig& cfg, double ox, double oy, double t, double rho,
                               double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> out;
  PolarVisitor v{ox, oy, t, out, lo, hi};
  for (const auto& e : cfg.edges) v.arc(e, rho);
  return finish(std::move(out), lo, hi);
}

std::vector<double> sector_breaks(const FieldConfig& cfg, double ox, double oy, double t,
                                  double rho_a, double rho_b, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> out;
  PolarVisitor v{ox, oy, t, out, lo, hi};
  for (const auto& e : cfg.edges) {
    v.arc(e, rho_a);
    v.arc(e, rho_b);
    v.sector(e, rho_a, rho_b);
  }
  return finish(std::move(out), lo, hi);
}

} // namespace gaugephase
