#include <gaugephase/catalog.hpp>

#include <gaugephase/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaugephase {

namespace {

constexpr double inf = Box::inf;
const double sqrt3 = std::sqrt(3.0);

double clampd(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

FieldConfig base(const std::string& name, const std::string& gauge, const PhysicalConstants& k) {
  k.validate();
  FieldConfig f = zero_config(k);
  f.name = name;
  f.gauge = gauge;
  return f;
}

EdgeSegment vline(double x) { return {x, 0, x, 1, true}; }
EdgeSegment hline(double y) { return {0, y, 1, y, true}; }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

} // namespace

FieldConfig vertical_strip(double x_lo, double x_hi, double B0, const PhysicalConstants& k) {
  require(x_hi > x_lo, "vertical_strip needs x_hi > x_lo");
  FieldConfig f = base("vertical_strip", "A_x = 0, A_y = B0 clamp(x - x_lo, 0, x_hi - x_lo)", k);
  double w = x_hi - x_lo;
  f.A_y = [=](double x, double, double) { return B0 * clampd(x - x_lo, 0, w); };
  f.B_z = [=](double x, double, double) { return x >= x_lo && x <= x_hi ? B0 : 0.0; };
  f.support = Box{x_lo, inf, -inf, inf, -inf, inf};
  f.field_support = Box{x_lo, x_hi, -inf, inf, -inf, inf};
  f.edges = {vline(x_lo), vline(x_hi)};
  return f;
}

FieldConfig horizontal_strip(double y_lo, double y_hi, double B0, const PhysicalConstants& k) {
  require(y_hi > y_lo, "horizontal_strip needs y_hi > y_lo");
  FieldConfig f =
      base("horizontal_strip", "A_y = 0, A_x = -B0 clamp(y - y_lo, 0, y_hi - y_lo)", k);
  double w = y_hi - y_lo;
  f.A_x = [=](double, double y, double) { return -B0 * clampd(y - y_lo, 0, w); };
  f.B_z = [=](double, double y, double) { return y >= y_lo && y <= y_hi ? B0 : 0.0; };
  f.support = Box{-inf, inf, y_lo, inf, -inf, inf};
  f.field_support = Box{-inf, inf, y_lo, y_hi, -inf, inf};
  f.edges = {hline(y_lo), hline(y_hi)};
  return f;
}

FieldConfig time_strip(double t_lo, double t_hi, double E0, const PhysicalConstants& k) {
  require(t_hi > t_lo, "time_strip needs t_hi > t_lo");
  FieldConfig f = base("time_strip", "phi = 0, A_x = -c E0 clamp(t - t_lo, 0, t_hi - t_lo)", k);
  double T = t_hi - t_lo, c = k.c;
  f.A_x = [=](double, double, double t) { return -c * E0 * clampd(t - t_lo, 0, T); };
  f.E_x = [=](double, double, double t) { return t >= t_lo && t <= t_hi ? E0 : 0.0; };
  f.support = Box{-inf, inf, -inf, inf, t_lo, inf};
  f.field_support = Box{-inf, inf, -inf, inf, t_lo, t_hi};
  f.edges = {EdgeTime{t_lo}, EdgeTime{t_hi}};
  return f;
}

FieldConfig capacitor_1d(double x_lo, double x_hi, double E0, double t_on, double t_off,
                         const PhysicalConstants& k) {
  require(x_hi > x_lo, "capacitor_1d needs x_hi > x_lo");
  require(t_off > t_on, "capacitor_1d needs t_off > t_on");
  FieldConfig f =
      base("capacitor_1d", "A = 0, phi = -E0(t) clamp(x - x_lo, 0, x_hi - x_lo)", k);
  double w = x_hi - x_lo;
  auto on = [=](double t) { return t >= t_on && t <= t_off; };
  f.phi = [=](double x, double, double t) { return on(t) ? -E0 * clampd(x - x_lo, 0, w) : 0.0; };
  f.E_x = [=](double x, double, double t) {
    return on(t) && x >= x_lo && x <= x_hi ? E0 : 0.0;
  };
  f.support = Box{x_lo, inf, -inf, inf, t_on, t_off};
  f.field_support = Box{x_lo, x_hi, -inf, inf, t_on, t_off};
  f.edges = {vline(x_lo), vline(x_hi)};
  if (std::isfinite(t_on)) f.edges.push_back(EdgeTime{t_on});
  if (std::isfinite(t_off)) f.edges.push_back(EdgeTime{t_off});
  return f;
}

FieldConfig triangle(double a, double B0, double x0, double y0, const PhysicalConstants& k) {
  require(a > 0, "triangle needs a > 0");
  FieldConfig f = base("triangle", "A_y = 0, A_x = -B0 clamp(y - y0, 0, height(x))", k);
  double H = sqrt3 * a / 2;
  auto height = [=](double x) {
    double X = x - x0;
    return X <= 0 || X >= a ? 0.0 : sqrt3 * std::min(X, a - X);
  };
  f.A_x = [=](double x, double y, double) { return -B0 * clampd(y - y0, 0, height(x)); };
  f.B_z = [=](double x, double y, double) {
    double Y = y - y0;
    return Y >= 0 && Y <= height(x) ? B0 : 0.0;
  };
  f.support = Box{x0, x0 + a, y0, inf, -inf, inf};
  f.field_support = Box{x0, x0 + a, y0, y0 + H, -inf, inf};
  f.edges = {EdgeSegment{x0, y0, x0 + a, y0}, EdgeSegment{x0, y0, x0 + a / 2, y0 + H},
             EdgeSegment{x0 + a, y0, x0 + a / 2, y0 + H}};
  // A_x kinks along these verticals above the base
  for (double xv : {x0, x0 + a / 2, x0 + a})
    f.edges.push_back(EdgeSegment{xv, y0, xv, y0 + H, true});
  return f;
}

FieldConfig solenoid_flux(double flux, double xc, double yc, const PhysicalConstants& k) {
  FieldConfig f = base("solenoid_flux", "A = flux / (2 pi r) along the azimuth", k);
  double s = flux / (2 * std::numbers::pi);
  auto r2 = [=](double x, double y) {
    double d = (x - xc) * (x - xc) + (y - yc) * (y - yc);
    if (d == 0) throw SingularPointError("solenoid potential is singular on the flux line");
    return d;
  };
  f.A_x = [=](double x, double y, double) { return -s * (y - yc) / r2(x, y); };
  f.A_y = [=](double x, double y, double) { return s * (x - xc) / r2(x, y); };
  f.support = Box::everywhere();
  f.edges = {EdgeSingular{xc, yc, std::nullopt}};
  f.magnetic_flux = EnclosedMagneticFlux{xc, yc, [flux](double) { return flux; }};
  return f;
}

FieldConfig circular_blob(double B0, double xc, double yc, double R, const PhysicalConstants& k) {
  require(R > 0, "circular_blob needs radius > 0");
  FieldConfig f = base("circular_blob", "symmetric gauge about the disk center", k);
  // A = a(r)/r * (-(y-yc), x-xc) with a(r) = B0 r/2 inside, B0 R^2/(2r) outside
  auto scale = [=](double x, double y) {
    double d2 = (x - xc) * (x - xc) + (y - yc) * (y - yc);
    return d2 <= R * R ? B0 / 2 : B0 * R * R / (2 * d2);
  };
  f.A_x = [=](double x, double y, double) { return -scale(x, y) * (y - yc); };
  f.A_y = [=](double x, double y, double) { return scale(x, y) * (x - xc); };
  f.B_z = [=](double x, double y, double) {
    return (x - xc) * (x - xc) + (y - yc) * (y - yc) <= R * R ? B0 : 0.0;
  };
  f.support = Box::everywhere();
  f.field_support = Box{xc - R, xc + R, yc - R, yc + R, -inf, inf};
  f.edges = {EdgeCircle{xc, yc, R}};
  return f;
}

FieldConfig retarded_flux(const FluxProfile& prof, double xc, double yc,
                          const PhysicalConstants& k) {
  FieldConfig f = base("retarded_flux", "phi = 0, A_phi = Phi(t - r/c) / (2 pi r)", k);
  double c = k.c;
  auto at = [=](double x, double y, double t) {
    return retarded_flux_fields(prof, xc, yc, x, y, t, c);
  };
  f.A_x = [=](double x, double y, double t) { return at(x, y, t).A_x; };
  f.A_y = [=](double x, double y, double t) { return at(x, y, t).A_y; };
  f.B_z = [=](double x, double y, double t) { return at(x, y, t).B_z; };
  f.E_x = [=](double x, double y, double t) { return at(x, y, t).E_x; };
  f.E_y = [=](double x, double y, double t) { return at(x, y, t).E_y; };
  f.support = Box::everywhere();
  f.field_support = Box{-inf, inf, -inf, inf, prof.t0, inf};
  f.edges = {EdgeLightFront{xc, yc, prof.t0, c}, EdgeSingular{xc, yc, std::nullopt}};
  f.magnetic_flux = EnclosedMagneticFlux{xc, yc, [prof](double t) { return prof.value(t); }};
  return f;
}

FieldConfig spacetime_vortex(double flux, double xc, double tc, const PhysicalConstants& k) {
  FieldConfig f = base("spacetime_vortex",
                       "A_x = -kappa (t - tc)/rho^2, phi = -kappa (x - xc)/(c rho^2), "
                       "kappa = -flux/(2 pi), rho^2 = (x - xc)^2 + (t - tc)^2",
                       k);
  double kappa = -flux / (2 * std::numbers::pi), c = k.c;
  auto rho2 = [=](double x, double t) {
    double d = (x - xc) * (x - xc) + (t - tc) * (t - tc);
    if (d == 0) throw SingularPointError("spacetime vortex is singular at its center");
    return d;
  };
  f.A_x = [=](double x, double, double t) { return -kappa * (t - tc) / rho2(x, t); };
  f.phi = [=](double x, double, double t) { return -kappa * (x - xc) / (c * rho2(x, t)); };
  f.support = Box::everywhere();
  f.edges = {EdgeSingular{xc, std::nullopt, tc}};
  f.electric_flux = EnclosedElectricFlux{xc, tc, flux};
  return f;
}

// ---- name-based construction ----

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"zero", "all potentials and fields zero", "trivial", {}},
      {"vertical_strip",
       "uniform B_z in a strip x_lo <= x <= x_hi",
       "A_y = B0 clamp(x - x_lo, 0, w)",
       {{"x_lo", 1, "left edge"}, {"x_hi", 2, "right edge"}, {"B0", 1, "field amplitude"}}},
      {"horizontal_strip",
       "uniform B_z in a strip y_lo <= y <= y_hi",
       "A_x = -B0 clamp(y - y_lo, 0, w)",
       {{"y_lo", 1, "lower edge"}, {"y_hi", 2, "upper edge"}, {"B0", 1, "field amplitude"}}},
      {"time_strip",
       "uniform E_x everywhere during t_lo <= t <= t_hi",
       "phi = 0, A_x = -c E0 clamp(t - t_lo, 0, T)",
       {{"t_lo", 0, "switch-on time"}, {"t_hi", 1, "switch-off time"}, {"E0", 1, "amplitude"}}},
      {"capacitor_1d",
       "E_x = E0 between plates x_lo..x_hi while t_on <= t <= t_off",
       "A = 0, phi = -E0 clamp(x - x_lo, 0, w)",
       {{"x_lo", 1, "first plate"},
        {"x_hi", 2, "second plate"},
        {"E0", 1, "field amplitude"},
        {"t_on", -inf, "switch-on time"},
        {"t_off", inf, "switch-off time"}}},
      {"triangle",
       "uniform B_z inside an equilateral triangle",
       "A_y = 0, A_x = -B0 clamp(y - y_offset, 0, height(x))",
       {{"a", 1, "side length"},
        {"B0", 1, "field amplitude"},
        {"x_offset", 0, "left vertex x"},
        {"y_offset", 0, "base y"}}},
      {"solenoid_flux",
       "idealized inaccessible flux line (multiply connected)",
       "A = flux/(2 pi r) azimuthal",
       {{"flux", 1, "enclosed flux"}, {"xc", 0, "center x"}, {"yc", 0, "center y"}}},
      {"circular_blob",
       "uniform B_z inside a disk",
       "symmetric gauge about the center",
       {{"B0", 1, "field amplitude"},
        {"xc", 0, "center x"},
        {"yc", 0, "center y"},
        {"radius", 0.5, "disk radius"}}},
      {"retarded_flux",
       "confined flux Phi(t) = phi0 + k (t - t0) after t0 with sharp-front retarded fields",
       "phi = 0, A_phi = Phi(t - r/c)/(2 pi r)",
       {{"phi0", 1, "flux before t0"},
        {"k", 0.1, "ramp rate"},
        {"t0", 0, "ramp start"},
        {"xc", 0, "center x"},
        {"yc", 0, "center y"}}},
      {"spacetime_vortex",
       "field-free (x,t) potentials enclosing an inaccessible electric flux",
       "A_x = -kappa (t - tc)/rho^2, phi = -kappa (x - xc)/(c rho^2)",
       {{"flux", 1, "enclosed electric flux"}, {"xc", 0, "center x"}, {"tc", 0, "center t"}}},
  };
  return entries;
}

FieldConfig make_builtin(const std::string& name, const ParamMap& params,
                         const PhysicalConstants& k) {
  const auto& cat = builtin_catalog();
  auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& e) { return e.name == name; });
  if (it == cat.end()) throw PreconditionError("unknown built-in config '" + name + "'");
  k.validate();
  ParamMap p;
  for (const auto& d : it->params) p[d.name] = d.default_value;
  for (const auto& [key, v] : params) {
    if (!p.count(key))
      throw PreconditionError("config '" + name + "' has no parameter '" + key + "'");
    p[key] = v;
  }
  if (name == "zero") return zero_config(k);
  if (name == "vertical_strip") return vertical_strip(p["x_lo"], p["x_hi"], p["B0"], k);
  if (name == "horizontal_strip") return horizontal_strip(p["y_lo"], p["y_hi"], p["B0"], k);
  if (name == "time_strip") return time_strip(p["t_lo"], p["t_hi"], p["E0"], k);
  if (name == "capacitor_1d")
    return capacitor_1d(p["x_lo"], p["x_hi"], p["E0"], p["t_on"], p["t_off"], k);
  if (name == "triangle") return triangle(p["a"], p["B0"], p["x_offset"], p["y_offset"], k);
  if (name == "solenoid_flux") return solenoid_flux(p["flux"], p["xc"], p["yc"], k);
  if (name == "circular_blob") return circular_blob(p["B0"], p["xc"], p["yc"], p["radius"], k);
  if (name == "retarded_flux")
    return retarded_flux(FluxProfile{p["phi0"], p["k"], p["t0"]}, p["xc"], p["yc"], k);
  return spacetime_vortex(p["flux"], p["xc"], p["tc"], k);
}

} // namespace gaugephase
