#include <gaugephase/quadrature.hpp>

#include <gaugephase/errors.hpp>

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace gaugephase {

std::string to_string(Rule r) {
  return r == Rule::gauss_legendre ? "gauss-legendre" : "adaptive-simpson";
}

Rule rule_from_string(const std::string& s) {
  if (s == "gauss-legendre") return Rule::gauss_legendre;
  if (s == "adaptive-simpson") return Rule::adaptive_simpson;
  throw PreconditionError("unknown quadrature rule '" + s + "'");
}

void QuadratureSpec::validate() const {
  if (order < 1 || order > 32) throw PreconditionError("quadrature order must be in 1..32");
  if (panels < 1) throw PreconditionError("quadrature panels must be >= 1");
  if (max_depth < 1) throw PreconditionError("quadrature max_depth must be >= 1");
  if (!(abs_tol > 0)) throw PreconditionError("quadrature abs_tol must be > 0");
  if (!(rel_tol >= 0)) throw PreconditionError("quadrature rel_tol must be >= 0");
}

const GaussRule& gauss_legendre_rule(int order) {
  static std::array<GaussRule, 33> rules;
  static std::array<std::once_flag, 33> flags;
  if (order < 1 || order > 32) throw PreconditionError("quadrature order must be in 1..32");
  std::call_once(flags[order], [order] {
    GaussRule& g = rules[order];
    // legendre_p_zeros returns the non-negative half
    auto half = boost::math::legendre_p_zeros<double>(order);
    for (double z : half) {
      double dp = boost::math::legendre_p_prime(order, z);
      double w = 2.0 / ((1.0 - z * z) * dp * dp);
      g.x.push_back(z);
      g.w.push_back(w);
      if (z != 0.0) {
        g.x.push_back(-z);
        g.w.push_back(w);
      }
    }
  });
  return rules[order];
}

namespace {

// x = lo + len * (3s^2 - 2s^3) flattens square-root and log behaviour at the
// piece ends, which is where breakpoints put the kinks.
double gl_graded(const Fn1& f, double lo, double hi, int n, const GaussRule& g) {
  double len = hi - lo, h = 1.0 / n;
  double sum = 0.0;
  for (int p = 0; p < n; ++p) {
    double mid = (p + 0.5) * h, half = 0.5 * h;
    double acc = 0.0;
    for (std::size_t k = 0; k < g.x.size(); ++k) {
      double s = mid + half * g.x[k];
      acc += g.w[k] * f(lo + len * s * s * (3.0 - 2.0 * s)) * 6.0 * s * (1.0 - s);
    }
    sum += acc * half;
  }
  return sum * len;
}

double gl_piece(const Fn1& f, double lo, double hi, int n, const GaussRule& g) {
  double h = (hi - lo) / n;
  double sum = 0.0;
  for (int p = 0; p < n; ++p) {
    double mid = lo + (p + 0.5) * h, half = 0.5 * h;
    double s = 0.0;
    for (std::size_t k = 0; k < g.x.size(); ++k) s += g.w[k] * f(mid + half * g.x[k]);
    sum += s * half;
  }
  return sum;
}

struct Simpson {
  const Fn1& f;
  int max_depth;
  double floor_width; // below this a jump contributes less than rounding
  bool exhausted = false;

  double run(double a, double b, double fa, double fm, double fb, double whole, double tol,
             int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || b - a <= floor_width) return left + right + delta / 15.0;
    if (depth >= max_depth) {
      exhausted = true;
      return left + right + delta / 15.0;
    }
    return run(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           run(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

double simpson_piece(const Fn1& f, double lo, double hi, double tol, int max_depth,
                     bool& exhausted) {
  Simpson s{f, max_depth, 1e-11 * (hi - lo)};
  double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
  double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  double r = s.run(lo, hi, fa, fm, fb, whole, tol, 0);
  exhausted = exhausted || s.exhausted;
  return r;
}

std::vector<double> pieces(double lo, double hi, std::span<const double> breaks) {
  std::vector<double> pts{lo};
  for (double b : breaks)
    if (b > lo && b < hi && std::isfinite(b)) pts.push_back(b);
  std::sort(pts.begin() + 1, pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(hi);
  return pts;
}

double forward(const Fn1& f, double lo, double hi, const QuadratureSpec& spec,
               std::span<const double> breaks) {
  auto pts = pieces(lo, hi, breaks);
  double total = hi - lo;
  double sum = 0.0;
  if (spec.rule == Rule::gauss_legendre) {
    const GaussRule& g = gauss_legendre_rule(spec.order);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      double len = pts[i + 1] - pts[i];
      if (len <= 0) continue;
      int n = std::max(1, static_cast<int>(std::ceil(spec.panels * len / total - 1e-9)));
      sum += spec.graded ? gl_graded(f, pts[i], pts[i + 1], n, g)
                         : gl_piece(f, pts[i], pts[i + 1], n, g);
    }
    return sum;
  }
  const GaussRule& coarse = gauss_legendre_rule(8);
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) scale += gl_piece(f, pts[i], pts[i + 1], 1, coarse);
  double target = std::max(spec.abs_tol, spec.rel_tol * std::fabs(scale));
  bool exhausted = false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double len = pts[i + 1] - pts[i];
    if (len <= 0) continue;
    sum += simpson_piece(f, pts[i], pts[i + 1], target * len / total, spec.max_depth, exhausted);
  }
  if (exhausted) throw ToleranceNotMet("adaptive Simpson depth exhausted", sum);
  return sum;
}

} // namespace

double integrate_1d(const Fn1& f, double a, double b, const QuadratureSpec& spec,
                    std::span<const double> breaks) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw PreconditionError("integration limits must be finite");
  if (a == b) return 0.0;
  if (a < b) return forward(f, a, b, spec, breaks);
  return -forward(f, b, a, spec, breaks);
}

double integrate_rect(const Fn2& f, const Rect& r, const QuadratureSpec& spec,
                      const InnerBreaks& inner_breaks, std::span<const double> outer_breaks) {
  Fn1 outer = [&](double v) {
    std::vector<double> ib;
    if (inner_breaks) ib = inner_breaks(v);
    return integrate_1d([&](double u) { return f(u, v); }, r.a, r.b, spec, ib);
  };
  return integrate_1d(outer, r.c, r.d, spec, outer_breaks);
}

} // namespace gaugephase
