#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gaugephase {

enum class Rule { gauss_legendre, adaptive_simpson };

std::string to_string(Rule r);
Rule rule_from_string(const std::string& s);

/// Controls every 1-D and iterated integral.
/// Defaults: composite Gauss-Legendre, order 8, 16 panels over the full interval.
struct QuadratureSpec {
  Rule rule = Rule::gauss_legendre;
  int order = 8;      ///< Gauss-Legendre points per panel (1..32)
  int panels = 16;    ///< panels across [a,b], shared out over break-delimited pieces
  int max_depth = 40; ///< adaptive Simpson recursion limit
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  bool graded = true; ///< cubic endpoint grading inside each Gauss-Legendre piece

  void validate() const;
  bool operator==(const QuadratureSpec&) const = default;
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;
/// Breakpoints of the inner integrand as a function of the outer variable.
using InnerBreaks = std::function<std::vector<double>(double outer)>;

/// Signed integral of f from a to b. Breakpoints outside (a,b) are ignored.
/// integrate_1d(f,a,b) == -integrate_1d(f,b,a) bit for bit.
double integrate_1d(const Fn1& f, double a, double b, const QuadratureSpec& spec = {},
                    std::span<const double> breaks = {});

/// [a,b] x [c,d]; first variable is the inner one.
struct Rect {
  double a, b, c, d;
};

/// Iterated integral: outer over [c,d] in the second variable, inner over [a,b] in the first.
double integrate_rect(const Fn2& f, const Rect& r, const QuadratureSpec& spec = {},
                      const InnerBreaks& inner_breaks = {},
                      std::span<const double> outer_breaks = {});

/// Gauss-Legendre nodes and weights on [-1,1].
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre_rule(int order);

} // namespace gaugephase
