#include <catch2/catch_amalgamated.hpp>

#include <gaugephase/errors.hpp>
#include <gaugephase/quadrature.hpp>

#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace gaugephase;
using Catch::Approx;

TEST_CASE("Gauss-Legendre weights sum to the interval length", "[quadrature]") {
  for (int n : {1, 2, 5, 8, 16, 32}) {
    const GaussRule& g = gauss_legendre_rule(n);
    REQUIRE(g.x.size() == static_cast<std::size_t>(n));
    double w = 0;
    for (double v : g.w) w += v;
    CHECK(w == Approx(2.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(gauss_legendre_rule(0), PreconditionError);
  CHECK_THROWS_AS(gauss_legendre_rule(33), PreconditionError);
}

TEST_CASE("single Gauss-Legendre panel is exact through degree 2n-1", "[quadrature][property]") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (int n = 1; n <= 12; ++n) {
    QuadratureSpec spec;
    spec.order = n;
    spec.panels = 1;
    spec.graded = false;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> c(2 * n);
      for (double& v : c) v = coef(rng);
      auto p = [&](double x) {
        double s = 0;
        for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
        return s;
      };
      double a = -0.3, b = 1.7, exact = 0;
      for (std::size_t k = 0; k < c.size(); ++k)
        exact += c[k] * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
      CHECK(integrate_1d(p, a, b, spec) == Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("reversed limits negate the integral exactly", "[quadrature][property]") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (Rule rule : {Rule::gauss_legendre, Rule::adaptive_simpson}) {
    QuadratureSpec spec;
    spec.rule = rule;
    for (int i = 0; i < 50; ++i) {
      double a = u(rng), b = u(rng);
      std::vector<double> br{u(rng)};
      CHECK(integrate_1d(f, a, b, spec, br) == -integrate_1d(f, b, a, spec, br));
    }
  }
  CHECK(integrate_1d(f, 1.0, 1.0) == 0.0);
}

TEST_CASE("breakpoints make a step function exact", "[quadrature]") {
  auto step = [](double x) { return x < 0.3 ? 1.0 : -2.0; };
  QuadratureSpec spec;
  spec.panels = 1;
  std::vector<double> br{0.3};
  CHECK(integrate_1d(step, 0, 1, spec, br) == Approx(0.3 - 1.4).margin(1e-14));
  // without the break the jump costs accuracy
  CHECK(std::fabs(integrate_1d(step, 0, 1, spec) - (0.3 - 1.4)) > 1e-6);
  spec.rule = Rule::adaptive_simpson;
  CHECK(integrate_1d(step, 0, 1, spec, br) == Approx(-1.1).margin(1e-12));
}

TEST_CASE("graded pieces handle square-root endpoints", "[quadrature]") {
  auto f = [](double x) { return std::sqrt(std::max(0.0, 1 - x * x)); };
  QuadratureSpec spec;
  double v = integrate_1d(f, -1, 1, spec);
  CHECK(v == Approx(std::numbers::pi / 2).epsilon(1e-9));
  spec.graded = false;
  double plain = integrate_1d(f, -1, 1, spec);
  CHECK(std::fabs(plain - std::numbers::pi / 2) > std::fabs(v - std::numbers::pi / 2));
}

TEST_CASE("adaptive Simpson meets its tolerance", "[quadrature]") {
  QuadratureSpec spec;
  spec.rule = Rule::adaptive_simpson;
  spec.abs_tol = 1e-11;
  auto f = [](double x) { return 1 / (1 + x * x); };
  CHECK(integrate_1d(f, 0, 1, spec) == Approx(std::numbers::pi / 4).margin(1e-10));
}

TEST_CASE("adaptive Simpson reports exhausted depth", "[quadrature][errors]") {
  QuadratureSpec spec;
  spec.rule = Rule::adaptive_simpson;
  spec.max_depth = 2;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 0;
  auto f = [](double x) { return std::sin(40 * x); };
  CHECK_THROWS_AS(integrate_1d(f, 0, 3, spec), ToleranceNotMet);
}

TEST_CASE("quadrature settings validation", "[quadrature][errors]") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.order = 0;
  CHECK_THROWS_AS(s.validate(), PreconditionError);
  s = {};
  s.panels = 0;
  CHECK_THROWS_AS(s.validate(), PreconditionError);
  s = {};
  s.abs_tol = 0;
  CHECK_THROWS_AS(s.validate(), PreconditionError);
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 0, INFINITY), PreconditionError);
  CHECK(rule_from_string(to_string(Rule::adaptive_simpson)) == Rule::adaptive_simpson);
  CHECK_THROWS_AS(rule_from_string("trapezoid"), PreconditionError);
}

TEST_CASE("iterated integral of the triangle indicator", "[quadrature]") {
  auto ind = [](double x, double y) {
    return y >= 0 && y <= oracle::sqrt3 * std::min(x, 1 - x) ? 1.0 : 0.0;
  };
  InnerBreaks inner = [](double y) {
    return std::vector<double>{y / oracle::sqrt3, 1 - y / oracle::sqrt3};
  };
  std::vector<double> outer{0, oracle::sqrt3 / 2};
  double v = integrate_rect(ind, Rect{-0.5, 1.5, -0.2, 1.2}, {}, inner, outer);
  CHECK(v == Approx(oracle::sqrt3 / 4).epsilon(1e-12));
  // orientation: swapping one pair of limits flips the sign
  CHECK(integrate_rect(ind, Rect{1.5, -0.5, -0.2, 1.2}, {}, inner, outer) == Approx(-v));
}
