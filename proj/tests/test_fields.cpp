#include <catch2/catch_amalgamated.hpp>

#include <gaugephase/catalog.hpp>
#include <gaugephase/errors.hpp>
#include <gaugephase/fields.hpp>
#include <gaugephase/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace gaugephase;
using Catch::Approx;

namespace {

struct Case {
  FieldConfig cfg;
  Region region;
};

std::vector<Case> catalog_cases() {
  return {
      {zero_config(), {-1, 1, -1, 1, 0, 0}},
      {vertical_strip(1, 2, 1.5), {0, 3, -1, 1, 0, 0}},
      {horizontal_strip(0.5, 1, -2), {-1, 1, 0, 2, 0, 0}},
      {time_strip(0, 1, 0.7), {-1, 1, 0, 0, -0.5, 2}},
      {capacitor_1d(1, 2, 1), {0, 3, 0, 0, 0, 2}},
      {capacitor_1d(1, 2, 1, 0.5, 1.5), {0, 3, 0, 0, 0, 2}},
      {triangle(1, 1), {-0.2, 1.3, -0.2, 1.2, 0, 0}},
      {triangle(2, -0.5, 1, -1), {0.8, 3.2, -1.2, 1, 0, 0}},
      {solenoid_flux(1, 0.5, 0.5), {-1.5, 2.5, -1.5, 2.5, 0, 0}},
      {circular_blob(1, 0, 0, 0.5), {-1, 1, -1, 1, 0, 0}},
      {retarded_flux({1, 0.1, 0}, 0, 0), {-4, 4, -4, 4, 0.5, 3}},
      {spacetime_vortex(1, 1, 1), {0, 3, 0, 0, 0, 3}},
  };
}

} // namespace

TEST_CASE("every catalog config satisfies B = curl A and E = -grad phi - dA/dt/c",
          "[fields][property]") {
  for (const auto& c : catalog_cases()) {
    INFO(c.cfg.name);
    auto rep = check_consistency(c.cfg, c.region, 9, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.sampled > 0);
  }
}

TEST_CASE("consistency catches a mismatched field", "[fields]") {
  FieldConfig f = vertical_strip(1, 2, 1);
  f.B_z = [](double, double, double) { return 0.0; };
  auto rep = check_consistency(f, {0, 3, -1, 1, 0, 0}, 8, 1e-6);
  CHECK_FALSE(rep.pass);
  CHECK(rep.curl_residual == Approx(1.0).margin(1e-6));
  CHECK(rep.worst_curl.x > 1);
  CHECK(rep.worst_curl.x < 2);
}

TEST_CASE("consistency preconditions", "[fields][errors]") {
  auto z = zero_config();
  CHECK_THROWS_AS(check_consistency(z, {0, 1, 0, 1, 0, 0}, 3, 1e-6), PreconditionError);
  CHECK_THROWS_AS(check_consistency(z, {1, 1, 0, 1, 0, 0}, 5, 1e-6), PreconditionError);
  // a single y line is allowed for (x,t) configs
  CHECK(check_consistency(z, {0, 1, 0, 0, 0, 1}, 5, 1e-6).sampled == 25);
}

TEST_CASE("constants validation", "[fields][errors]") {
  PhysicalConstants k;
  CHECK_NOTHROW(k.validate());
  k.c = 0;
  CHECK_THROWS_AS(k.validate(), PreconditionError);
  CHECK_THROWS_AS(make_builtin("zero", {}, k), PreconditionError);
  PhysicalConstants k2;
  k2.q_over_hbar_c = 2;
  CHECK(k2.phase(0.25) == 0.5);
}

TEST_CASE("evaluate wraps failures", "[fields][errors]") {
  Evaluator nan = [](double, double, double) { return std::nan(""); };
  CHECK_THROWS_AS(evaluate(nan, "A_x", 0, 0, 0), EvaluationError);
  auto sol = solenoid_flux(1, 0, 0);
  CHECK_THROWS_AS(evaluate(sol.A_x, "A_x", 0, 0, 0), Error);
}

TEST_CASE("catalog construction by name", "[fields][catalog]") {
  for (const auto& e : builtin_catalog()) {
    INFO(e.name);
    ParamMap p;
    for (const auto& d : e.params)
      if (std::isfinite(d.default_value)) p[d.name] = d.default_value;
    FieldConfig f = make_builtin(e.name, p);
    CHECK(f.name == e.name);
    CHECK(f.A_x);
    CHECK(f.E_y);
  }
  CHECK_THROWS_AS(make_builtin("nope", {}), PreconditionError);
  CHECK_THROWS_AS(make_builtin("vertical_strip", {{"bogus", 1}}), PreconditionError);
  CHECK_THROWS_AS(vertical_strip(2, 1, 1), PreconditionError);
  CHECK_THROWS_AS(triangle(0, 1), PreconditionError);
}

TEST_CASE("vertical strip values", "[fields][catalog]") {
  auto f = vertical_strip(1, 2, 3);
  CHECK(f.B_z(1.5, 7, 0) == 3);
  CHECK(f.B_z(2.5, 7, 0) == 0);
  CHECK(f.A_y(0.5, 0, 0) == 0);
  CHECK(f.A_y(1.5, 0, 0) == Approx(1.5));
  CHECK(f.A_y(4, 0, 0) == Approx(3));
  CHECK(f.multiply_connected() == false);
}

TEST_CASE("retarded flux: no fields before the front arrives", "[fields][retarded]") {
  FluxProfile prof{1.0, 0.1, 0.0};
  double c = 1;
  auto before = retarded_flux_fields(prof, 0, 0, 3, 4, 4.9, c);
  CHECK(before.B_z == 0);
  CHECK(before.E_x == 0);
  CHECK(before.E_y == 0);
  // pure flux-line potential, circulation-free radial part
  double r = 5, a = 1 / (2 * std::numbers::pi * r);
  CHECK(std::hypot(before.A_x, before.A_y) == Approx(a));
  CHECK(before.A_x * 3 + before.A_y * 4 == Approx(0).margin(1e-15));

  auto after = retarded_flux_fields(prof, 0, 0, 3, 4, 6, c);
  double e = -0.1 / (2 * std::numbers::pi * r);
  CHECK(after.B_z == Approx(e));
  CHECK(std::hypot(after.E_x, after.E_y) == Approx(std::fabs(e)));
  CHECK_THROWS_AS(retarded_flux_fields(prof, 0, 0, 0, 0, 1, c), SingularPointError);
  CHECK(prof.value(-1) == 1);
  CHECK(prof.value(2) == Approx(1.2));
}

TEST_CASE("collar distance to published edges", "[fields][geometry]") {
  auto f = vertical_strip(1, 2, 1);
  CHECK(collar_distance(f, {1.25, 100, 0}) == Approx(0.25));
  CHECK(collar_distance(zero_config(), {0, 0, 0}) == Box::inf);
  auto s = solenoid_flux(1, 1, 1);
  CHECK(collar_distance(s, {4, 5, 9}) == Approx(5));
  auto cap = capacitor_1d(1, 2, 1, 0, 3);
  CHECK(collar_distance(cap, {5, 0, 2.9}) == Approx(0.1));
}

TEST_CASE("breakpoints along axes and rectangles", "[geometry]") {
  auto tri = triangle(1, 1);
  auto b = axis_breaks(tri, Axis::x, {0, 0.5, 0}, -1, 2);
  // the two slanted sides plus the kink lines of the potential
  REQUIRE(b.size() >= 2);
  CHECK(std::count_if(b.begin(), b.end(), [](double v) {
          return std::fabs(v - 0.5 / std::sqrt(3.0)) < 1e-12 ||
                 std::fabs(v - (1 - 0.5 / std::sqrt(3.0))) < 1e-12;
        }) == 2);
  CHECK(std::is_sorted(b.begin(), b.end()));
  for (double v : b) {
    CHECK(v > -1);
    CHECK(v < 2);
  }
  auto r = rect_breaks(tri, Axis::x, 0, 2, Axis::y, {0, 0, 0}, -1, 2);
  CHECK(std::find_if(r.begin(), r.end(), [](double v) {
          return std::fabs(v - std::sqrt(3.0) / 2) < 1e-12;
        }) != r.end());
  auto strip = time_strip(1, 2, 1);
  auto tb = axis_breaks(strip, Axis::t, {0, 0, 0}, 0, 3);
  CHECK(tb == std::vector<double>{1, 2});
  CHECK(axis_breaks(strip, Axis::t, {0, 0, 0}, 3, 0) == tb);
}

TEST_CASE("polar breakpoints of a disk", "[geometry]") {
  auto blob = circular_blob(1, 3, 0, 1);
  auto rb = ray_breaks(blob, 0, 0, 0, 0, 0, 10);
  CHECK(rb == std::vector<double>{2, 4});
  auto ab = arc_breaks(blob, 0, 0, 0, 3, -1, 1);
  REQUIRE(ab.size() == 2);
  CHECK(ab[0] == Approx(-ab[1]));
  auto sb = sector_breaks(blob, 0, 0, 0, 1, 5, -1, 1);
  // tangent directions asin(1/3)
  CHECK(std::find_if(sb.begin(), sb.end(), [](double v) {
          return std::fabs(v - std::asin(1.0 / 3)) < 1e-12;
        }) != sb.end());
}

TEST_CASE("tabulated grid reproduces a bilinear config", "[fields][grid]") {
  auto path = std::filesystem::temp_directory_path() / "gaugephase_grid_test.txt";
  {
    std::ofstream out(path);
    out << "x y t A_x A_y phi B_z E_x E_y\n";
    for (double t : {0.0, 1.0})
      for (double y : {0.0, 1.0, 2.0})
        for (double x : {0.0, 1.0, 2.0, 3.0})
          out << x << ' ' << y << ' ' << t << " 0 " << std::min(x, 1.0) << " 0 "
              << (x < 1 ? 1 : 0) << " 0 0\n";
  }
  auto g = load_grid(path.string());
  CHECK(g.kind == ConfigKind::tabulated_grid);
  CHECK(g.A_y(0.5, 0.3, 0.2) == Approx(0.5));
  CHECK(g.A_y(2.5, 1.5, 0.7) == Approx(1.0));
  CHECK(g.A_y(4, 1, 0.5) == 0);
  CHECK(g.B_z(0.25, 1, 0.5) == Approx(0.75));
  std::filesystem::remove(path);
}

TEST_CASE("grid file diagnostics carry line numbers", "[fields][grid][errors]") {
  auto path = std::filesystem::temp_directory_path() / "gaugephase_grid_bad.txt";
  {
    std::ofstream out(path);
    out << "x y t A_x A_y phi B_z E_x E_y\n0 0 0 1 2 3 4 5 6\n0 1 0 1 2 3\n";
  }
  try {
    load_grid(path.string());
    FAIL("expected a parse error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  {
    std::ofstream out(path);
    out << "x y t A_x A_y phi B_z E_x E_y\n0 0 0 0 0 0 0 0 0\n1 1 0 0 0 0 0 0 0\n";
  }
  CHECK_THROWS_WITH(load_grid(path.string()), Catch::Matchers::ContainsSubstring("tensor"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_grid("/nonexistent/grid.txt"), PreconditionError);
}
