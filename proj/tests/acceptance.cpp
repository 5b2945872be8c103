// Prints one PASS/FAIL line per acceptance criterion; exit status is nonzero
// when any criterion fails.

#include <gaugephase/catalog.hpp>
#include <gaugephase/dynamic1d.hpp>
#include <gaugephase/errors.hpp>
#include <gaugephase/full3.hpp>
#include <gaugephase/scenario.hpp>
#include <gaugephase/semiclassical.hpp>
#include <gaugephase/static2d.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace gaugephase;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

Outcome scenarios_verify() {
  Outcome o;
  auto t0 = Clock::now();
  int n = 0, rows = 0;
  for (const auto& e : std::filesystem::directory_iterator(GAUGEPHASE_SCENARIO_DIR)) {
    if (e.path().extension() != ".json" || e.path().stem() == "naive-capacitor") continue;
    Report r = run_scenario(e.path().string());
    ++n;
    for (const auto& rec : r.records) {
      if (rec.task.starts_with("verify")) ++rows;
      if (!rec.error.empty()) o.require(false, r.scenario + ": " + rec.task + ": " + rec.error);
      else if (rec.pass && !*rec.pass) o.require(false, r.scenario + ": " + rec.task);
    }
  }
  double dt = seconds_since(t0);
  o.require(n >= 10, "fewer than 10 scenarios");
  o.require(dt < 10, "runtime");
  o.detail << " scenarios=" << n << " verify_rows=" << rows << " seconds=" << dt;
  return o;
}

Outcome naive_capacitor() {
  Outcome o;
  for (double c : {1.0, 2.0}) {
    PhysicalConstants k;
    k.c = c;
    auto cfg = capacitor_1d(1, 2, 1.5, -Box::inf, Box::inf, k);
    for (auto [x, t] : {std::pair{1.5, 1.0}, {1.3, 2.0}, {1.8, 3.5}}) {
      auto r = verify_xt_system(cfg, {0, 0, x, t},
                                [](const FieldConfig& c_, const SpacetimeFrame& f,
                                   const QuadratureSpec& q) { return lambda_naive(c_, f, q); }, 1e-4, 1e-6, {});
      double bound = 0.9 * c * t * 1.5;
      o.require(r.residual_x >= bound, "residual below bound");
      o.detail << " " << r.residual_x / (c * t * 1.5);
    }
  }
  // the bundled scenario must report failure
  o.require(run_scenario(std::string(GAUGEPHASE_SCENARIO_DIR) + "/naive-capacitor.json")
                .exit_code() != 0,
            "scenario exit code");
  return o;
}

Outcome cancellation() {
  Outcome o;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 5);
  double worst_strip = 0, worst_tri = 0;
  auto v = vertical_strip(1, 2, 1);
  int n = 0;
  while (n < 50) {
    ObservationFrame f{u(rng), u(rng), u(rng), u(rng)};
    if (f.x > 0.9 && f.x < 2.1) continue;
    worst_strip = std::max(worst_strip, std::fabs(cancellation_check(v, f)));
    ++n;
  }
  auto tri = triangle(1, 1);
  for (auto [x, y] : {std::pair{0.9, 0.5}, {0.75, 0.6}, {1.2, 0.3}, {0.95, 0.8}}) {
    ObservationFrame f{0, 0, x, y};
    f.x_ref = 1.5;
    f.y_ref = 1;
    worst_tri = std::max(worst_tri, std::fabs(cancellation_check(tri, f)));
  }
  o.require(worst_strip <= 1e-8, "strip");
  o.require(worst_tri <= 1e-6, "triangle");
  o.detail << " strip=" << worst_strip << " triangle=" << worst_tri;
  return o;
}

Outcome triangle_closed_forms() {
  Outcome o;
  auto cfg = triangle(1, 1);
  double worst = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      double x = 0.52 + 0.46 * i / 9.0, y = 0.02 + 0.84 * j / 9.0;
      if (y <= oracle::sqrt3 * (1 - x) + 1e-3) continue;
      ObservationFrame f{0, 0, x, y};
      f.x_ref = 1.5;
      f.y_ref = 1;
      worst = std::max(worst, std::fabs(lambda1_static(cfg, f).gauge_fix_part -
                                        oracle::triangle_g(x, 1, 1)));
      worst = std::max(worst, std::fabs(lambda2_static(cfg, f).gauge_fix_part -
                                        oracle::triangle_h(y, 1, 1)));
    }
  o.require(worst <= 1e-6, "closed form");
  o.detail << " max_dev=" << worst;
  return o;
}

Outcome solenoid_ledger() {
  Outcome o;
  const double flux = 1.3;
  auto cfg = solenoid_flux(flux, 0.5, 0.5);
  ObservationFrame f{0, 0, 2, 1.5};
  auto m = ab_multiplicities(cfg, f);
  double d = lambda2_static(cfg, f).lambda - lambda1_static(cfg, f).lambda;
  o.require(std::fabs(m.f_y0 + flux) <= 1e-9, "f");
  o.require(std::fabs(m.h_hat_x0 - flux) <= 1e-9, "h_hat");
  o.require(std::fabs(d - flux) <= 1e-9, "difference");
  o.detail << " f=" << m.f_y0 << " h_hat=" << m.h_hat_x0 << " diff=" << d;
  return o;
}

Outcome electric_ledger() {
  Outcome o;
  const double flux = 0.8;
  auto cfg = spacetime_vortex(flux, 1, 1);
  auto m = electric_ab_multiplicities(cfg, {0, 0, 2, 2});
  o.require(std::fabs(m.tau_t0 - flux) <= 1e-9, "tau");
  o.require(std::fabs(m.chi_x0 + flux) <= 1e-9, "chi");
  o.detail << " tau=" << m.tau_t0 << " chi=" << m.chi_x0;
  return o;
}

Outcome van_kampen() {
  Outcome o;
  auto t0 = Clock::now();
  auto cfg = retarded_flux({1.0, 0.1, 0.0}, 0, 0);
  double worst = 0, worst_far = 0;
  for (double t : {1.0, 2.0, 3.0, 4.0}) {
    Frame3 f = van_kampen_frame(0, 0, 5, 0, t);
    worst = std::max(worst, std::fabs(van_kampen_delta(cfg, f) - 1.0));
    auto fc = faraday_check(cfg, f);
    worst_far = std::max(worst_far, fc.residual);
    o.require(fc.pass, "faraday");
  }
  double dt = seconds_since(t0);
  o.require(worst <= 1e-6, "plateau");
  o.require(dt < 5, "runtime");
  o.detail << " plateau_dev=" << worst << " faraday=" << worst_far << " seconds=" << dt;
  return o;
}

Outcome fringe() {
  Outcome o;
  auto m = magnetic_fringe(FringeSetupMagnetic{});
  o.require(std::fabs(m.phi_ab + 0.6283185307) <= 1e-9, "worked phi_ab");
  o.require(std::fabs(m.x_c - 0.05) <= 1e-9, "worked x_c");
  o.require(std::fabs(m.phi_semi - 0.6283185307) <= 1e-9, "worked phi_semi");
  auto e = electric_fringe(FringeSetupElectric{});
  o.require(std::fabs(std::fabs(e.phi_ab) - 0.6283185307) <= 1e-9, "worked electric");
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> s(-3, 3), p(0.01, 5), lg(-6, 2);
  auto wide = [&] { return std::pow(10.0, lg(rng)); };
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    FringeSetupMagnetic a;
    a.q_over_e = s(rng);
    a.B = s(rng) * wide();
    a.W = wide();
    a.d = p(rng);
    a.L = 10 * p(rng);
    a.lambda_dB = wide();
    auto ra = magnetic_fringe(a);
    worst = std::max(worst, std::fabs(ra.sum) / std::max(std::fabs(ra.phi_ab), 1.0));
    FringeSetupElectric b;
    b.q_over_e = s(rng);
    b.E = s(rng) * wide();
    b.T = wide();
    b.v = p(rng);
    b.d = p(rng);
    b.L = 10 * p(rng);
    b.lambda_dB = wide();
    auto rb = electric_fringe(b);
    worst = std::max(worst, std::fabs(rb.sum) / std::max(std::fabs(rb.phi_ab), 1.0));
  }
  o.require(worst <= 1e-12, "random draws");
  o.detail << " worst_rel_sum=" << worst;
  return o;
}

Outcome polar() {
  Outcome o;
  auto cfg = circular_blob(1, 2.9, 0.74, 0.5);
  double worst = 0;
  for (auto [rho, phi] : {std::pair{5.0, 0.5}, {4.0, 0.3}, {4.5, -0.4}}) {
    PolarFrame pf;
    pf.p0 = {1, 0};
    pf.p = {rho, phi};
    ObservationFrame cf{1, 0, rho * std::cos(phi), rho * std::sin(phi)};
    double cart = lambda1_static(cfg, cf).lambda;
    for (Branch b : {Branch::clockwise, Branch::counterclockwise})
      worst = std::max(worst, std::fabs(lambda_polar(cfg, pf, b).lambda - cart));
  }
  o.require(worst <= 1e-6, "polar");
  o.detail << " max_dev=" << worst;
  return o;
}

Outcome full_static() {
  Outcome o;
  auto cfg = triangle(1, 1);
  double worst = 0;
  for (auto [x, y] : {std::pair{0.9, 0.5}, {1.2, 0.3}, {0.75, 0.6}}) {
    Frame3 f{0, 0, 0, x, y, 1};
    f.x_ref = 1.5;
    f.y_ref = 1;
    ObservationFrame sf{0, 0, x, y};
    sf.x_ref = 1.5;
    sf.y_ref = 1;
    double l1 = lambda1_static(cfg, sf).lambda, l2 = lambda2_static(cfg, sf).lambda;
    worst = std::max(worst, std::fabs(lambda_full(cfg, f, Variant::full1).lambda - l2));
    worst = std::max(worst, std::fabs(lambda_full(cfg, f, Variant::full2).lambda - l2));
    worst = std::max(worst, std::fabs(lambda_full(cfg, f, Variant::full4).lambda - l1));
    worst = std::max(worst, std::fabs(lambda_full(cfg, f, Variant::fin).lambda - l1));
  }
  o.require(worst <= 1e-8, "reduction");
  o.detail << " max_dev=" << worst;
  return o;
}

} // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"scenario residuals and runtime", scenarios_verify},
      {"naive formula fails in the capacitor", naive_capacitor},
      {"lambda1/lambda2 cancellation", cancellation},
      {"triangle closed forms", triangle_closed_forms},
      {"solenoid multiplicities", solenoid_ledger},
      {"electric multiplicities", electric_ledger},
      {"van Kampen plateau and Faraday", van_kampen},
      {"fringe phase identity", fringe},
      {"polar against Cartesian", polar},
      {"full system static reduction", full_static},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " "
              << criteria[i].first << ":" << o.detail.str() << "\n";
  }
  return failed == 0 ? 0 : 1;
}
