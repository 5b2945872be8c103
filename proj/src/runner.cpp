#include <gaugephase/scenario.hpp>

#include <gaugephase/dynamic1d.hpp>
#include <gaugephase/errors.hpp>
#include <gaugephase/full3.hpp>
#include <gaugephase/static2d.hpp>

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>

namespace gaugephase {

using json = nlohmann::ordered_json;

bool Report::ok() const {
  for (const auto& r : records)
    if (!r.error.empty() || (r.pass && !*r.pass)) return false;
  return true;
}

namespace {

ObservationFrame plane_frame(const FrameSpec& f) {
  ObservationFrame o;
  o.x0 = f.x0;
  o.y0 = f.y0;
  o.x = f.x;
  o.y = f.y;
  o.x_ref = f.x_ref;
  o.y_ref = f.y_ref;
  o.lambda0 = f.lambda0;
  o.t = f.t;
  o.multiplicities = f.multiplicities;
  return o;
}

SpacetimeFrame spacetime_frame(const FrameSpec& f) {
  SpacetimeFrame o;
  o.x0 = f.x0;
  o.t0 = f.t0;
  o.x = f.x;
  o.t = f.t;
  o.x_ref = f.x_ref;
  o.t_ref = f.t_ref;
  o.lambda0 = f.lambda0;
  o.y = f.y;
  o.multiplicities = f.multiplicities;
  return o;
}

Frame3 full_frame(const FrameSpec& f) {
  Frame3 o;
  o.x0 = f.x0;
  o.y0 = f.y0;
  o.t0 = f.t0;
  o.x = f.x;
  o.y = f.y;
  o.t = f.t;
  o.x_ref = f.x_ref;
  o.y_ref = f.y_ref;
  o.lambda0 = f.lambda0;
  o.multiplicities = f.multiplicities;
  return o;
}

PolarFrame polar_frame(const FrameSpec& f) {
  PolarFrame o;
  o.ox = f.ox;
  o.oy = f.oy;
  o.p0 = {f.rho0, f.phi0};
  o.p = {f.rho, f.phi};
  o.rho_ref = f.rho_ref;
  o.phi_ref = f.phi_ref;
  o.lambda0 = f.lambda0;
  o.t = f.t;
  o.multiplicities = f.multiplicities;
  return o;
}

void set_coords(Record& r, const FrameSpec& f) {
  switch (f.kind) {
  case FrameKind::plane:
    r.x0 = f.x0, r.y0 = f.y0, r.x = f.x, r.y = f.y, r.t = f.t;
    break;
  case FrameKind::spacetime:
    r.x0 = f.x0, r.t0 = f.t0, r.x = f.x, r.t = f.t, r.y = f.y;
    break;
  case FrameKind::full:
    r.x0 = f.x0, r.y0 = f.y0, r.t0 = f.t0, r.x = f.x, r.y = f.y, r.t = f.t;
    break;
  case FrameKind::polar:
    r.x0 = f.ox + f.rho0 * std::cos(f.phi0), r.y0 = f.oy + f.rho0 * std::sin(f.phi0);
    r.x = f.ox + f.rho * std::cos(f.phi), r.y = f.oy + f.rho * std::sin(f.phi), r.t = f.t;
    break;
  }
}

void set_solution(Record& r, const GaugeSolution& s) {
  r.lambda = s.lambda;
  r.dirac_part = s.dirac_part;
  r.nonlocal_part = s.nonlocal_part;
  r.gauge_fix_part = s.gauge_fix_part;
  r.multiplicity_part = s.multiplicity_part;
  r.notes.emplace_back("branch", to_string(s.branch));
  if (s.e_branch) r.notes.emplace_back("e_branch", to_string(*s.e_branch));
  if (s.flux_time) r.values.emplace_back("flux_time", *s.flux_time);
  for (const auto& c : s.conditions) r.values.emplace_back("check " + c.name, c.residual);
  for (const auto& w : s.warnings) r.notes.emplace_back("warning", w);
}

void set_residuals(Record& r, const ResidualReport& rep) {
  r.lambda = rep.lambda;
  r.residual_x = rep.residual_x;
  r.residual_y = rep.residual_y;
  r.residual_t = rep.residual_t;
  r.pass = rep.pass;
}

// Runs body into a fresh record, timing it and capturing errors.
Record timed(const std::string& task, const FrameSpec* f, const std::function<void(Record&)>& body) {
  Record r;
  r.task = task;
  if (f) set_coords(r, *f);
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass.reset();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double halton(int index, int base) {
  double f = 1, r = 0;
  for (int i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

using Verifier = std::function<ResidualReport(const FrameSpec&)>;

Verifier make_verifier(const FieldConfig& cfg, const QuadratureSpec& q, const std::string& solver,
                       double step, double tol) {
  if (solver == "lambda1" || solver == "lambda2") {
    StaticSolver s = solver == "lambda1" ? StaticSolver(lambda1_static) : StaticSolver(lambda2_static);
    return [&cfg, q, s, step, tol](const FrameSpec& f) {
      return verify_gradient(cfg, plane_frame(f), s, step, tol, q);
    };
  }
  if (solver == "lambda3" || solver == "lambda4" || solver == "naive" || solver == "naive-initial") {
    DynamicSolver s;
    if (solver == "lambda3") s = lambda3_dynamic;
    else if (solver == "lambda4") s = lambda4_dynamic;
    else {
      NaiveVariant v = solver == "naive" ? NaiveVariant::running : NaiveVariant::initial_point;
      s = [v](const FieldConfig& c, const SpacetimeFrame& f, const QuadratureSpec& qs) {
        return lambda_naive(c, f, qs, v);
      };
    }
    return [&cfg, q, s, step, tol](const FrameSpec& f) {
      return verify_xt_system(cfg, spacetime_frame(f), s, step, tol, q);
    };
  }
  Variant v = variant_from_string(solver);
  return [&cfg, q, v, step, tol](const FrameSpec& f) {
    return verify_full_system(cfg, full_frame(f), v, step, tol, {}, q);
  };
}

class Runner {
public:
  Runner(const Scenario& s) : s_(s), cfg_(build_config(s)), q_(s.quadrature) {}

  Report run() {
    Report rep;
    rep.scenario = s_.name;
    for (const auto& t : s_.tasks) task(t, rep.records);
    return rep;
  }

private:
  const Scenario& s_;
  FieldConfig cfg_;
  QuadratureSpec q_;

  void per_frame(const std::string& name, std::vector<Record>& out,
                 const std::function<void(const FrameSpec&, Record&)>& body) {
    for (const auto& f : s_.frames)
      out.push_back(timed(name, &f, [&](Record& r) { body(f, r); }));
  }

  void task(const TaskSpec& t, std::vector<Record>& out) {
    const std::string& k = t.kind;
    if (k == "consistency") return consistency(t, out);
    if (k == "lambda1" || k == "lambda2") {
      return per_frame(k, out, [&](const FrameSpec& f, Record& r) {
        set_solution(r, k == "lambda1" ? lambda1_static(cfg_, plane_frame(f), q_)
                                       : lambda2_static(cfg_, plane_frame(f), q_));
      });
    }
    if (k == "lambda3" || k == "lambda4") {
      return per_frame(k, out, [&](const FrameSpec& f, Record& r) {
        set_solution(r, k == "lambda3" ? lambda3_dynamic(cfg_, spacetime_frame(f), q_)
                                       : lambda4_dynamic(cfg_, spacetime_frame(f), q_));
      });
    }
    if (k == "naive" || k == "naive-initial") {
      NaiveVariant v = k == "naive" ? NaiveVariant::running : NaiveVariant::initial_point;
      return per_frame(k, out, [&](const FrameSpec& f, Record& r) {
        set_solution(r, lambda_naive(cfg_, spacetime_frame(f), q_, v));
      });
    }
    if (k == "polar") return polar(t, out);
    if (k == "full") {
      Variant v = variant_from_string(t.variant);
      return per_frame("full:" + t.variant, out, [&](const FrameSpec& f, Record& r) {
        set_solution(r, lambda_full(cfg_, full_frame(f), v, {}, q_));
      });
    }
    if (k == "cancel") return cancel(t, out);
    if (k == "multiplicities") return multiplicities(out);
    if (k == "faraday") {
      return per_frame(k, out, [&](const FrameSpec& f, Record& r) {
        FaradayCheck fc = faraday_check(cfg_, full_frame(f), q_);
        r.values = {{"e_circulation", fc.e_circulation},
                    {"a_circulation_t", fc.a_circulation_t},
                    {"a_circulation_t0", fc.a_circulation_t0},
                    {"residual", fc.residual}};
        r.pass = fc.pass;
      });
    }
    if (k == "vankampen-sweep") return sweep(t, out);
    if (k == "fringe-magnetic" || k == "fringe-electric") return fringe(t, out);
    if (k == "verify") return verify(t, out);
    throw ScenarioError("unknown task '" + k + "'", "");
  }

  void consistency(const TaskSpec& t, std::vector<Record>& out) {
    out.push_back(timed("consistency", nullptr, [&](Record& r) {
      ConsistencyReport c = check_consistency(cfg_, *s_.sample_box, t.samples, t.tol);
      r.residual_x = c.curl_residual;
      r.residual_t = c.faraday_residual;
      r.values = {{"curl_residual", c.curl_residual},
                  {"faraday_residual", c.faraday_residual},
                  {"sampled", double(c.sampled)},
                  {"skipped", double(c.skipped)}};
      r.pass = c.pass;
    }));
  }

  void polar(const TaskSpec& t, std::vector<Record>& out) {
    std::vector<Branch> branches;
    if (t.branch != "counterclockwise") branches.push_back(Branch::clockwise);
    if (t.branch != "clockwise") branches.push_back(Branch::counterclockwise);
    for (Branch b : branches) {
      per_frame(std::string("polar:") + to_string(b), out, [&](const FrameSpec& f, Record& r) {
        set_solution(r, lambda_polar(cfg_, polar_frame(f), b, q_));
        // Cartesian counterpart with default references
        ObservationFrame o;
        o.x0 = r.x0, o.y0 = r.y0, o.x = r.x, o.y = r.y, o.t = f.t;
        o.lambda0 = f.lambda0;
        o.multiplicities = f.multiplicities;
        try {
          double cart = lambda1_static(cfg_, o, q_).lambda;
          r.values.emplace_back("cartesian_lambda1", cart);
          r.values.emplace_back("difference", r.lambda - cart);
          r.pass = std::fabs(r.lambda - cart) <= t.tol;
        } catch (const Error& e) {
          r.notes.emplace_back("cartesian", e.what());
        }
      });
    }
  }

  void cancel(const TaskSpec& t, std::vector<Record>& out) {
    per_frame("cancel", out, [&](const FrameSpec& f, Record& r) {
      double a, b;
      if (f.kind == FrameKind::plane) {
        a = lambda1_static(cfg_, plane_frame(f), q_).lambda;
        b = lambda2_static(cfg_, plane_frame(f), q_).lambda;
      } else {
        a = lambda3_dynamic(cfg_, spacetime_frame(f), q_).lambda;
        b = lambda4_dynamic(cfg_, spacetime_frame(f), q_).lambda;
      }
      r.lambda = a - b;
      r.values = {{"first", a}, {"second", b}, {"difference", a - b}};
      r.pass = std::fabs(a - b) <= t.tol;
    });
  }

  void multiplicities(std::vector<Record>& out) {
    per_frame("multiplicities", out, [&](const FrameSpec& f, Record& r) {
      if (f.kind == FrameKind::plane) {
        ObservationFrame o = plane_frame(f);
        MultiplicityLedger l = ab_multiplicities(cfg_, o);
        r.values = {{"f_y0", l.f_y0}, {"h_hat_x0", l.h_hat_x0}};
        o.multiplicities = true;
        double a = lambda1_static(cfg_, o, q_).lambda, b = lambda2_static(cfg_, o, q_).lambda;
        r.values.emplace_back("lambda1_ledger", a);
        r.values.emplace_back("lambda2_ledger", b);
        r.values.emplace_back("ledger_difference", b - a);
      } else if (f.kind == FrameKind::spacetime) {
        SpacetimeFrame o = spacetime_frame(f);
        ElectricMultiplicities l = electric_ab_multiplicities(cfg_, o);
        r.values = {{"tau_t0", l.tau_t0}, {"chi_x0", l.chi_x0}};
        o.multiplicities = true;
        double a = lambda3_dynamic(cfg_, o, q_).lambda, b = lambda4_dynamic(cfg_, o, q_).lambda;
        r.values.emplace_back("lambda3_ledger", a);
        r.values.emplace_back("lambda4_ledger", b);
        r.values.emplace_back("ledger_difference", b - a);
      } else {
        Ledger3 l = full_multiplicities(cfg_, full_frame(f));
        r.values = {{"f_x0_t0", l.f_x0_t0}, {"h_hat_y0_t0", l.h_hat_y0_t0}};
      }
    });
  }

  void sweep(const TaskSpec& t, std::vector<Record>& out) {
    for (const auto& f : s_.frames) {
      for (double time : t.times) {
        FrameSpec g = f;
        g.t = time;
        out.push_back(timed("vankampen-sweep", &g, [&](Record& r) {
          if (!cfg_.magnetic_flux)
            throw PreconditionError("vankampen-sweep needs a config with a declared flux");
          double phi_t0 = cfg_.magnetic_flux->flux(g.t0);
          double R = std::hypot(g.x - cfg_.magnetic_flux->xc, g.y - cfg_.magnetic_flux->yc);
          double ct = s_.constants.c * (g.t - g.t0);
          r.values = {{"phi_t0", phi_t0}, {"R", R}, {"c_dt", ct}};
          bool causal = ct < R;
          r.notes.emplace_back("regime", causal ? "causal" : "acausal");
          double delta;
          try {
            delta = van_kampen_delta(cfg_, full_frame(g), q_);
          } catch (const DecompositionUnsupported& e) {
            if (causal) throw;
            r.notes.emplace_back("acausal", e.what());
            return;
          } catch (const FieldAtObservationError& e) {
            if (causal) throw;
            r.notes.emplace_back("acausal", e.what());
            return;
          }
          FaradayCheck fc = faraday_check(cfg_, full_frame(g), q_);
          r.lambda = delta;
          r.values.emplace_back("deviation", delta - phi_t0);
          r.values.emplace_back("faraday_residual", fc.residual);
          bool plateau = std::fabs(delta - phi_t0) <= 1e-6 * std::fabs(phi_t0);
          if (causal) r.pass = plateau && fc.pass;
        }));
      }
    }
  }

  void fringe(const TaskSpec& t, std::vector<Record>& out) {
    out.push_back(timed(t.kind, nullptr, [&](Record& r) {
      FringeResult f;
      if (t.magnetic) {
        FringeSetupMagnetic m = *t.magnetic;
        m.constants = s_.constants;
        f = magnetic_fringe(m);
      } else {
        FringeSetupElectric e = t.electric.value_or(FringeSetupElectric{});
        e.constants = s_.constants;
        f = electric_fringe(e);
      }
      r.values = {{"phi_ab", f.phi_ab}, {"x_c", f.x_c}, {"phi_semi", f.phi_semi}, {"sum", f.sum}};
      for (const auto& w : f.warnings) r.notes.emplace_back("warning", w);
      r.pass = std::fabs(f.sum) <= 1e-12 * std::max(std::fabs(f.phi_ab), 1.0);
    }));
  }

  void verify(const TaskSpec& t, std::vector<Record>& out) {
    std::vector<std::pair<std::string, Verifier>> vs;
    for (const auto& name : t.solvers)
      vs.emplace_back(name, make_verifier(cfg_, q_, name, t.step, t.tol));

    if (t.samples == 0) {
      for (const auto& [name, v] : vs)
        per_frame("verify:" + name, out,
                  [&, &v = v](const FrameSpec& f, Record& r) { set_residuals(r, v(f)); });
      return;
    }

    // Halton draws in the sample box; a point is kept only when every solver
    // accepts it and it keeps clear of published discontinuities.
    const Region& box = *s_.sample_box;
    const FrameSpec& base = s_.frames.front();
    int accepted = 0, index = 0, limit = 50 * t.samples;
    while (accepted < t.samples && index < limit) {
      ++index;
      FrameSpec f = base;
      f.x = box.x_lo + (box.x_hi - box.x_lo) * halton(index, 2);
      double u = halton(index, 3), w = halton(index, 5);
      if (base.kind == FrameKind::plane) {
        f.y = box.y_lo + (box.y_hi - box.y_lo) * u;
      } else if (base.kind == FrameKind::spacetime) {
        f.t = box.t_lo + (box.t_hi - box.t_lo) * u;
      } else {
        f.y = box.y_lo + (box.y_hi - box.y_lo) * u;
        f.t = box.t_lo + (box.t_hi - box.t_lo) * w;
      }
      if (collar_distance(cfg_, {f.x, f.y, f.t}) < 20 * t.step) continue;
      std::vector<Record> rows;
      bool usable = true;
      for (const auto& [name, v] : vs) {
        Record r = timed("verify:" + name, &f, [&, &v = v](Record& rr) { set_residuals(rr, v(f)); });
        if (!r.error.empty()) {
          usable = false;
          break;
        }
        rows.push_back(std::move(r));
      }
      if (!usable) continue;
      ++accepted;
      for (auto& r : rows) out.push_back(std::move(r));
    }
    if (accepted < t.samples) {
      Record r;
      r.task = "verify";
      r.error = "only " + std::to_string(accepted) + " of " + std::to_string(t.samples) +
                " sample points were usable after " + std::to_string(index) + " draws";
      out.push_back(std::move(r));
    }
  }
};

std::string fmt_num(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string extra_field(const Record& r) {
  std::string s;
  auto add = [&](const std::string& k, const std::string& v) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  };
  for (const auto& [k, v] : r.values) add(k, fmt_num(v));
  for (const auto& [k, v] : r.notes) add(k, v);
  if (!r.error.empty()) add("error", r.error);
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

json num_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

Report run_scenario(const Scenario& s) { return Runner(s).run(); }

Report run_scenario(const std::string& path) { return run_scenario(load_scenario(path)); }

void write_csv(const Report& r, std::ostream& out) {
  out << "task,x0,y0,t0,x,y,t,lambda,dirac_part,nonlocal_part,gauge_fix_part,"
         "multiplicity_part,residual_x,residual_y,residual_t,pass,extra\n";
  for (const auto& x : r.records) {
    out << csv_quote(x.task);
    for (double v : {x.x0, x.y0, x.t0, x.x, x.y, x.t, x.lambda, x.dirac_part, x.nonlocal_part,
                     x.gauge_fix_part, x.multiplicity_part, x.residual_x, x.residual_y,
                     x.residual_t})
      out << ',' << fmt_num(v);
    out << ',' << (x.pass ? (*x.pass ? "true" : "false") : "");
    out << ',' << csv_quote(extra_field(x)) << '\n';
  }
}

void emit_csv(const Report& r, const std::string& path) {
  if (path == "-") {
    write_csv(r, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write CSV to '" + path + "'");
  write_csv(r, out);
  if (!out) throw Error("failed writing CSV to '" + path + "'");
}

std::string report_json(const Report& r) {
  json j;
  j["scenario"] = r.scenario;
  j["ok"] = r.ok();
  j["records"] = json::array();
  for (const auto& x : r.records) {
    json rec;
    rec["task"] = x.task;
    rec["frame"] = {{"x0", num_json(x.x0)}, {"y0", num_json(x.y0)}, {"t0", num_json(x.t0)},
                    {"x", num_json(x.x)},   {"y", num_json(x.y)},   {"t", num_json(x.t)}};
    rec["lambda"] = num_json(x.lambda);
    rec["dirac_part"] = num_json(x.dirac_part);
    rec["nonlocal_part"] = num_json(x.nonlocal_part);
    rec["gauge_fix_part"] = num_json(x.gauge_fix_part);
    rec["multiplicity_part"] = num_json(x.multiplicity_part);
    rec["residual_x"] = num_json(x.residual_x);
    rec["residual_y"] = num_json(x.residual_y);
    rec["residual_t"] = num_json(x.residual_t);
    rec["pass"] = x.pass ? json(*x.pass) : json(nullptr);
    json values = json::object();
    for (const auto& [k, v] : x.values) values[k] = num_json(v);
    rec["values"] = values;
    json notes = json::array();
    for (const auto& [k, v] : x.notes) notes.push_back({{"key", k}, {"text", v}});
    rec["notes"] = notes;
    rec["error"] = x.error;
    rec["seconds"] = x.seconds;
    j["records"].push_back(rec);
  }
  return j.dump(2) + "\n";
}

void emit_json(const Report& r, const std::string& path) {
  if (path == "-") {
    std::cout << report_json(r);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write JSON report to '" + path + "'");
  out << report_json(r);
}

void print_table(const Report& r, std::ostream& out) {
  out << "scenario: " << r.scenario << "\n";
  out << std::left << std::setw(26) << "task" << std::right << std::setw(11) << "x"
      << std::setw(11) << "y" << std::setw(11) << "t" << std::setw(20) << "lambda"
      << std::setw(12) << "residual" << "  pass\n";
  auto cell = [&](double v, int w, int prec) {
    if (std::isnan(v)) {
      out << std::setw(w) << "-";
    } else {
      std::ostringstream s;
      s << std::setprecision(prec) << v;
      out << std::setw(w) << s.str();
    }
  };
  for (const auto& x : r.records) {
    out << std::left << std::setw(26) << x.task << std::right;
    cell(x.x, 11, 5);
    cell(x.y, 11, 5);
    cell(x.t, 11, 5);
    cell(x.lambda, 20, 12);
    double worst = Record::na;
    for (double v : {x.residual_x, x.residual_y, x.residual_t})
      if (!std::isnan(v)) worst = std::isnan(worst) ? v : std::max(worst, v);
    cell(worst, 12, 3);
    out << "  " << (x.pass ? (*x.pass ? "ok" : "FAIL") : "");
    if (!x.error.empty()) out << "ERROR " << x.error;
    out << "\n";
    for (const auto& [k, v] : x.values) {
      std::ostringstream s;
      s << std::setprecision(12) << v;
      out << "      " << k << " = " << s.str() << "\n";
    }
    for (const auto& [k, v] : x.notes)
      if (k != "branch" && k != "e_branch") out << "      " << k << ": " << v << "\n";
  }
  out << (r.ok() ? "all checks passed" : "some checks FAILED") << "\n";
}

} // namespace gaugephase
