#include <gaugephase/scenario.hpp>

#include <gaugephase/errors.hpp>
#include <gaugephase/full3.hpp>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace gaugephase {

using json = nlohmann::ordered_json;

const char* to_string(FrameKind k) {
  switch (k) {
  case FrameKind::plane: return "plane";
  case FrameKind::spacetime: return "spacetime";
  case FrameKind::full: return "full";
  case FrameKind::polar: return "polar";
  }
  return "?";
}

bool Scenario::operator==(const Scenario& o) const {
  return name == o.name && description == o.description && config == o.config &&
         constants == o.constants && quadrature == o.quadrature && frames == o.frames &&
         sample_box == o.sample_box && tasks == o.tasks && output == o.output;
}

namespace {

// ---- reading helpers ----

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ScenarioError("expected an object", path);
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      throw ScenarioError("unknown key '" + k + "'", child(path, k));
  }
}

double num(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  // JSON has no infinities; accept them spelled as strings
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return Box::inf;
    if (s == "-inf") return -Box::inf;
  }
  throw ScenarioError("expected a number", path);
}

double num(const json& j, const char* key, const std::string& path, double def) {
  return j.contains(key) ? num(j.at(key), child(path, key)) : def;
}

std::optional<double> opt_num(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) return std::nullopt;
  return num(j.at(key), child(path, key));
}

double req_num(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ScenarioError("missing required key", child(path, key));
  return num(j.at(key), child(path, key));
}

std::string str(const json& j, const char* key, const std::string& path, const std::string& def) {
  if (!j.contains(key)) return def;
  if (!j.at(key).is_string()) throw ScenarioError("expected a string", child(path, key));
  return j.at(key).get<std::string>();
}

bool boolean(const json& j, const char* key, const std::string& path, bool def) {
  if (!j.contains(key)) return def;
  if (!j.at(key).is_boolean()) throw ScenarioError("expected true or false", child(path, key));
  return j.at(key).get<bool>();
}

int integer(const json& j, const char* key, const std::string& path, int def) {
  if (!j.contains(key)) return def;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ScenarioError("expected an integer", child(path, key));
  return v.get<int>();
}

json num_out(double v) {
  if (v == Box::inf) return "inf";
  if (v == -Box::inf) return "-inf";
  return v;
}

// ---- sections ----

PhysicalConstants parse_constants(const json& j, const std::string& path) {
  only_keys(j, path, {"c", "q_over_hbar_c", "flux_quantum"});
  PhysicalConstants k;
  k.c = num(j, "c", path, k.c);
  k.q_over_hbar_c = num(j, "q_over_hbar_c", path, k.q_over_hbar_c);
  k.flux_quantum = num(j, "flux_quantum", path, k.flux_quantum);
  try {
    k.validate();
  } catch (const PreconditionError& e) {
    throw ScenarioError(e.what(), path);
  }
  return k;
}

json constants_out(const PhysicalConstants& k) {
  return {{"c", k.c}, {"q_over_hbar_c", k.q_over_hbar_c}, {"flux_quantum", k.flux_quantum}};
}

QuadratureSpec parse_quadrature(const json& j, const std::string& path) {
  only_keys(j, path, {"rule", "order", "panels", "max_depth", "abs_tol", "rel_tol", "graded"});
  QuadratureSpec q;
  try {
    q.rule = rule_from_string(str(j, "rule", path, to_string(q.rule)));
  } catch (const PreconditionError& e) {
    throw ScenarioError(e.what(), child(path, "rule"));
  }
  q.order = integer(j, "order", path, q.order);
  q.panels = integer(j, "panels", path, q.panels);
  q.max_depth = integer(j, "max_depth", path, q.max_depth);
  q.abs_tol = num(j, "abs_tol", path, q.abs_tol);
  q.rel_tol = num(j, "rel_tol", path, q.rel_tol);
  q.graded = boolean(j, "graded", path, q.graded);
  try {
    q.validate();
  } catch (const PreconditionError& e) {
    throw ScenarioError(e.what(), path);
  }
  return q;
}

json quadrature_out(const QuadratureSpec& q) {
  return {{"rule", to_string(q.rule)}, {"order", q.order},     {"panels", q.panels},
          {"max_depth", q.max_depth},  {"abs_tol", q.abs_tol}, {"rel_tol", q.rel_tol},
          {"graded", q.graded}};
}

ConfigSpec parse_config(const json& j, const std::string& path) {
  only_keys(j, path, {"builtin", "params", "grid"});
  ConfigSpec c;
  c.builtin = str(j, "builtin", path, "");
  c.grid = str(j, "grid", path, "");
  if (c.builtin.empty() == c.grid.empty())
    throw ScenarioError("give exactly one of 'builtin' or 'grid'", path);
  if (j.contains("params")) {
    if (!c.grid.empty()) throw ScenarioError("grid configs take no params", child(path, "params"));
    const json& p = j.at("params");
    if (!p.is_object()) throw ScenarioError("expected an object", child(path, "params"));
    for (const auto& [k, v] : p.items()) c.params[k] = num(v, child(child(path, "params"), k));
  }
  if (!c.builtin.empty()) {
    const auto& cat = builtin_catalog();
    auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& e) { return e.name == c.builtin; });
    if (it == cat.end())
      throw ScenarioError("unknown built-in config '" + c.builtin + "'", child(path, "builtin"));
    for (const auto& [k, v] : c.params)
      if (std::none_of(it->params.begin(), it->params.end(), [&](const auto& d) { return d.name == k; }))
        throw ScenarioError("config '" + c.builtin + "' has no parameter '" + k + "'",
                            child(child(path, "params"), k));
  }
  return c;
}

json config_out(const ConfigSpec& c) {
  if (!c.grid.empty()) return {{"grid", c.grid}};
  json p = json::object();
  for (const auto& [k, v] : c.params) p[k] = num_out(v);
  return {{"builtin", c.builtin}, {"params", p}};
}

FrameSpec parse_frame(const json& j, const std::string& path) {
  if (!j.is_object()) throw ScenarioError("expected an object", path);
  FrameSpec f;
  bool polar = j.contains("rho0") || j.contains("rho");
  bool has_t0 = j.contains("t0"), has_y0 = j.contains("y0");
  if (polar) {
    f.kind = FrameKind::polar;
    only_keys(j, path, {"ox", "oy", "rho0", "phi0", "rho", "phi", "rho_ref", "phi_ref", "t",
                        "lambda0", "multiplicities"});
    f.ox = num(j, "ox", path, 0);
    f.oy = num(j, "oy", path, 0);
    f.rho0 = req_num(j, "rho0", path);
    f.phi0 = req_num(j, "phi0", path);
    f.rho = req_num(j, "rho", path);
    f.phi = req_num(j, "phi", path);
    f.rho_ref = opt_num(j, "rho_ref", path);
    f.phi_ref = opt_num(j, "phi_ref", path);
    f.t = num(j, "t", path, 0);
  } else if (has_t0 && has_y0) {
    f.kind = FrameKind::full;
    only_keys(j, path, {"x0", "y0", "t0", "x", "y", "t", "x_ref", "y_ref", "lambda0",
                        "multiplicities"});
    f.x0 = req_num(j, "x0", path);
    f.y0 = req_num(j, "y0", path);
    f.t0 = req_num(j, "t0", path);
    f.x = req_num(j, "x", path);
    f.y = req_num(j, "y", path);
    f.t = req_num(j, "t", path);
    f.x_ref = opt_num(j, "x_ref", path);
    f.y_ref = opt_num(j, "y_ref", path);
  } else if (has_t0) {
    f.kind = FrameKind::spacetime;
    only_keys(j, path, {"x0", "t0", "x", "t", "y", "x_ref", "t_ref", "lambda0", "multiplicities"});
    f.x0 = req_num(j, "x0", path);
    f.t0 = req_num(j, "t0", path);
    f.x = req_num(j, "x", path);
    f.t = req_num(j, "t", path);
    f.y = num(j, "y", path, 0);
    f.x_ref = opt_num(j, "x_ref", path);
    f.t_ref = opt_num(j, "t_ref", path);
  } else {
    f.kind = FrameKind::plane;
    only_keys(j, path, {"x0", "y0", "x", "y", "t", "x_ref", "y_ref", "lambda0", "multiplicities"});
    f.x0 = req_num(j, "x0", path);
    f.y0 = req_num(j, "y0", path);
    f.x = req_num(j, "x", path);
    f.y = req_num(j, "y", path);
    f.t = num(j, "t", path, 0);
    f.x_ref = opt_num(j, "x_ref", path);
    f.y_ref = opt_num(j, "y_ref", path);
  }
  f.lambda0 = num(j, "lambda0", path, 0);
  f.multiplicities = boolean(j, "multiplicities", path, true);
  return f;
}

json frame_out(const FrameSpec& f) {
  json j;
  auto opt = [&](const char* k, const std::optional<double>& v) {
    if (v) j[k] = *v;
  };
  switch (f.kind) {
  case FrameKind::polar:
    j = {{"ox", f.ox}, {"oy", f.oy}, {"rho0", f.rho0}, {"phi0", f.phi0},
         {"rho", f.rho}, {"phi", f.phi}, {"t", f.t}};
    opt("rho_ref", f.rho_ref);
    opt("phi_ref", f.phi_ref);
    break;
  case FrameKind::full:
    j = {{"x0", f.x0}, {"y0", f.y0}, {"t0", f.t0}, {"x", f.x}, {"y", f.y}, {"t", f.t}};
    opt("x_ref", f.x_ref);
    opt("y_ref", f.y_ref);
    break;
  case FrameKind::spacetime:
    j = {{"x0", f.x0}, {"t0", f.t0}, {"x", f.x}, {"t", f.t}, {"y", f.y}};
    opt("x_ref", f.x_ref);
    opt("t_ref", f.t_ref);
    break;
  case FrameKind::plane:
    j = {{"x0", f.x0}, {"y0", f.y0}, {"x", f.x}, {"y", f.y}, {"t", f.t}};
    opt("x_ref", f.x_ref);
    opt("y_ref", f.y_ref);
    break;
  }
  j["lambda0"] = f.lambda0;
  j["multiplicities"] = f.multiplicities;
  return j;
}

Region parse_box(const json& j, const std::string& path) {
  only_keys(j, path, {"x_lo", "x_hi", "y_lo", "y_hi", "t_lo", "t_hi"});
  Region r;
  r.x_lo = num(j, "x_lo", path, 0);
  r.x_hi = num(j, "x_hi", path, 0);
  r.y_lo = num(j, "y_lo", path, 0);
  r.y_hi = num(j, "y_hi", path, 0);
  r.t_lo = num(j, "t_lo", path, 0);
  r.t_hi = num(j, "t_hi", path, 0);
  if (r.x_hi < r.x_lo || r.y_hi < r.y_lo || r.t_hi < r.t_lo)
    throw ScenarioError("box bounds must satisfy lo <= hi", path);
  return r;
}

json box_out(const Region& r) {
  return {{"x_lo", r.x_lo}, {"x_hi", r.x_hi}, {"y_lo", r.y_lo},
          {"y_hi", r.y_hi}, {"t_lo", r.t_lo}, {"t_hi", r.t_hi}};
}

FringeSetupMagnetic parse_magnetic(const json& j, const std::string& path) {
  only_keys(j, path, {"q_over_e", "B", "W", "d", "L", "lambda_dB"});
  FringeSetupMagnetic s;
  s.q_over_e = num(j, "q_over_e", path, s.q_over_e);
  s.B = num(j, "B", path, s.B);
  s.W = num(j, "W", path, s.W);
  s.d = num(j, "d", path, s.d);
  s.L = num(j, "L", path, s.L);
  s.lambda_dB = num(j, "lambda_dB", path, s.lambda_dB);
  return s;
}

FringeSetupElectric parse_electric(const json& j, const std::string& path) {
  only_keys(j, path, {"q_over_e", "E", "T", "d", "L", "lambda_dB", "v"});
  FringeSetupElectric s;
  s.q_over_e = num(j, "q_over_e", path, s.q_over_e);
  s.E = num(j, "E", path, s.E);
  s.T = num(j, "T", path, s.T);
  s.d = num(j, "d", path, s.d);
  s.L = num(j, "L", path, s.L);
  s.lambda_dB = num(j, "lambda_dB", path, s.lambda_dB);
  s.v = num(j, "v", path, s.v);
  return s;
}

const std::set<std::string> plain_tasks = {
    "consistency", "lambda1", "lambda2", "lambda3",        "lambda4",        "naive",
    "naive-initial", "polar", "cancel",  "multiplicities", "faraday",        "full",
    "vankampen-sweep", "fringe-magnetic", "fringe-electric", "verify"};

// Frame kinds each task accepts; empty means the task needs no frames.
std::vector<FrameKind> task_frames(const TaskSpec& t) {
  using K = FrameKind;
  const std::string& k = t.kind;
  if (k == "lambda1" || k == "lambda2") return {K::plane};
  if (k == "lambda3" || k == "lambda4" || k == "naive" || k == "naive-initial")
    return {K::spacetime};
  if (k == "polar") return {K::polar};
  if (k == "full" || k == "faraday" || k == "vankampen-sweep") return {K::full};
  if (k == "cancel") return {K::plane, K::spacetime};
  if (k == "multiplicities") return {K::plane, K::spacetime, K::full};
  if (k == "verify") return {K::plane, K::spacetime, K::full};
  return {};
}

const std::map<FrameKind, std::set<std::string>> verify_solvers = {
    {FrameKind::plane, {"lambda1", "lambda2"}},
    {FrameKind::spacetime, {"lambda3", "lambda4", "naive", "naive-initial"}},
    {FrameKind::full, {"full1", "full2", "full4", "fin"}},
};

TaskSpec parse_task(const json& j, const std::string& path) {
  TaskSpec t;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.rfind("full:", 0) == 0) {
      t.kind = "full";
      t.variant = s.substr(5);
    } else {
      t.kind = s;
    }
  } else {
    if (!j.is_object() || !j.contains("task"))
      throw ScenarioError("a task is a name or an object with a 'task' key", path);
    t.kind = str(j, "task", path, "");
    if (t.kind.rfind("full:", 0) == 0) {
      t.variant = t.kind.substr(5);
      t.kind = "full";
    }
  }
  if (!plain_tasks.count(t.kind)) throw ScenarioError("unknown task '" + t.kind + "'", path);

  json o = j.is_object() ? j : json{{"task", t.kind}};
  const std::string& k = t.kind;
  if (k == "full") {
    only_keys(o, path, {"task", "variant"});
    t.variant = str(o, "variant", path, t.variant);
    try {
      variant_from_string(t.variant);
    } catch (const PreconditionError& e) {
      throw ScenarioError(e.what(), path);
    }
  } else if (k == "polar") {
    only_keys(o, path, {"task", "branch", "tol"});
    t.branch = str(o, "branch", path, t.branch);
    if (t.branch != "clockwise" && t.branch != "counterclockwise" && t.branch != "both")
      throw ScenarioError("branch must be clockwise, counterclockwise or both",
                          child(path, "branch"));
    t.tol = num(o, "tol", path, t.tol);
  } else if (k == "vankampen-sweep") {
    only_keys(o, path, {"task", "t"});
    if (!o.contains("t") || !o.at("t").is_array() || o.at("t").empty())
      throw ScenarioError("vankampen-sweep needs a non-empty 't' list", child(path, "t"));
    int i = 0;
    for (const json& v : o.at("t")) t.times.push_back(num(v, child(path, "t/" + std::to_string(i++))));
  } else if (k == "verify") {
    only_keys(o, path, {"task", "solvers", "step", "tol", "samples"});
    if (o.contains("solvers")) {
      if (!o.at("solvers").is_array()) throw ScenarioError("expected a list", child(path, "solvers"));
      for (const json& v : o.at("solvers")) {
        if (!v.is_string()) throw ScenarioError("expected solver names", child(path, "solvers"));
        t.solvers.push_back(v.get<std::string>());
      }
    }
    t.step = num(o, "step", path, t.step);
    t.tol = num(o, "tol", path, t.tol);
    t.samples = integer(o, "samples", path, t.samples);
    if (!(t.step > 0)) throw ScenarioError("step must be > 0", child(path, "step"));
    if (t.samples < 0) throw ScenarioError("samples must be >= 0", child(path, "samples"));
  } else if (k == "consistency") {
    only_keys(o, path, {"task", "samples", "tol"});
    t.samples = integer(o, "samples", path, 9);
    t.tol = num(o, "tol", path, t.tol);
    if (t.samples < 4) throw ScenarioError("samples must be >= 4", child(path, "samples"));
  } else if (k == "cancel") {
    only_keys(o, path, {"task", "tol"});
    t.tol = num(o, "tol", path, 1e-8);
  } else if (k == "fringe-magnetic") {
    only_keys(o, path, {"task", "setup"});
    t.magnetic = parse_magnetic(o.value("setup", json::object()), child(path, "setup"));
  } else if (k == "fringe-electric") {
    only_keys(o, path, {"task", "setup"});
    t.electric = parse_electric(o.value("setup", json::object()), child(path, "setup"));
  } else {
    only_keys(o, path, {"task"});
  }
  return t;
}

json task_out(const TaskSpec& t) {
  json j = {{"task", t.kind}};
  const std::string& k = t.kind;
  if (k == "full") j["variant"] = t.variant;
  if (k == "polar") {
    j["branch"] = t.branch;
    j["tol"] = t.tol;
  }
  if (k == "vankampen-sweep") j["t"] = t.times;
  if (k == "verify") {
    j["solvers"] = t.solvers;
    j["step"] = t.step;
    j["tol"] = t.tol;
    j["samples"] = t.samples;
  }
  if (k == "consistency") {
    j["samples"] = t.samples;
    j["tol"] = t.tol;
  }
  if (k == "cancel") j["tol"] = t.tol;
  if (t.magnetic)
    j["setup"] = {{"q_over_e", t.magnetic->q_over_e}, {"B", t.magnetic->B},
                  {"W", t.magnetic->W},               {"d", t.magnetic->d},
                  {"L", t.magnetic->L},               {"lambda_dB", t.magnetic->lambda_dB}};
  if (t.electric)
    j["setup"] = {{"q_over_e", t.electric->q_over_e}, {"E", t.electric->E},
                  {"T", t.electric->T},               {"d", t.electric->d},
                  {"L", t.electric->L},               {"lambda_dB", t.electric->lambda_dB},
                  {"v", t.electric->v}};
  return j;
}

OutputSpec parse_output(const json& j, const std::string& path) {
  only_keys(j, path, {"table", "csv", "json"});
  OutputSpec o;
  o.table = boolean(j, "table", path, o.table);
  o.csv = str(j, "csv", path, "");
  o.json = str(j, "json", path, "");
  return o;
}

int line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("malformed JSON: ") + e.what(),
                        "line " + std::to_string(line_of(text, e.byte)));
  }
  const std::string root;
  only_keys(j, root, {"name", "description", "config", "constants", "quadrature", "frames",
                      "sample_box", "tasks", "output"});
  Scenario s;
  s.base_dir = base_dir;
  s.name = str(j, "name", root, "");
  if (s.name.empty()) throw ScenarioError("missing required key", "/name");
  s.description = str(j, "description", root, "");
  s.config.builtin = "zero";
  if (j.contains("config")) s.config = parse_config(j.at("config"), "/config");
  if (j.contains("constants")) s.constants = parse_constants(j.at("constants"), "/constants");
  if (j.contains("quadrature")) s.quadrature = parse_quadrature(j.at("quadrature"), "/quadrature");
  if (j.contains("sample_box")) s.sample_box = parse_box(j.at("sample_box"), "/sample_box");
  if (j.contains("output")) s.output = parse_output(j.at("output"), "/output");

  if (j.contains("frames")) {
    const json& fr = j.at("frames");
    if (!fr.is_array()) throw ScenarioError("expected a list", "/frames");
    for (std::size_t i = 0; i < fr.size(); ++i)
      s.frames.push_back(parse_frame(fr[i], "/frames/" + std::to_string(i)));
    for (std::size_t i = 1; i < s.frames.size(); ++i)
      if (s.frames[i].kind != s.frames[0].kind)
        throw ScenarioError(std::string("frame dimensionality '") + to_string(s.frames[i].kind) +
                                "' differs from '" + to_string(s.frames[0].kind) + "'",
                            "/frames/" + std::to_string(i));
  }
  if (j.contains("tasks")) {
    const json& ts = j.at("tasks");
    if (!ts.is_array()) throw ScenarioError("expected a list", "/tasks");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::string path = "/tasks/" + std::to_string(i);
      TaskSpec t = parse_task(ts[i], path);
      auto kinds = task_frames(t);
      if (!kinds.empty()) {
        if (s.frames.empty()) throw ScenarioError("task '" + t.kind + "' needs frames", path);
        FrameKind fk = s.frames[0].kind;
        if (std::find(kinds.begin(), kinds.end(), fk) == kinds.end())
          throw ScenarioError("task '" + t.kind + "' does not apply to " + to_string(fk) +
                                  " frames",
                              path);
        if (t.kind == "verify") {
          const auto& allowed = verify_solvers.at(fk);
          if (t.solvers.empty()) {
            for (const auto& v : allowed)
              if (v.rfind("naive", 0) != 0) t.solvers.push_back(v);
          }
          for (const auto& v : t.solvers)
            if (!allowed.count(v))
              throw ScenarioError("solver '" + v + "' does not apply to " + to_string(fk) +
                                      " frames",
                                  path + "/solvers");
        }
      }
      if ((t.kind == "consistency" || (t.kind == "verify" && t.samples > 0)) && !s.sample_box)
        throw ScenarioError("task '" + t.kind + "' needs a sample_box", path);
      s.tasks.push_back(std::move(t));
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file", path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto dir = std::filesystem::path(path).parent_path();
  return parse_scenario(buf.str(), dir.empty() ? "." : dir.string());
}

std::string serialize_scenario(const Scenario& s) {
  json j;
  j["name"] = s.name;
  j["description"] = s.description;
  j["config"] = config_out(s.config);
  j["constants"] = constants_out(s.constants);
  j["quadrature"] = quadrature_out(s.quadrature);
  j["frames"] = json::array();
  for (const auto& f : s.frames) j["frames"].push_back(frame_out(f));
  if (s.sample_box) j["sample_box"] = box_out(*s.sample_box);
  j["tasks"] = json::array();
  for (const auto& t : s.tasks) j["tasks"].push_back(task_out(t));
  j["output"] = {{"table", s.output.table}, {"csv", s.output.csv}, {"json", s.output.json}};
  return j.dump(2) + "\n";
}

FieldConfig build_config(const Scenario& s) {
  try {
    if (!s.config.grid.empty()) {
      std::filesystem::path p(s.config.grid);
      if (p.is_relative()) p = std::filesystem::path(s.base_dir) / p;
      return load_grid(p.string(), s.constants);
    }
    return make_builtin(s.config.builtin, s.config.params, s.constants);
  } catch (const PreconditionError& e) {
    throw ScenarioError(e.what(), "/config");
  }
}

} // namespace gaugephase
