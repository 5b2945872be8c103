#include <catch2/catch_amalgamated.hpp>

#include <gaugephase/errors.hpp>
#include <gaugephase/scenario.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>

using namespace gaugephase;
using Catch::Approx;
using Catch::Matchers::ContainsSubstring;

namespace fs = std::filesystem;

namespace {

std::string scenario_dir() { return GAUGEPHASE_SCENARIO_DIR; }

std::string error_path(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.path;
  }
  return "<no error>";
}

double value_of(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return v;
  FAIL("missing value " << key);
  return 0;
}

} // namespace

TEST_CASE("malformed JSON reports a line number", "[scenario][errors]") {
  std::string text = "{\n  \"name\": \"x\",\n  \"tasks\": [\n}\n";
  CHECK_THAT(error_path(text), ContainsSubstring("line"));
  CHECK_THROWS_WITH(parse_scenario(text), ContainsSubstring("line 4"));
}

TEST_CASE("schema errors carry a JSON pointer", "[scenario][errors]") {
  CHECK(error_path(R"({"name": "x", "bogus": 1})") == "/bogus");
  CHECK(error_path(R"({"tasks": []})") == "/name");
  CHECK(error_path(R"({"name": "x", "frames": [{"x0": 0, "y0": 0, "x": 1, "y": 1},
                                               {"x0": 0, "t0": 0, "x": 1, "t": 1}]})") ==
        "/frames/1");
  CHECK_THROWS_WITH(parse_scenario(R"({"name": "x", "frames": [{"x0": 0, "y0": 0, "x": 1, "y": 1},
                                     {"x0": 0, "t0": 0, "x": 1, "t": 1}]})"),
                    ContainsSubstring("dimensionality"));
  CHECK(error_path(R"({"name": "x", "tasks": [{"task": "lambda1", "wat": 2}]})")
            .starts_with("/tasks/0"));
  CHECK(error_path(R"({"name": "x", "tasks": ["no-such-task"]})").starts_with("/tasks/0"));
}

TEST_CASE("tasks must fit the frame kind", "[scenario][errors]") {
  CHECK_THROWS_WITH(parse_scenario(R"({"name": "x", "frames": [{"x0": 0, "t0": 0, "x": 1, "t": 1}],
                                     "tasks": ["lambda1"]})"),
                    ContainsSubstring("does not apply to"));
  CHECK_THROWS_WITH(parse_scenario(R"({"name": "x", "frames": [{"x0": 0, "y0": 0, "x": 1, "y": 1}],
                                     "tasks": ["consistency"]})"),
                    ContainsSubstring("needs a sample_box"));
}

TEST_CASE("bundled scenarios round-trip through serialization", "[scenario][roundtrip]") {
  int n = 0;
  for (const auto& entry : fs::directory_iterator(scenario_dir())) {
    if (entry.path().extension() != ".json") continue;
    INFO(entry.path().string());
    Scenario a = load_scenario(entry.path().string());
    Scenario b = parse_scenario(serialize_scenario(a));
    CHECK(a == b);
    CHECK(serialize_scenario(b) == serialize_scenario(a));
    ++n;
  }
  CHECK(n >= 10);
}

TEST_CASE("constructed scenario round-trips with every field set", "[scenario][roundtrip]") {
  Scenario s;
  s.name = "constructed";
  s.description = "all the knobs";
  s.config.builtin = "vertical_strip";
  s.config.params = {{"x_lo", 1}, {"x_hi", 2}, {"B0", 0.5}};
  s.constants.c = 2;
  s.quadrature.panels = 7;
  FrameSpec f;
  f.x0 = 0.25;
  f.x = 3;
  f.y = -1;
  f.x_ref = 4;
  f.lambda0 = 0.5;
  f.multiplicities = false;
  s.frames = {f};
  s.sample_box = Region{-1, 4, -2, 2, 0, 0};
  TaskSpec v;
  v.kind = "verify";
  v.solvers = {"lambda2"};
  v.samples = 5;
  v.tol = 1e-7;
  s.tasks = {v};
  s.output.table = false;
  s.output.csv = "out.csv";
  Scenario back = parse_scenario(serialize_scenario(s));
  CHECK(back == s);
}

TEST_CASE("zero config: every solver returns the base value", "[scenario][run]") {
  auto s = parse_scenario(R"({"name": "zero",
    "frames": [{"x0": 0, "y0": 0, "x": 1, "y": 2, "lambda0": 0.5}],
    "tasks": ["lambda1", "lambda2", "verify"]})");
  auto rep = run_scenario(s);
  CHECK(rep.exit_code() == 0);
  REQUIRE(rep.records.size() >= 3);
  CHECK(rep.records[0].lambda == 0.5);
  CHECK(rep.records[1].lambda == 0.5);
}

TEST_CASE("the naive capacitor scenario fails", "[scenario][run][naive]") {
  auto rep = run_scenario(scenario_dir() + "/naive-capacitor.json");
  CHECK(rep.exit_code() != 0);
}

TEST_CASE("an empty task list gives a header-only CSV", "[scenario][csv]") {
  auto rep = run_scenario(parse_scenario(R"({"name": "empty", "tasks": []})"));
  CHECK(rep.records.empty());
  CHECK(rep.ok());
  std::ostringstream os;
  write_csv(rep, os);
  CHECK(os.str() ==
        "task,x0,y0,t0,x,y,t,lambda,dirac_part,nonlocal_part,gauge_fix_part,"
        "multiplicity_part,residual_x,residual_y,residual_t,pass,extra\n");
}

TEST_CASE("van Kampen sweep holds its plateau over causal times", "[scenario][vankampen]") {
  auto s = parse_scenario(R"({"name": "vk",
    "config": {"builtin": "retarded_flux", "params": {"phi0": 1, "k": 0.1, "t0": 0, "xc": 0, "yc": 0}},
    "frames": [{"x0": -0.5, "y0": -0.5, "t0": 0, "x": 3.5355339059327378, "y": 3.5355339059327378, "t": 2}],
    "tasks": [{"task": "vankampen-sweep", "t": [0.5, 1, 2, 3, 4]}]})");
  auto rep = run_scenario(s);
  REQUIRE(rep.records.size() == 5);
  for (const auto& r : rep.records) {
    INFO("t = " << r.t);
    CHECK(r.error.empty());
    REQUIRE(r.pass);
    CHECK(*r.pass);
    CHECK(r.lambda == Approx(rep.records.front().lambda).margin(1e-9));
  }
  CHECK(rep.records.front().lambda == Approx(1.0).margin(1e-6));
}

TEST_CASE("fringe task rows", "[scenario][fringe]") {
  auto rep = run_scenario(scenario_dir() + "/fringe-magnetic.json");
  REQUIRE(rep.records.size() == 1);
  const auto& r = rep.records.front();
  CHECK(value_of(r, "phi_ab") == Approx(-0.6283185307).margin(1e-9));
  CHECK(value_of(r, "x_c") == Approx(0.05).margin(1e-9));
  CHECK(value_of(r, "phi_semi") == Approx(0.6283185307).margin(1e-9));
  CHECK(std::fabs(value_of(r, "sum")) <= 1e-12);
  CHECK(rep.ok());
}

TEST_CASE("JSON report mirrors the records", "[scenario][json]") {
  auto rep = run_scenario(scenario_dir() + "/vertical-strip.json");
  CHECK(rep.ok());
  std::string j = report_json(rep);
  CHECK_THAT(j, ContainsSubstring("\"scenario\": \"vertical-strip\""));
  CHECK_THAT(j, ContainsSubstring("\"ok\": true"));
  CHECK_THAT(j, ContainsSubstring("\"task\": \"lambda1\""));
  std::ostringstream os;
  print_table(rep, os);
  CHECK_THAT(os.str(), ContainsSubstring("vertical-strip"));
}

TEST_CASE("config errors surface under /config", "[scenario][errors]") {
  CHECK(error_path(R"({"name": "bad", "config": {"builtin": "nope"}})") == "/config/builtin");
  auto s = parse_scenario(R"({"name": "bad", "config": {"grid": "no-such-grid.txt"}})");
  try {
    build_config(s);
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.path == "/config");
  }
}
