#include <gaugephase/catalog.hpp>

#include <gaugephase/errors.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

namespace gaugephase {

namespace {

constexpr std::array<const char*, 9> kColumns = {"x", "y", "t", "A_x", "A_y",
                                                 "phi", "B_z", "E_x", "E_y"};

struct Grid {
  std::vector<double> xs, ys, ts;
  std::array<std::vector<double>, 6> values; // A_x A_y phi B_z E_x E_y

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (k * ys.size() + j) * xs.size() + i;
  }

  // Lower cell index and weight along one axis; single-node axes are constant.
  static std::pair<std::size_t, double> locate(const std::vector<double>& v, double q) {
    if (v.size() == 1) return {0, 0.0};
    auto it = std::upper_bound(v.begin(), v.end(), q);
    std::size_t hi = std::clamp<std::size_t>(it - v.begin(), 1, v.size() - 1);
    std::size_t lo = hi - 1;
    return {lo, (q - v[lo]) / (v[hi] - v[lo])};
  }

  double interp(int field, double x, double y, double t) const {
    if (x < xs.front() || x > xs.back() || y < ys.front() || y > ys.back() || t < ts.front() ||
        t > ts.back())
      return 0.0;
    auto [i, wx] = locate(xs, x);
    auto [j, wy] = locate(ys, y);
    auto [k, wt] = locate(ts, t);
    const auto& v = values[field];
    auto node = [&](std::size_t di, std::size_t dj, std::size_t dk) {
      std::size_t ii = std::min(i + di, xs.size() - 1), jj = std::min(j + dj, ys.size() - 1),
                  kk = std::min(k + dk, ts.size() - 1);
      return v[index(ii, jj, kk)];
    };
    auto slice = [&](std::size_t dk) {
      double a = node(0, 0, dk) * (1 - wx) + node(1, 0, dk) * wx;
      double b = node(0, 1, dk) * (1 - wx) + node(1, 1, dk) * wx;
      return a * (1 - wy) + b * wy;
    };
    return slice(0) * (1 - wt) + slice(1) * wt;
  }
};

} // namespace

FieldConfig load_grid(const std::string& path, const PhysicalConstants& k) {
  k.validate();
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open grid file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw PreconditionError(path + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  {
    std::istringstream hs(line);
    std::string tok;
    for (const char* col : kColumns)
      if (!(hs >> tok) || tok != col)
        fail("header must be 'x y t A_x A_y phi B_z E_x E_y'");
    if (hs >> tok) fail("unexpected extra header column '" + tok + "'");
  }
  std::map<std::tuple<double, double, double>, std::array<double, 6>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::array<double, 9> r;
    for (double& v : r)
      if (!(ls >> v)) fail("expected 9 numeric columns");
    std::string extra;
    if (ls >> extra) fail("too many columns");
    auto key = std::make_tuple(r[0], r[1], r[2]);
    if (rows.count(key)) fail("duplicate grid node");
    rows[key] = {r[3], r[4], r[5], r[6], r[7], r[8]};
  }
  if (rows.empty()) fail("grid has no rows");

  auto g = std::make_shared<Grid>();
  for (const auto& [key, v] : rows) {
    g->xs.push_back(std::get<0>(key));
    g->ys.push_back(std::get<1>(key));
    g->ts.push_back(std::get<2>(key));
  }
  for (auto* axis : {&g->xs, &g->ys, &g->ts}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }
  std::size_t n = g->xs.size() * g->ys.size() * g->ts.size();
  if (n != rows.size()) fail("rows do not form a full tensor grid");
  for (auto& v : g->values) v.resize(n);
  for (const auto& [key, v] : rows) {
    auto pos = [](const std::vector<double>& a, double q) {
      return static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), q) - a.begin());
    };
    std::size_t idx = g->index(pos(g->xs, std::get<0>(key)), pos(g->ys, std::get<1>(key)),
                               pos(g->ts, std::get<2>(key)));
    for (int f = 0; f < 6; ++f) g->values[f][idx] = v[f];
  }

  FieldConfig f = zero_config(k);
  f.name = "grid:" + path;
  f.kind = ConfigKind::tabulated_grid;
  f.gauge = "as tabulated";
  auto field = [g](int which) -> Evaluator {
    return [g, which](double x, double y, double t) { return g->interp(which, x, y, t); };
  };
  f.A_x = field(0);
  f.A_y = field(1);
  f.phi = field(2);
  f.B_z = field(3);
  f.E_x = field(4);
  f.E_y = field(5);
  f.support = Box{g->xs.front(), g->xs.back(), g->ys.front(), g->ys.back(), g->ts.front(),
                  g->ts.back()};
  f.field_support = f.support;
  // interpolation kinks on every grid line
  for (double x : g->xs) f.edges.push_back(EdgeSegment{x, 0, x, 1, true});
  for (double y : g->ys) f.edges.push_back(EdgeSegment{0, y, 1, y, true});
  for (double t : g->ts) f.edges.push_back(EdgeTime{t});
  return f;
}

} // namespace gaugephase
