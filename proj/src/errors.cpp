#include <gaugephase/errors.hpp>

#include <sstream>

namespace gaugephase {

namespace {
std::string with_point(const std::string& what, double x, double y, double t) {
  std::ostringstream os;
  os << what << " at (x=" << x << ", y=" << y << ", t=" << t << ")";
  return os.str();
}
} // namespace

EvaluationError::EvaluationError(const std::string& what, double x_, double y_, double t_)
    : Error(with_point(what, x_, y_, t_)), x(x_), y(y_), t(t_) {}

FieldAtObservationError::FieldAtObservationError(const std::string& what, double v)
    : Error(what), value(v) {}

DecompositionUnsupported::DecompositionUnsupported(const std::string& what, std::string coord,
                                                   double at_)
    : Error(what + " [" + coord + " = " + std::to_string(at_) + "]"),
      coordinate(std::move(coord)), at(at_) {}

ToleranceNotMet::ToleranceNotMet(const std::string& what, double best)
    : Error(what), best_estimate(best) {}

ScenarioError::ScenarioError(const std::string& what, std::string p)
    : Error(p.empty() ? what : p + ": " + what), path(std::move(p)) {}

} // namespace gaugephase
