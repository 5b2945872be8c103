#include <gaugephase/solution.hpp>

#include <algorithm>
#include <cmath>

namespace gaugephase {

const char* to_string(Branch b) {
  return b == Branch::clockwise ? "clockwise" : "counterclockwise";
}

double ResidualReport::worst() const {
  double w = 0;
  for (double r : {residual_x, residual_y, residual_t})
    if (!std::isnan(r)) w = std::max(w, r);
  return w;
}

} // namespace gaugephase
