#include "darboux/grid.hpp"

#include <cmath>

#include "darboux/common.hpp"

namespace darboux {

RadialGrid::RadialGrid(std::vector<double> radii) : r_(std::move(radii)) {
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (!(r_[i] > 0.0)) throw ArgumentError("radial grid must be strictly positive");
    if (i > 0 && !(r_[i] > r_[i - 1])) throw ArgumentError("radial grid must be strictly increasing");
  }
}

RadialGrid RadialGrid::linear(double r_min, double r_max, std::size_t count) {
  return make(r_min, r_max, count, Spacing::linear);
}

RadialGrid RadialGrid::logarithmic(double r_min, double r_max, std::size_t count) {
  return make(r_min, r_max, count, Spacing::log);
}

RadialGrid RadialGrid::make(double r_min, double r_max, std::size_t count, Spacing spacing) {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw ArgumentError("radial grid needs 0 < r_min < r_max");
  if (count < 2) throw ArgumentError("radial grid needs at least two points");
  std::vector<double> r(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    r[i] = spacing == Spacing::linear ? r_min + t * (r_max - r_min)
                                      : r_min * std::pow(r_max / r_min, t);
  }
  r.back() = r_max;
  return RadialGrid(std::move(r));
}

}  // namespace darboux
