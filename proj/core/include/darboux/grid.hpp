#pragma once

#include <cstddef>
#include <vector>

namespace darboux {

/// Strictly positive, strictly increasing radii (fm).
class RadialGrid {
 public:
  enum class Spacing { linear, log };

  RadialGrid() = default;
  explicit RadialGrid(std::vector<double> radii);

  static RadialGrid linear(double r_min, double r_max, std::size_t count);
  static RadialGrid logarithmic(double r_min, double r_max, std::size_t count);
  static RadialGrid make(double r_min, double r_max, std::size_t count, Spacing spacing);

  std::size_t size() const { return r_.size(); }
  double operator[](std::size_t i) const { return r_[i]; }
  const std::vector<double>& radii() const { return r_; }
  auto begin() const { return r_.begin(); }
  auto end() const { return r_.end(); }

 private:
  std::vector<double> r_;
};

inline constexpr double kDefaultRMin = 1e-2;
inline constexpr double kDefaultRMax = 20.0;

}  // namespace darboux
