#include "dbarkit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dbarkit/error.hpp"

namespace dbarkit {

Grid::Grid(double radius, int n) : radius_(radius), n_(n), h_(2.0 * radius / n) {}

int Grid::ring(std::size_t index) const noexcept {
  const int j = static_cast<int>(index % n_);
  const int k = static_cast<int>(index / n_);
  return std::min({j, k, n_ - 1 - j, n_ - 1 - k});
}

Grid build_grid(double radius, int n) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::invalid_argument, "grid radius must be positive, got " + std::to_string(radius));
  }
  if (n < 8) {
    throw Error(ErrorKind::invalid_argument, "grid needs n >= 8 points per axis, got " + std::to_string(n));
  }
  return Grid(radius, n);
}

}  // namespace dbarkit
