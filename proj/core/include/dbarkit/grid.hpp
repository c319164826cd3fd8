#pragma once

#include <complex>
#include <cstddef>

namespace dbarkit {

using cplx = std::complex<double>;

/// Cell-centered uniform grid on the square [-R, R]^2.
///
/// Nodes are stored row-major: node (j, k) has x-index j, y-index k and
/// flat index k * n + j. Coordinates are x_j = (j - (n-1)/2) h, which equals
/// -R + (j + 1/2) h but is exactly antisymmetric in floating point.
class Grid {
 public:
  Grid(double radius, int n);

  double radius() const noexcept { return radius_; }
  int n() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }

  double coord(int j) const noexcept { return (j - 0.5 * (n_ - 1)) * h_; }
  cplx node(int j, int k) const noexcept { return {coord(j), coord(k)}; }
  cplx node(std::size_t index) const noexcept {
    return node(static_cast<int>(index % n_), static_cast<int>(index / n_));
  }
  std::size_t index(int j, int k) const noexcept {
    return static_cast<std::size_t>(k) * n_ + j;
  }

  /// Ring index of a node: 0 for the outermost ring of nodes.
  int ring(std::size_t index) const noexcept;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.radius_ == b.radius_ && a.n_ == b.n_;
  }

 private:
  double radius_;
  int n_;
  double h_;
};

/// Validating constructor: radius > 0 and n >= 8, else invalid-argument.
Grid build_grid(double radius, int n);

}  // namespace dbarkit
