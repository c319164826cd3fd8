#include "dbarkit/quadrature.hpp"

#include <cmath>

#include "sum.hpp"

namespace dbarkit {

cplx integrate(const Field& v) {
  detail::ComplexCompensatedSum acc;
  for (const cplx& z : v.values()) acc.add(z);
  const double h = v.grid().spacing();
  return h * h * acc.value();
}

cplx integrate(const Field& v, const std::vector<bool>& mask) {
  if (mask.size() != v.size()) throw Error(ErrorKind::invalid_argument, "mask size mismatch");
  detail::ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mask[i]) acc.add(v[i]);
  }
  const double h = v.grid().spacing();
  return h * h * acc.value();
}

namespace {

void check_weight_field(const Field& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i].real() > 0.0) || w[i].imag() != 0.0) {
      throw Error(ErrorKind::invalid_weight, "weight is not strictly positive at node " + std::to_string(i));
    }
  }
}

}  // namespace

double weighted_norm_sq(const Field& v, const Field& w) {
  return weighted_norm_sq(v, w, std::vector<bool>(v.size(), true));
}

double weighted_norm_sq(const Field& v, const Field& w, const std::vector<bool>& mask) {
  if (!(v.grid() == w.grid())) throw Error(ErrorKind::invalid_argument, "fields live on different grids");
  if (mask.size() != v.size()) throw Error(ErrorKind::invalid_argument, "mask size mismatch");
  check_weight_field(w);
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mask[i]) acc.add(std::norm(v[i]) * w[i].real());
  }
  const double h = v.grid().spacing();
  const double total = h * h * acc.value();
  if (!std::isfinite(total)) throw Error(ErrorKind::dynamic_range, "weighted norm overflows");
  return total;
}

double norm_sq(const Field& v) {
  detail::CompensatedSum acc;
  for (const cplx& z : v.values()) acc.add(std::norm(z));
  const double h = v.grid().spacing();
  return h * h * acc.value();
}

double l1_norm(const Field& v) {
  detail::CompensatedSum acc;
  for (const cplx& z : v.values()) acc.add(std::abs(z));
  const double h = v.grid().spacing();
  return h * h * acc.value();
}

std::vector<bool> interior_mask(const Grid& grid, double ring, int band) {
  std::vector<bool> mask(grid.size());
  const double limit = (1.0 - ring) * grid.radius();
  for (std::size_t i = 0; i < mask.size(); ++i) {
    const cplx z = grid.node(i);
    mask[i] = std::abs(z.real()) <= limit && std::abs(z.imag()) <= limit && grid.ring(i) >= band;
  }
  return mask;
}

std::vector<bool> disk_mask(const Grid& grid, double radius) {
  std::vector<bool> mask(grid.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = std::abs(grid.node(i)) <= radius;
  return mask;
}

std::vector<bool> weight_window(const Grid& grid, double ring) {
  return disk_mask(grid, (1.0 - ring) * grid.radius());
}

double boundary_mass(const Field& v, double ring) {
  const double peak = v.max_abs();
  if (peak == 0.0) return 0.0;
  const auto inner = interior_mask(v.grid(), ring);
  double outer = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!inner[i]) outer = std::max(outer, std::abs(v[i]));
  }
  return outer / peak;
}

}  // namespace dbarkit
