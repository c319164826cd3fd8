#pragma once

#include <vector>

#include "dbarkit/field.hpp"

namespace dbarkit {

/// Outer ring treated as the truncation margin of the square.
inline constexpr double kBoundaryRing = 0.05;
/// Relative magnitude above which data is considered non-negligible there.
inline constexpr double kBoundaryMassThreshold = 1e-14;

enum class QuadratureRule { midpoint };

struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::midpoint;
  double total_weight(const Grid& grid) const noexcept {
    return 4.0 * grid.radius() * grid.radius();
  }
};

/// Midpoint rule h^2 * sum(values), compensated summation.
cplx integrate(const Field& v);
/// As `integrate`, restricted to nodes with mask[i] set.
cplx integrate(const Field& v, const std::vector<bool>& mask);

/// integral of |v|^2 w dA; w must be strictly positive (else invalid-weight).
double weighted_norm_sq(const Field& v, const Field& w);
double weighted_norm_sq(const Field& v, const Field& w, const std::vector<bool>& mask);
double norm_sq(const Field& v);
double l1_norm(const Field& v);

/// Nodes outside the outer ring of relative width `ring` and outside the
/// field's finite-difference band.
std::vector<bool> interior_mask(const Grid& grid, double ring = kBoundaryRing, int band = 0);
std::vector<bool> disk_mask(const Grid& grid, double radius);
/// Inscribed disk |z| <= (1 - ring) R used for growing-weight integrals.
std::vector<bool> weight_window(const Grid& grid, double ring = kBoundaryRing);

/// max |v| on the outer ring divided by max |v| (0 for the zero field).
double boundary_mass(const Field& v, double ring = kBoundaryRing);

}  // namespace dbarkit
