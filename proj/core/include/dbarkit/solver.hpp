#pragma once

#include <optional>
#include <vector>

#include "dbarkit/cauchy.hpp"
#include "dbarkit/diff.hpp"
#include "dbarkit/weight.hpp"

namespace dbarkit {

struct SolveOptions {
  CauchyRule rule = CauchyRule::spectral;
  int moment_count = 10;          // moments m_0 .. m_J
  double moment_tol = 1e-8;       // relative to ||f||_L1
  double bound_slack = 0.01;
  Scheme residual_scheme = Scheme::fd4;
  double ring = 0.05;
};

struct SolutionReport {
  Field u;
  double residual_inf = 0.0;  // ||dbar u - f||_inf over interior nodes
  double moment_max = 0.0;    // max |m_j|, j <= J
  double moment_scale = 0.0;  // ||f||_L1 on the grid
  bool non_orthogonal = false;
  double h2_lhs = 0.0;  // 2 integral |u|^2 e^{2phi} Lap-hat phi over the weight window
  double h2_rhs = 0.0;  // integral |f|^2 e^{2phi} over the weight window
  bool h2_passes = false;
  double tail_mass = 0.0;     // max |u| beyond the datum's support radius
  double support_radius = 0.0;
  double u_max = 0.0;
  double boundary_mass = 0.0;  // of f
};

/// Solves dbar u = f with u the Cauchy transform of f and evaluates the
/// growing-weight bound with constant 1/2. When the datum fails the moment
/// test the non_orthogonal flag is set and h2_passes is informational.
SolutionReport solve_dbar(const Field& f, const Weight& w, const SolveOptions& opts = {});

/// Orthogonal projection of L^2(e^{-2 phi}) onto entire functions for the
/// Fock weight phi = t|z|^2/2, realized on the grid as the discrete projection
/// onto span{z^j e^{-phi} : j <= degree} in the midpoint inner product.
class FockBergmanProjector {
 public:
  explicit FockBergmanProjector(const Grid& grid, double t = 1.0, int degree = 64);

  Field project(const Field& u) const;
  const Grid& grid() const noexcept { return grid_; }
  double t() const noexcept { return t_; }
  int degree() const noexcept { return degree_; }

 private:
  Grid grid_;
  double t_;
  int degree_;
  std::vector<cplx> basis_;  // column-major N x (degree+1), orthonormal in l^2
};

Field fock_bergman_project(const Field& u, double t = 1.0);

struct BoundReport {
  double h1_lhs = 0.0;  // integral |u_min|^2 e^{-2phi}
  double h1_rhs = 0.0;  // 1/2 integral |f|^2 e^{-2phi} / Lap-hat phi
  bool passes = false;
  double idempotence_err = 0.0;  // ||P(Pu) - Pu|| / ||Pu|| in L^2(e^{-2phi})
  Field u_min;
};

/// Hormander bound for the minimal solution u - P u, Fock weights only.
BoundReport check_hormander_bound(const Field& f, const Weight& w, double slack = 0.01);
BoundReport check_hormander_bound(const Field& f, const FockBergmanProjector& proj,
                                  double slack = 0.01);

struct GrowthTable {
  std::vector<double> radii;
  std::vector<double> energies;  // integral over |z| < r of |u' - u|^2 e^{2phi} Lap-hat phi
  double ratio = 0.0;            // last / first (0 when the first entry is 0)
  bool monotone = true;
};

/// Perturbs u by z^degree (no perturbation for nullopt) and tabulates the
/// partial weighted energies of the difference on disks r = 1, 2, ..., R.
/// Requires the weight to satisfy the curvature condition.
GrowthTable uniqueness_probe(const Field& u, const Weight& w, std::optional<int> degree);

}  // namespace dbarkit
