#include "dbarkit/solver.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "dbarkit/moments.hpp"
#include "dbarkit/quadrature.hpp"
#include "sum.hpp"

namespace dbarkit {

namespace {

// Largest phi admitted where e^{+-2 phi} enters an integrand.
constexpr double kMaxExponent = 700.0;

// h^2 sum over mask of |v|^2 e^{s phi} * factor(z).
template <class Factor>
double exp_weighted(const Field& v, const Weight& w, double s, const std::vector<bool>& mask, Factor factor) {
  const Grid& g = v.grid();
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!mask[i]) continue;
    const cplx z = g.node(i);
    const double e = std::exp(s * w.phi(z));
    if (!std::isfinite(e)) {
      throw Error(ErrorKind::dynamic_range, "e^{" + std::to_string(s) + " phi} overflows at node " + std::to_string(i));
    }
    acc.add(std::norm(v[i]) * e * factor(z));
  }
  const double h = g.spacing();
  const double total = h * h * acc.value();
  if (!std::isfinite(total)) throw Error(ErrorKind::dynamic_range, "weighted integral overflows");
  return total;
}

void check_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw Error(ErrorKind::invalid_argument, "fields live on different grids");
}

}  // namespace

SolutionReport solve_dbar(const Field& f, const Weight& w, const SolveOptions& opts) {
  if (opts.moment_count < 0) throw Error(ErrorKind::invalid_argument, "moment count must be >= 0");
  if (!(opts.moment_tol > 0.0)) throw Error(ErrorKind::invalid_argument, "moment tolerance must be positive");
  if (!(opts.bound_slack >= 0.0)) throw Error(ErrorKind::invalid_argument, "bound slack must be >= 0");
  const Grid& g = f.grid();
  if (w.name != "zero") validate_weight(w, g);

  SolutionReport r{.u = cauchy_transform(f, opts.rule)};
  r.boundary_mass = boundary_mass(f);
  r.u_max = r.u.max_abs();

  const Field du = dbar(r.u, opts.residual_scheme);
  const auto inner_nodes = interior_mask(g, opts.ring, du.boundary_band());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (inner_nodes[i]) r.residual_inf = std::max(r.residual_inf, std::abs(du[i] - f[i]));
  }

  const MomentVector m = moments(f, opts.moment_count);
  r.moment_max = m.max_abs();
  r.moment_scale = m.l1_norm;
  r.non_orthogonal = r.moment_max > opts.moment_tol * r.moment_scale;

  const auto window = weight_window(g, opts.ring);
  r.h2_lhs = 2.0 * exp_weighted(r.u, w, 2.0, window, [&](cplx z) { return w.lap_hat_phi(z); });
  r.h2_rhs = exp_weighted(f, w, 2.0, window, [](cplx) { return 1.0; });
  r.h2_passes = r.h2_lhs <= (1.0 + opts.bound_slack) * r.h2_rhs;

  const double fmax = f.max_abs();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (fmax > 0.0 && std::abs(f[i]) >= 1e-10 * fmax) r.support_radius = std::max(r.support_radius, std::abs(g.node(i)));
  }
  const double cut = r.support_radius + 2.0 * g.spacing();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(g.node(i)) > cut) r.tail_mass = std::max(r.tail_mass, std::abs(r.u[i]));
  }
  return r;
}

FockBergmanProjector::FockBergmanProjector(const Grid& grid, double t, int degree)
    : grid_(grid), t_(t), degree_(degree) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::invalid_argument, "Fock parameter t must be positive");
  if (degree < 0) throw Error(ErrorKind::invalid_argument, "projector degree must be >= 0");
  if (t * grid.radius() * grid.radius() > kMaxExponent) {
    throw Error(ErrorKind::dynamic_range, "e^{phi} overflows on the grid corners");
  }
  const auto rows = static_cast<Eigen::Index>(grid.size());
  const Eigen::Index cols = degree + 1;
  if (cols > rows) throw Error(ErrorKind::invalid_argument, "projector degree exceeds grid size");

  Eigen::MatrixXcd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const cplx z = grid.node(static_cast<std::size_t>(i));
    cplx p = std::exp(-0.5 * t * std::norm(z));
    for (Eigen::Index j = 0; j < cols; ++j) {
      a(i, j) = p;
      p *= z;
    }
  }
  for (Eigen::Index j = 0; j < cols; ++j) a.col(j).normalize();
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
  basis_.assign(q.data(), q.data() + q.size());
}

Field FockBergmanProjector::project(const Field& u) const {
  check_same_grid(u.grid(), grid_);
  const auto rows = static_cast<Eigen::Index>(grid_.size());
  const Eigen::Map<const Eigen::MatrixXcd> q(basis_.data(), rows, degree_ + 1);
  Eigen::VectorXcd v(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    v(i) = u[static_cast<std::size_t>(i)] * std::exp(-0.5 * t_ * std::norm(grid_.node(static_cast<std::size_t>(i))));
  }
  const Eigen::VectorXcd c = q.adjoint() * v;
  const Eigen::VectorXcd pv = q * c;
  std::vector<cplx> out(grid_.size());
  for (Eigen::Index i = 0; i < rows; ++i) {
    out[static_cast<std::size_t>(i)] = pv(i) * std::exp(0.5 * t_ * std::norm(grid_.node(static_cast<std::size_t>(i))));
  }
  return Field(grid_, std::move(out));
}

Field fock_bergman_project(const Field& u, double t) { return FockBergmanProjector(u.grid(), t).project(u); }

BoundReport check_hormander_bound(const Field& f, const Weight& w, double slack) {
  if (!is_fock(w)) {
    throw Error(ErrorKind::invalid_argument, "the minimal-solution bound is implemented for Fock weights only");
  }
  return check_hormander_bound(f, FockBergmanProjector(f.grid(), w.params.at("t")), slack);
}

BoundReport check_hormander_bound(const Field& f, const FockBergmanProjector& proj, double slack) {
  if (!(slack >= 0.0)) throw Error(ErrorKind::invalid_argument, "bound slack must be >= 0");
  check_same_grid(f.grid(), proj.grid());
  const Weight w = fock_weight(proj.t());
  const Field u = cauchy_transform(f, CauchyRule::spectral);
  const Field pu = proj.project(u);
  BoundReport r{.u_min = u - pu};

  const std::vector<bool> all(f.size(), true);
  r.h1_lhs = exp_weighted(r.u_min, w, -2.0, all, [](cplx) { return 1.0; });
  r.h1_rhs = 0.5 * exp_weighted(f, w, -2.0, all, [&](cplx z) { return 1.0 / w.lap_hat_phi(z); });
  r.passes = r.h1_lhs <= (1.0 + slack) * r.h1_rhs;

  const double pu_norm = exp_weighted(pu, w, -2.0, all, [](cplx) { return 1.0; });
  const double diff = exp_weighted(proj.project(pu) - pu, w, -2.0, all, [](cplx) { return 1.0; });
  r.idempotence_err = pu_norm > 0.0 ? std::sqrt(diff / pu_norm) : std::sqrt(diff);
  return r;
}

GrowthTable uniqueness_probe(const Field& u, const Weight& w, std::optional<int> degree) {
  const Grid& g = u.grid();
  if (degree && *degree < 0) throw Error(ErrorKind::invalid_argument, "perturbation degree must be >= 0");
  const CurvatureReport curv = curvature_margin(w, g);
  if (!curv.passes) {
    throw Error(ErrorKind::weight_invariant_violation,
                "weight '" + w.name + "' fails the curvature condition (min margin " + std::to_string(curv.min_margin) + ")");
  }
  const Field perturbed = degree ? u + sample([p = *degree](cplx z) { return std::pow(z, p); }, g) : u;
  const Field diff = perturbed - u;

  GrowthTable t;
  const int last = static_cast<int>(std::floor(g.radius()));
  for (int r = 1; r <= last; ++r) {
    t.radii.push_back(r);
    t.energies.push_back(exp_weighted(diff, w, 2.0, disk_mask(g, r), [&](cplx z) { return w.lap_hat_phi(z); }));
  }
  for (std::size_t i = 1; i < t.energies.size(); ++i) {
    if (t.energies[i] < t.energies[i - 1]) t.monotone = false;
  }
  if (!t.energies.empty() && t.energies.front() > 0.0) t.ratio = t.energies.back() / t.energies.front();
  return t;
}

}  // namespace dbarkit
