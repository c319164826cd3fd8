#include <gtest/gtest.h>

#include "dbarkit/dbarkit.hpp"
#include "oracles.hpp"

using namespace dbarkit;

TEST(Solver, SharpnessDatumAttainsConstant) {
  const Field f = sample(oracle::dbar_gaussian, build_grid(6.0, 256));
  const auto r = solve_dbar(f, fock_weight(1.0));
  EXPECT_NEAR(r.h2_lhs, oracle::sharpness_value, 1e-6);
  EXPECT_NEAR(r.h2_rhs, oracle::sharpness_value, 1e-6);
  EXPECT_FALSE(r.non_orthogonal);
  EXPECT_TRUE(r.h2_passes);
}

TEST(Solver, CompliantSuiteSatisfiesGrowingBound) {
  const Grid g = build_grid(6.0, 128);
  for (const auto& m : make_suite(9, 5, Window::gaussian)) {
    const Field f = sample(m.fn.dbar, g);
    const auto r = solve_dbar(f, fock_weight(1.0));
    EXPECT_FALSE(r.non_orthogonal) << r.moment_max / r.moment_scale;
    EXPECT_TRUE(r.h2_passes) << r.h2_lhs / r.h2_rhs;
    EXPECT_LT(r.tail_mass, 1e-6 * r.u_max);
    EXPECT_LT(r.residual_inf, 1e-2 * f.max_abs());
    SolveOptions spectral;
    spectral.residual_scheme = Scheme::spectral;
    EXPECT_LT(solve_dbar(f, fock_weight(1.0), spectral).residual_inf, 1e-10 * f.max_abs());
  }
}

TEST(Solver, GaussianDatumIsFlaggedNonOrthogonal) {
  const auto r = solve_dbar(sample(oracle::gaussian, build_grid(6.0, 128)), fock_weight(1.0));
  EXPECT_TRUE(r.non_orthogonal);
  EXPECT_NEAR(r.moment_max, oracle::pi, 1e-10);
  EXPECT_GT(r.tail_mass, 1e-2);
}

TEST(Solver, RejectsBadOptionsAndWeights) {
  const Field f = sample(oracle::dbar_gaussian, build_grid(6.0, 32));
  SolveOptions bad;
  bad.moment_count = -1;
  EXPECT_THROW(solve_dbar(f, fock_weight(1.0), bad), Error);
  try {
    solve_dbar(f, quartic_weight());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::weight_invariant_violation);
  }
}

TEST(Projector, ReproducesEntireFunctionsAndIsIdempotent) {
  const Grid g = build_grid(6.0, 64);
  const FockBergmanProjector p(g, 1.0, 32);
  const Field z2 = sample([](cplx z) { return z * z - 0.5; }, g);
  const Field pz2 = p.project(z2);
  const Weight w = fock_weight(1.0);
  const Field e = w.sample_exp_phi(g, -1.0);
  EXPECT_LT(((pz2 - z2) * e).max_abs(), 1e-12);
  const Field u = sample([](cplx z) { return std::conj(z) * oracle::gaussian(z - 0.5); }, g);
  const Field pu = p.project(u);
  EXPECT_LT(((p.project(pu) - pu) * e).max_abs(), 1e-12 * (pu * e).max_abs() + 1e-15);
}

TEST(Projector, ResidualIsOrthogonalToBasis) {
  const Grid g = build_grid(6.0, 64);
  const FockBergmanProjector p(g, 1.0, 16);
  const Field u = sample([](cplx z) { return std::conj(z) * std::conj(z) * oracle::gaussian(z); }, g);
  const Field r = u - p.project(u);
  const Field e2 = fock_weight(1.0).sample_exp_phi(g, -2.0);
  for (int j = 0; j <= 5; ++j) {
    const Field zj = sample([j](cplx z) { return std::pow(z, j); }, g);
    EXPECT_LT(std::abs(integrate(r * zj.conj() * e2)), 1e-12);
  }
}

TEST(Projector, GuardsAndErrors) {
  EXPECT_THROW(FockBergmanProjector(build_grid(6.0, 32), -1.0), Error);
  try {
    FockBergmanProjector(build_grid(30.0, 32), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dynamic_range);
  }
  const FockBergmanProjector p(build_grid(6.0, 32), 1.0, 8);
  EXPECT_THROW(p.project(Field::zeros(build_grid(6.0, 16))), Error);
  EXPECT_THROW(check_hormander_bound(Field::zeros(build_grid(6.0, 32)), cosh_x_weight()), Error);
}

TEST(Hormander, MinimalSolutionBoundOnGaussianSuite) {
  const Grid g = build_grid(6.0, 128);
  const FockBergmanProjector p(g, 1.0);
  for (const auto& m : make_suite(21, 3, Window::gaussian)) {
    const auto r = check_hormander_bound(sample(m.fn.dbar, g), p);
    EXPECT_TRUE(r.passes) << r.h1_lhs / r.h1_rhs;
    EXPECT_LT(r.idempotence_err, 1e-6);
  }
}

TEST(Uniqueness, EntirePerturbationsGrow) {
  const Grid g = build_grid(6.0, 128);
  const Field u = cauchy_transform(sample(oracle::dbar_gaussian, g));
  for (int p = 0; p <= 3; ++p) {
    const auto t = uniqueness_probe(u, fock_weight(1.0), p);
    ASSERT_EQ(t.radii.size(), 6u);
    EXPECT_TRUE(t.monotone);
    EXPECT_GT(t.ratio, 1e3);
  }
  // p = 0: energy on |z| < r is integral e^{|z|^2} (1/2) = (pi/2)(e^{r^2} - 1) in the continuum.
  const auto t0 = uniqueness_probe(u, fock_weight(1.0), 0);
  EXPECT_NEAR(t0.energies[0] / (oracle::pi / 2.0 * std::expm1(1.0)), 1.0, 0.05);
  const auto none = uniqueness_probe(u, fock_weight(1.0), std::nullopt);
  EXPECT_EQ(none.ratio, 0.0);
  EXPECT_THROW(uniqueness_probe(u, quartic_weight(), 1), Error);
}
