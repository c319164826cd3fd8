#include <gtest/gtest.h>

#include "dbarkit/dbarkit.hpp"
#include "oracles.hpp"

using namespace dbarkit;

TEST(Identity, HoldsOnGaussianSuiteForCatalogWeights) {
  const Grid g = build_grid(6.0, 128);
  for (const Weight& w : {fock_weight(1.0), fock_weight(2.0), fock_plus_harmonic_weight(1.0, 0.125), cosh_x_weight()}) {
    for (const auto& m : make_suite(3, 4, Window::gaussian)) {
      const auto r = verify_norm_identity(sample(m.fn.value, g), w, Scheme::spectral);
      EXPECT_TRUE(r.passes) << w.name << " rel_err " << r.rel_err;
      EXPECT_LT(r.rel_err, 1e-10);
      EXPECT_FALSE(r.boundary_warning);
    }
  }
}

TEST(Identity, RightSideMatchesClosedForm) {
  // v = e^{-|z|^2}, fock(1): 2 integral |v|^2 (1/2) = pi/2.
  const auto r = verify_norm_identity(sample(oracle::gaussian, build_grid(6.0, 128)), fock_weight(1.0), Scheme::spectral);
  EXPECT_NEAR(r.rhs, oracle::pi / 2.0, 1e-12);
  EXPECT_NEAR(r.lhs, oracle::pi / 2.0, 1e-12);
}

TEST(Identity, ZeroWeightIsometry) {
  const Grid g = build_grid(6.0, 128);
  for (const auto& m : make_suite(11, 5, Window::gaussian)) {
    const auto r = verify_norm_identity(sample(m.fn.value, g), zero_weight(), Scheme::spectral);
    EXPECT_EQ(r.rhs, 0.0);
    EXPECT_LT(r.rel_err, 1e-12);
  }
}

TEST(Identity, Fd4SchemeConvergesToo) {
  const auto m = make_suite(5, 1, Window::gaussian).front();
  const auto r = verify_norm_identity(sample(m.fn.value, build_grid(6.0, 256)), fock_weight(1.0), Scheme::fd4, 1e-4);
  EXPECT_TRUE(r.passes) << r.rel_err;
}

TEST(Identity, BoundaryWarningForWideData) {
  const Field v = sample([](cplx z) { return std::exp(-0.2 * std::norm(z)); }, build_grid(6.0, 64));
  EXPECT_TRUE(verify_norm_identity(v, fock_weight(1.0), Scheme::spectral).boundary_warning);
}

TEST(DualPicture, RoundTripAndOverflow) {
  const Grid g = build_grid(6.0, 64);
  const Weight w = fock_weight(1.0);
  const Field u = sample([](cplx z) { return z * oracle::gaussian(z); }, g);
  const Field back = from_dual_picture(to_dual_picture(u, w), w);
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(std::abs(back[i] - u[i]), 0.0, 1e-15 * (1 + std::abs(u[i])));
  const Field big = sample([](cplx) { return cplx(1e300); }, g);
  try {
    to_dual_picture(big, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dynamic_range);
  }
}

TEST(KernelCheck, EntireFunctionsLieInTheKernel) {
  const Grid g = build_grid(6.0, 256);
  const Weight w = fock_weight(1.0);
  const auto good = kernel_check([](cplx z) { return z * z; }, w, g);
  EXPECT_LT(good.residual, 1e-5 * good.k_max);
  const auto bad = kernel_check([](cplx z) { return std::conj(z); }, w, g);
  EXPECT_GT(bad.residual, 0.1 * bad.k_max);
}
