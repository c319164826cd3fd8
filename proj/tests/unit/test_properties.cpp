#include <gtest/gtest.h>

#include <random>

#include "dbarkit/dbarkit.hpp"
#include "oracles.hpp"

using namespace dbarkit;

namespace {

// Random smooth field: Gaussian window times random polynomial.
Field random_field(std::mt19937_64& rng, const Grid& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const cplx c(0.5 * u(rng), 0.5 * u(rng));
  const double s = 0.7 + 0.2 * u(rng);
  Polynomial p;
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2 - k; ++l) p.terms.push_back({k, l, cplx(u(rng), u(rng))});
  }
  return sample((gaussian_window(c, s) * p).value, g);
}

}  // namespace

class SeededProperty : public testing::TestWithParam<int> {};

TEST_P(SeededProperty, ConjugationBitwise) {
  std::mt19937_64 rng(GetParam());
  const Field v = random_field(rng, build_grid(6.0, 64));
  const Field a = del(v.conj(), Scheme::spectral);
  const Field b = dbar(v, Scheme::spectral).conj();
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(a[i], b[i]);
}

TEST_P(SeededProperty, TStarIsAdjointOfT) {
  std::mt19937_64 rng(GetParam());
  const Grid g = build_grid(6.0, 128);
  const Field a = random_field(rng, g), b = random_field(rng, g);
  for (const Weight& w : {fock_weight(1.0), cosh_x_weight()}) {
    const cplx lhs = inner(apply_T(a, w), b);
    const cplx rhs = inner(a, apply_Tstar(b, w));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12 * (1.0 + std::abs(lhs))) << w.name;
  }
}

TEST_P(SeededProperty, IdentityIsQuadraticallyHomogeneous) {
  std::mt19937_64 rng(GetParam());
  const Grid g = build_grid(6.0, 64);
  const Field v = random_field(rng, g);
  const cplx c(1.7, -0.6);
  const Weight w = fock_weight(1.0);
  const auto r1 = verify_norm_identity(v, w, Scheme::spectral);
  const auto r2 = verify_norm_identity(c * v, w, Scheme::spectral);
  EXPECT_NEAR(r2.rhs / r1.rhs, std::norm(c), 1e-12);
  EXPECT_NEAR(r2.lhs / r1.lhs, std::norm(c), 1e-10);
}

TEST_P(SeededProperty, CauchyInvertsDbarOnDecayingData) {
  std::mt19937_64 rng(GetParam());
  const Grid g = build_grid(6.0, 128);
  const Field u = random_field(rng, g);
  const Field back = cauchy_transform(dbar(u, Scheme::spectral));
  EXPECT_LT((back - u).max_abs(), 1e-11 * (1.0 + u.max_abs()));
}

TEST_P(SeededProperty, DualPictureRoundTrip) {
  std::mt19937_64 rng(GetParam());
  const Grid g = build_grid(6.0, 64);
  const Field u = random_field(rng, g);
  const Weight w = fock_plus_harmonic_weight(1.0, 0.125);
  const Field back = from_dual_picture(to_dual_picture(u, w), w);
  EXPECT_LT((back - u).max_abs(), 1e-14 * (1.0 + u.max_abs()));
}

TEST_P(SeededProperty, CauchyIsLinear) {
  std::mt19937_64 rng(GetParam());
  const Grid g = build_grid(6.0, 64);
  const Field a = random_field(rng, g), b = random_field(rng, g);
  const cplx s(0.3, 2.0);
  for (CauchyRule r : {CauchyRule::punctured_fft, CauchyRule::spectral}) {
    const Field lhs = cauchy_transform(a + s * b, r);
    const Field rhs = cauchy_transform(a, r) + s * cauchy_transform(b, r);
    EXPECT_LT((lhs - rhs).max_abs(), 1e-13 * (1.0 + lhs.max_abs()));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeededProperty, testing::Values(1, 2, 3, 5, 8, 13));
