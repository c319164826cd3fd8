#include <gtest/gtest.h>

#include <cmath>

#include "dbarkit/dbarkit.hpp"
#include "oracles.hpp"

using namespace dbarkit;

namespace {

double interior_err(const Field& u, const ComplexFn& exact, double ring = 0.05) {
  const Field e = sample(exact, u.grid());
  const auto mask = interior_mask(u.grid(), ring);
  double m = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (mask[i]) m = std::max(m, std::abs(u[i] - e[i]));
  }
  return m;
}

}  // namespace

TEST(Cauchy, SpectralRuleRecoversCompactlyDecayingSolution) {
  const Field f = sample(oracle::dbar_gaussian, build_grid(6.0, 128));
  EXPECT_LT(interior_err(cauchy_transform(f), oracle::gaussian, 0.0), 1e-13);
}

TEST(Cauchy, SpectralRuleMatchesNonCompliantClosedForm) {
  const Field f = sample(oracle::gaussian, build_grid(6.0, 128));
  EXPECT_LT(interior_err(cauchy_transform(f, CauchyRule::spectral), oracle::cauchy_of_gaussian, 0.0), 1e-12);
}

TEST(Cauchy, DenseAndFftPuncturedRulesAgree) {
  const Field f = sample(oracle::gaussian, build_grid(6.0, 48));
  const Field a = cauchy_transform(f, CauchyRule::punctured_dense);
  const Field b = cauchy_transform(f, CauchyRule::punctured_fft);
  EXPECT_LT((a - b).max_abs(), 1e-12);
}

TEST(Cauchy, PuncturedRuleConverges) {
  auto err = [](int n) {
    const Field f = sample(oracle::gaussian, build_grid(6.0, n));
    return interior_err(cauchy_transform(f, CauchyRule::punctured_fft), oracle::cauchy_of_gaussian);
  };
  const double e64 = err(64), e128 = err(128);
  EXPECT_GT(std::log2(e64 / e128), 1.0);
}

TEST(Cauchy, ArbitraryTargetGrid) {
  const Field f = sample(oracle::gaussian, build_grid(4.0, 96));
  const Grid targets = build_grid(10.0, 9);
  const Field u = cauchy_transform(f, targets);
  EXPECT_EQ(u.grid(), targets);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const cplx z = targets.node(i);
    if (std::abs(z) > 5.0) EXPECT_NEAR(std::abs(u[i] - oracle::cauchy_of_gaussian(z)), 0.0, 1e-6) << z;
  }
}

TEST(Cauchy, RuleNames) {
  for (CauchyRule r : {CauchyRule::punctured_dense, CauchyRule::punctured_fft, CauchyRule::spectral}) {
    EXPECT_EQ(parse_cauchy_rule(to_string(r)), r);
  }
  EXPECT_THROW(parse_cauchy_rule("trapezoid"), Error);
}
