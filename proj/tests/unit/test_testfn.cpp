#include <gtest/gtest.h>

#include "dbarkit/dbarkit.hpp"

using namespace dbarkit;

namespace {

// Central-difference Wirtinger derivatives, independent of the closed forms.
cplx fd_dbar(const ComplexFn& f, cplx z, double h = 1e-5) {
  const cplx fx = (f(z + h) - f(z - h)) / (2 * h);
  const cplx fy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2 * h);
  return 0.5 * (fx + cplx(0, 1) * fy);
}

cplx fd_del(const ComplexFn& f, cplx z, double h = 1e-5) {
  const cplx fx = (f(z + h) - f(z - h)) / (2 * h);
  const cplx fy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2 * h);
  return 0.5 * (fx - cplx(0, 1) * fy);
}

cplx fd_lap_hat(const ComplexFn& f, cplx z, double h = 1e-3) {
  return (f(z + h) + f(z - h) + f(z + cplx(0, h)) + f(z - cplx(0, h)) - 4.0 * f(z)) / (4 * h * h);
}

void expect_consistent(const TestFunction& fn, cplx z) {
  const double scale = 1.0 + std::abs(fn.value(z));
  EXPECT_NEAR(std::abs(fn.dbar(z) - fd_dbar(fn.value, z)), 0.0, 1e-7 * scale) << z;
  EXPECT_NEAR(std::abs(fn.del(z) - fd_del(fn.value, z)), 0.0, 1e-7 * scale) << z;
  EXPECT_NEAR(std::abs(fn.lap_hat(z) - fd_lap_hat(fn.value, z)), 0.0, 1e-4 * scale) << z;
}

}  // namespace

TEST(TestFunction, PolynomialDerivatives) {
  Polynomial p{{{2, 1, cplx(1, 0.5)}, {0, 3, cplx(-0.2, 0)}, {1, 0, cplx(0, 1)}}};
  const cplx z(0.3, -0.8);
  EXPECT_NEAR(std::abs(p.value(z) - (cplx(1, 0.5) * z * z * std::conj(z) - 0.2 * std::pow(std::conj(z), 3) + cplx(0, 1) * z)), 0, 1e-15);
  EXPECT_NEAR(std::abs(p.dbar(z) - (cplx(1, 0.5) * z * z - 0.6 * std::pow(std::conj(z), 2))), 0, 1e-15);
  EXPECT_NEAR(std::abs(p.del(z) - (cplx(2, 1) * z * std::conj(z) + cplx(0, 1))), 0, 1e-15);
  EXPECT_NEAR(std::abs(p.lap_hat(z) - cplx(2, 1) * z), 0, 1e-15);
}

TEST(TestFunction, BumpClosedFormsMatchFiniteDifferences) {
  const TestFunction b = bump(cplx(0.2, -0.1), 1.7) * Polynomial{{{1, 1, 0.5}, {3, 0, cplx(0, 1)}}};
  for (cplx z : {cplx(0, 0), cplx(0.5, 0.3), cplx(-1.0, 0.6), cplx(1.2, -0.9)}) expect_consistent(b, z);
  EXPECT_EQ(b.value(cplx(3.0, 0.0)), cplx(0.0));
  EXPECT_EQ(b.dbar(cplx(0.2 + 1.7, -0.1)), cplx(0.0));
}

TEST(TestFunction, GaussianAndPlateauClosedForms) {
  const TestFunction g = gaussian_window(cplx(-0.3, 0.4), 0.7) * Polynomial::monomial(2, 1, cplx(0.5, 0.5));
  for (cplx z : {cplx(0, 0), cplx(0.5, 0.3), cplx(-1.0, 0.6)}) expect_consistent(g, z);
  const TestFunction p = plateau(1.0, 2.0);
  EXPECT_EQ(p.value(cplx(0.5, 0.5)), cplx(1.0));
  EXPECT_EQ(p.value(cplx(2.5, 0.0)), cplx(0.0));
  for (cplx z : {cplx(1.2, 0.3), cplx(-0.9, 1.1)}) expect_consistent(p, z);
}

TEST(TestFunction, SuiteIsSeededAndBounded) {
  const auto a = make_suite(7, 12, Window::bump);
  const auto b = make_suite(7, 12, Window::bump);
  const auto c = make_suite(8, 12, Window::bump);
  ASSERT_EQ(a.size(), 12u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].center, b[i].center);
    EXPECT_EQ(a[i].scale, b[i].scale);
    EXPECT_LE(std::abs(a[i].center), 0.7);
    EXPECT_GE(a[i].scale, 1.5);
    EXPECT_LE(a[i].scale, 2.5);
    for (const auto& t : a[i].poly.terms) {
      EXPECT_LE(t.k + t.l, 4);
      EXPECT_LE(std::abs(t.coeff), 1.0);
    }
    differs = differs || a[i].center != c[i].center;
  }
  EXPECT_TRUE(differs);
  for (const auto& m : make_suite(7, 12, Window::gaussian)) {
    EXPECT_EQ(m.window, Window::gaussian);
    EXPECT_GE(m.scale, 0.6);
    EXPECT_LE(m.scale, 0.8);
  }
}
