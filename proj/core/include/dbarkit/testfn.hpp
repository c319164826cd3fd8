#pragma once

#include <cstdint>
#include <vector>

#include "dbarkit/field.hpp"

namespace dbarkit {

/// Closed-form test function with exact dbar, del and Lap-hat.
struct TestFunction {
  ComplexFn value;
  ComplexFn dbar;
  ComplexFn del;
  ComplexFn lap_hat;
  /// Radius about the origin outside which the function is zero or negligible.
  double extent = 0.0;
};

/// Polynomial sum a_kl z^k zbar^l.
struct Polynomial {
  struct Term {
    int k;
    int l;
    cplx coeff;
  };
  std::vector<Term> terms;

  cplx value(cplx z) const;
  cplx dbar(cplx z) const;
  cplx del(cplx z) const;
  cplx lap_hat(cplx z) const;

  static Polynomial monomial(int k, int l, cplx coeff = 1.0);
};

enum class Window { bump, gaussian };

/// exp(1/(|z-c|^2/rho^2 - 1)) inside |z-c| < rho, zero outside.
TestFunction bump(cplx center, double rho);
/// exp(-|z-c|^2/sigma^2)
TestFunction gaussian_window(cplx center, double sigma);
/// Smooth radial cutoff, 1 on |z| <= inner, 0 on |z| >= outer.
TestFunction plateau(double inner, double outer);

TestFunction operator*(const TestFunction& window, const Polynomial& p);

struct SuiteMember {
  TestFunction fn;
  Window window;
  cplx center;
  double scale;  // rho for bumps, sigma for gaussians
  Polynomial poly;
};

/// Seeded suite of window * polynomial fields: centers within 0.7 of the
/// origin, rho in [1.5, 2.5] or sigma in [0.6, 0.8], polynomials in z, zbar of
/// total degree <= 4 with coefficients drawn uniformly in the unit disk.
std::vector<SuiteMember> make_suite(std::uint64_t seed, int count, Window window);

}  // namespace dbarkit
