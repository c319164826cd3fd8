#pragma once

#include <string>

namespace dbarkit {

/// Which right-hand side of the one-dimensional Bargmann-type identity
///   integral |fhat(xi)|^2 e^{-beta |Im xi|^2} dA(xi) = (2 pi^{3/2} / sqrt(beta)) * RHS
/// matches the left side: RHS = integral |f| e^{x^2/beta} dx (literal) or
/// integral |f|^2 e^{x^2/beta} dx (quadratic).
enum class BargmannReading { literal, quadratic, both, neither };

std::string to_string(BargmannReading r);

struct BargmannReport {
  double beta = 0.0;
  double a = 0.0;
  double amplitude = 0.0;
  double constant = 0.0;  // 2 pi^{3/2} / sqrt(beta)
  double lhs = 0.0;
  double rhs_literal = 0.0;    // constant * integral |f| e^{x^2/beta}
  double rhs_quadratic = 0.0;  // constant * integral |f|^2 e^{x^2/beta}
  double rel_err_literal = 0.0;
  double rel_err_quadratic = 0.0;
  BargmannReading match = BargmannReading::neither;
  double truncation_mass = 0.0;
  bool truncation_warning = false;
};

struct BargmannOptions {
  double match_tol = 1e-4;
  double truncation_tol = 1e-12;
  double plane_step = 0.05;  // quadrature spacing in the xi-plane
};

/// Probes f(x) = amplitude * e^{-a x^2}; requires a > 1/beta. fhat is computed
/// by one-dimensional quadrature of f and integrated over a truncated
/// xi-plane; both right-hand sides by quadrature on the line.
BargmannReport bargmann_probe(double beta, double a, double amplitude = 1.0,
                              const BargmannOptions& opts = {});

}  // namespace dbarkit
