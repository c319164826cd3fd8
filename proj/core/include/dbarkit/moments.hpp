#pragma once

#include <vector>

#include "dbarkit/field.hpp"

namespace dbarkit {

struct MomentVector {
  int J = 0;
  std::vector<cplx> m;  // m_j = integral z^j f dA
  double l1_norm = 0.0;
  double boundary_mass = 0.0;
  bool boundary_warning = false;

  double max_abs() const noexcept;
};

MomentVector moments(const Field& f, int J);

/// Bilinear pairing integral f g dA (no conjugation).
cplx pairing(const Field& f, const Field& g);

/// fhat(xi, eta) = integral e^{-i(xi x + eta y)} f dA at complex arguments.
/// dynamic-range error when R (|Im xi| + |Im eta|) > kFourierExponentLimit.
cplx fourier2(const Field& f, cplx xi, cplx eta);

inline constexpr double kFourierExponentLimit = 30.0;

struct DiagonalSeries {
  std::vector<cplx> xi;
  std::vector<cplx> values;  // fhat(xi, i xi)
  std::vector<cplx> series;  // sum_{j<=J} (-i xi)^j / j! m_j
  std::vector<double> tail_bound;  // sum_{j>J} |xi|^j / j! integral |z|^j |f|

  double max_value_abs() const noexcept;
};

/// xi in {-2, -1.9, ..., 2} plus |xi| = 1 at 16 angles.
std::vector<cplx> default_diagonal_samples();

DiagonalSeries diagonal_restriction(const Field& f, const std::vector<cplx>& xi_samples, int J);

void write_diagonal_csv(const DiagonalSeries& d, const std::string& path);

}  // namespace dbarkit
