#pragma once

#include <string>

#include "dbarkit/field.hpp"

namespace dbarkit {

/// Discretizations of u(z) = (1/pi) integral f(w) / (z - w) dA(w).
///
/// punctured_dense: O(N^2) midpoint sum, the source cell containing the
///   target contributes 0. Reference path; arbitrary target grids.
/// punctured_fft: the same discrete sum as a zero-padded FFT convolution.
/// spectral: kernel truncated at the box diameter D with exact Fourier symbol
///   -2i (1 - J0(|k| D)) / (kx + i ky) on a padded periodic grid. Spectrally
///   accurate for smooth data negligible at the boundary.
enum class CauchyRule { punctured_dense, punctured_fft, spectral };

std::string to_string(CauchyRule rule);
CauchyRule parse_cauchy_rule(const std::string& name);

/// Evaluates the transform on the source grid.
Field cauchy_transform(const Field& f, CauchyRule rule = CauchyRule::spectral);
/// Dense punctured rule at the nodes of an arbitrary target grid.
Field cauchy_transform(const Field& f, const Grid& targets);

}  // namespace dbarkit
