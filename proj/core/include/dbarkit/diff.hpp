#pragma once

#include <string>

#include "dbarkit/field.hpp"

namespace dbarkit {

/// spectral: FFT differentiation, field treated as periodic on the square.
/// fd4: fourth-order centered stencils; the outer two rings are zeroed and
/// reported through Field::boundary_band.
enum class Scheme { spectral, fd4 };

inline constexpr int kFd4Band = 2;

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& name);

/// dbar = (d/dx + i d/dy) / 2
Field dbar(const Field& v, Scheme scheme);
/// del = (d/dx - i d/dy) / 2
Field del(const Field& v, Scheme scheme);
/// (d^2/dx^2 + d^2/dy^2) / 4 from second-derivative symbols or stencils.
Field laplacian_hat(const Field& v, Scheme scheme);

}  // namespace dbarkit
