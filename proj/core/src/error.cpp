#include "dbarkit/error.hpp"

namespace dbarkit {

std::string_view error_label(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::sampling_error: return "sampling-error";
    case ErrorKind::invalid_weight: return "invalid-weight";
    case ErrorKind::weight_invariant_violation: return "weight-invariant-violation";
    case ErrorKind::dynamic_range: return "dynamic-range";
    case ErrorKind::non_finite: return "non-finite";
    case ErrorKind::config_parse: return "config-parse";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace dbarkit
