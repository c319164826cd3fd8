#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dbarkit {

enum class ErrorKind {
  invalid_argument,
  sampling_error,
  invalid_weight,
  weight_invariant_violation,
  dynamic_range,
  non_finite,
  config_parse,
  io,
};

/// Stable label used in CLI messages and JSON reports ("invalid-argument", ...).
std::string_view error_label(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_label(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dbarkit
