#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "dbarkit/dbarkit.hpp"

namespace dbarkit::cli {

enum class ReportFormat { json, csv };

struct RunConfig {
  double radius = 6.0;
  int n = 256;
  Weight weight = fock_weight(1.0);
  Scheme scheme = Scheme::spectral;
  double identity_rel = 1e-6;
  double moment_abs = 1e-8;
  double bound_slack = 0.01;
  std::uint64_t seed = 42;
  std::string out_dir = "dbarkit-out";
  ReportFormat format = ReportFormat::json;
  Window window = Window::gaussian;
  int suite_size = 20;
  bool sequential = false;
};

/// Parses a JSON config; absent keys keep their defaults. config-parse error
/// naming the key on unknown keys, wrong types or invalid values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Checks the RunConfig invariants (tolerances > 0, n >= 8, suite size >= 1).
void validate_config(const RunConfig& cfg);

/// Resolved config in the input schema; parse_config(to_json(c)) == c.
nlohmann::json to_json(const RunConfig& cfg);

std::string to_string(ReportFormat f);
ReportFormat parse_format(const std::string& name);
std::string to_string(Window w);
Window parse_window(const std::string& name);

}  // namespace dbarkit::cli
