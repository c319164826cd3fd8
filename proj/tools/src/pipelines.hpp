#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace dbarkit::cli {

struct CheckRecord {
  std::string name;
  bool passes = false;
  double measured = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  /// Expected-violation checks; reported but excluded from the overall verdict.
  bool informational = false;
  nlohmann::json details = nlohmann::json::object();
};

struct SuiteResult {
  std::string command;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, Field>> fields;
  std::optional<DiagonalSeries> diagonal;

  bool overall() const noexcept;
};

const std::vector<std::string>& commands();

/// Runs the named pipeline; invalid-argument for an unknown command.
SuiteResult run(const RunConfig& cfg, const std::string& command);

}  // namespace dbarkit::cli
