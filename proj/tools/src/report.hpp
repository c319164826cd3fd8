#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "pipelines.hpp"

namespace dbarkit::cli {

/// Serializes with sorted keys, two-space indent and %.17g floats.
std::string dump_json(const nlohmann::json& value);

/// Report document: command, resolved config, overall verdict and checks.
/// runtime_ms is left out when `with_timing` is false.
nlohmann::json report_json(const SuiteResult& result, const RunConfig& cfg, bool with_timing);

/// Writes the report into cfg.out_dir in cfg.format and returns the paths written.
std::vector<std::string> emit_report(const SuiteResult& result, const RunConfig& cfg);

}  // namespace dbarkit::cli
