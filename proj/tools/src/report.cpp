#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace dbarkit::cli {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump(const json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(key).dump() + ": ";
        dump(item, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += inner;
        dump(v[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw Error(ErrorKind::io, "write to '" + path + "' failed");
}

}  // namespace

std::string dump_json(const json& value) {
  std::string out;
  dump(value, 0, out);
  out += "\n";
  return out;
}

json report_json(const SuiteResult& result, const RunConfig& cfg, bool with_timing) {
  json checks = json::array();
  for (const auto& c : result.checks) {
    json item = {{"name", c.name},
                 {"passes", c.passes},
                 {"measured", c.measured},
                 {"bound", c.bound},
                 {"tolerance", c.tolerance},
                 {"informational", c.informational},
                 {"details", c.details}};
    if (with_timing) item["runtime_ms"] = c.runtime_ms;
    checks.push_back(item);
  }
  return {{"command", result.command}, {"config", to_json(cfg)}, {"overall", result.overall()}, {"checks", checks}};
}

std::vector<std::string> emit_report(const SuiteResult& result, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create '" + cfg.out_dir + "': " + ec.message());
  const fs::path dir(cfg.out_dir);
  std::vector<std::string> written;

  if (cfg.format == ReportFormat::json) {
    const std::string path = (dir / (result.command + ".json")).string();
    write_file(path, dump_json(report_json(result, cfg, !cfg.sequential)));
    written.push_back(path);
    return written;
  }

  std::string csv = cfg.sequential ? "name,passes,measured,bound,tolerance,informational\n"
                                   : "name,passes,measured,bound,tolerance,informational,runtime_ms\n";
  for (const auto& c : result.checks) {
    csv += c.name + "," + (c.passes ? "true" : "false") + "," + format_double(c.measured) + "," +
           format_double(c.bound) + "," + format_double(c.tolerance) + "," + (c.informational ? "true" : "false");
    if (!cfg.sequential) csv += "," + format_double(c.runtime_ms);
    csv += "\n";
  }
  const std::string summary = (dir / (result.command + ".csv")).string();
  write_file(summary, csv);
  written.push_back(summary);
  for (const auto& [name, field] : result.fields) {
    const std::string path = (dir / (result.command + "_" + name + ".csv")).string();
    write_field_csv(field, path);
    written.push_back(path);
  }
  if (result.diagonal) {
    const std::string path = (dir / (result.command + "_diagonal.csv")).string();
    write_diagonal_csv(*result.diagonal, path);
    written.push_back(path);
  }
  return written;
}

}  // namespace dbarkit::cli
