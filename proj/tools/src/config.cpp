#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dbarkit::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw Error(ErrorKind::config_parse, "key '" + key + "': " + what);
}

void reject_unknown(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) fail(prefix + key, "unknown key");
  }
}

const json& object_at(const json& obj, const std::string& key, const std::string& path) {
  const json& v = obj.at(key);
  if (!v.is_object()) fail(path, "expected an object");
  return v;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string text(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

template <class Fn>
auto guarded(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::config_parse) throw;
    fail(path, e.what());
  }
}

Weight parse_weight(const json& v) {
  if (v.is_string()) return guarded("weight", [&] { return parse_weight_spec(v.get<std::string>()); });
  if (!v.is_object()) fail("weight", "expected a string spec or an object");
  if (!v.contains("name")) fail("weight.name", "missing");
  const std::string name = text(v.at("name"), "weight.name");
  std::map<std::string, double> params;
  for (const auto& [key, value] : v.items()) {
    if (key != "name") params[key] = number(value, "weight." + key);
  }
  return guarded("weight", [&] { return custom_weight(name, params); });
}

}  // namespace

std::string to_string(ReportFormat f) { return f == ReportFormat::json ? "json" : "csv"; }

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw Error(ErrorKind::invalid_argument, "unknown report format '" + name + "'");
}

std::string to_string(Window w) { return w == Window::bump ? "bump" : "gaussian"; }

Window parse_window(const std::string& name) {
  if (name == "bump") return Window::bump;
  if (name == "gaussian") return Window::gaussian;
  throw Error(ErrorKind::invalid_argument, "unknown suite window '" + name + "'");
}

RunConfig parse_config(const std::string& source) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::config_parse, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("<root>", "expected an object");
  reject_unknown(root, "", {"grid", "weight", "scheme", "tolerances", "seed", "output", "suite"});

  RunConfig cfg;
  if (root.contains("grid")) {
    const json& g = object_at(root, "grid", "grid");
    reject_unknown(g, "grid.", {"radius", "n"});
    if (g.contains("radius")) cfg.radius = number(g.at("radius"), "grid.radius");
    if (g.contains("n")) cfg.n = static_cast<int>(integer(g.at("n"), "grid.n"));
  }
  if (root.contains("weight")) cfg.weight = parse_weight(root.at("weight"));
  if (root.contains("scheme")) {
    cfg.scheme = guarded("scheme", [&] { return parse_scheme(text(root.at("scheme"), "scheme")); });
  }
  if (root.contains("tolerances")) {
    const json& t = object_at(root, "tolerances", "tolerances");
    reject_unknown(t, "tolerances.", {"identity_rel", "moment_abs", "bound_slack"});
    if (t.contains("identity_rel")) cfg.identity_rel = number(t.at("identity_rel"), "tolerances.identity_rel");
    if (t.contains("moment_abs")) cfg.moment_abs = number(t.at("moment_abs"), "tolerances.moment_abs");
    if (t.contains("bound_slack")) cfg.bound_slack = number(t.at("bound_slack"), "tolerances.bound_slack");
  }
  if (root.contains("seed")) {
    const std::int64_t s = integer(root.at("seed"), "seed");
    if (s < 0) fail("seed", "must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  if (root.contains("output")) {
    const json& o = object_at(root, "output", "output");
    reject_unknown(o, "output.", {"dir", "format"});
    if (o.contains("dir")) cfg.out_dir = text(o.at("dir"), "output.dir");
    if (o.contains("format")) {
      cfg.format = guarded("output.format", [&] { return parse_format(text(o.at("format"), "output.format")); });
    }
  }
  if (root.contains("suite")) {
    const json& s = object_at(root, "suite", "suite");
    reject_unknown(s, "suite.", {"window", "size"});
    if (s.contains("window")) {
      cfg.window = guarded("suite.window", [&] { return parse_window(text(s.at("window"), "suite.window")); });
    }
    if (s.contains("size")) cfg.suite_size = static_cast<int>(integer(s.at("size"), "suite.size"));
  }
  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate_config(const RunConfig& cfg) {
  if (!(cfg.radius > 0.0)) fail("grid.radius", "must be positive");
  if (cfg.n < 8) fail("grid.n", "must be >= 8");
  if (!(cfg.identity_rel > 0.0)) fail("tolerances.identity_rel", "must be positive");
  if (!(cfg.moment_abs > 0.0)) fail("tolerances.moment_abs", "must be positive");
  if (!(cfg.bound_slack > 0.0)) fail("tolerances.bound_slack", "must be positive");
  if (cfg.suite_size < 1) fail("suite.size", "must be >= 1");
  if (cfg.out_dir.empty()) fail("output.dir", "must not be empty");
}

nlohmann::json to_json(const RunConfig& cfg) {
  json weight = {{"name", cfg.weight.name}};
  for (const auto& [k, v] : cfg.weight.params) weight[k] = v;
  return {
      {"grid", {{"radius", cfg.radius}, {"n", cfg.n}}},
      {"weight", weight},
      {"scheme", to_string(cfg.scheme)},
      {"tolerances",
       {{"identity_rel", cfg.identity_rel}, {"moment_abs", cfg.moment_abs}, {"bound_slack", cfg.bound_slack}}},
      {"seed", cfg.seed},
      {"output", {{"dir", cfg.out_dir}, {"format", to_string(cfg.format)}}},
      {"suite", {{"window", to_string(cfg.window)}, {"size", cfg.suite_size}}},
  };
}

}  // namespace dbarkit::cli
