#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "config.hpp"
#include "pipelines.hpp"
#include "report.hpp"

int main(int argc, char** argv) {
  using namespace dbarkit;
  CLI::App app{"Weighted dbar-equation verification harness"};
  std::string command, config_path, weight, scheme, out_dir;
  std::optional<int> grid_n;
  std::optional<double> grid_radius;
  std::optional<std::uint64_t> seed;
  bool sequential = false;
  app.add_option("command", command, "Pipeline to run")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--grid-n", grid_n, "Nodes per axis");
  app.add_option("--grid-radius", grid_radius, "Half-width R of the square");
  app.add_option("--weight", weight, "Weight spec, e.g. fock:t=2");
  app.add_option("--scheme", scheme, "spectral or fd4");
  app.add_option("--out", out_dir, "Report directory");
  app.add_option("--seed", seed, "Suite seed");
  app.add_flag("--sequential", sequential, "Reproducible reports (no timings)");
  CLI11_PARSE(app, argc, argv);

  try {
    cli::RunConfig cfg = config_path.empty() ? cli::RunConfig{} : cli::load_config(config_path);
    if (grid_n) cfg.n = *grid_n;
    if (grid_radius) cfg.radius = *grid_radius;
    if (!weight.empty()) cfg.weight = parse_weight_spec(weight);
    if (!scheme.empty()) cfg.scheme = parse_scheme(scheme);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (seed) cfg.seed = *seed;
    cfg.sequential = sequential;
    cli::validate_config(cfg);

    const cli::SuiteResult result = cli::run(cfg, command);
    for (const auto& c : result.checks) {
      std::printf("%-5s %-34s measured=%.6g bound=%.6g%s\n", c.passes ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                  c.bound, c.informational ? " (informational)" : "");
    }
    for (const auto& path : cli::emit_report(result, cfg)) std::printf("wrote %s\n", path.c_str());
    std::printf("overall: %s\n", result.overall() ? "PASS" : "FAIL");
    return result.overall() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
