#include "dbarkit/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dbarkit/quadrature.hpp"

namespace dbarkit {

namespace {

Field sample_real(const std::function<double(cplx)>& fn, const Grid& grid) {
  return sample([&fn](cplx z) { return cplx(fn(z), 0.0); }, grid);
}

}  // namespace

Field Weight::sample_phi(const Grid& grid) const { return sample_real(phi, grid); }

Field Weight::sample_dphi(const Grid& grid) const { return sample(dphi, grid); }

Field Weight::sample_dbarphi(const Grid& grid) const {
  return sample([this](cplx z) { return dbarphi(z); }, grid);
}

Field Weight::sample_lap_hat_phi(const Grid& grid) const { return sample_real(lap_hat_phi, grid); }

Field Weight::sample_exp_phi(const Grid& grid, double s) const {
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double e = std::exp(s * phi(grid.node(i)));
    if (!std::isfinite(e)) {
      throw Error(ErrorKind::dynamic_range, "e^{" + std::to_string(s) + " phi} overflows at node " + std::to_string(i));
    }
    out[i] = e;
  }
  return Field(grid, std::move(out));
}

Weight fock_weight(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::invalid_argument, "fock weight needs t > 0, got " + std::to_string(t));
  }
  Weight w;
  w.name = "fock";
  w.params = {{"t", t}};
  w.phi = [t](cplx z) { return 0.5 * t * std::norm(z); };
  w.dphi = [t](cplx z) { return 0.5 * t * std::conj(z); };
  w.lap_hat_phi = [t](cplx) { return 0.5 * t; };
  w.lap_hat_log_lap_hat = [](cplx) { return 0.0; };
  w.lap_hat_inf = [t](double) { return 0.5 * t; };
  return w;
}

Weight fock_plus_harmonic_weight(double t, cplx b) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::invalid_argument, "fock-plus-harmonic weight needs t > 0, got " + std::to_string(t));
  }
  Weight w;
  w.name = "fock-plus-harmonic";
  w.params = {{"t", t}, {"b", b.real()}, {"b_im", b.imag()}};
  w.phi = [t, b](cplx z) { return 0.5 * t * std::norm(z) + (b * z * z).real(); };
  // del Re(b z^2) = b z
  w.dphi = [t, b](cplx z) { return 0.5 * t * std::conj(z) + b * z; };
  w.lap_hat_phi = [t](cplx) { return 0.5 * t; };
  w.lap_hat_log_lap_hat = [](cplx) { return 0.0; };
  w.lap_hat_inf = [t](double) { return 0.5 * t; };
  return w;
}

Weight cosh_x_weight() {
  Weight w;
  w.name = "cosh-x";
  w.phi = [](cplx z) { return std::cosh(z.real()); };
  w.dphi = [](cplx z) { return cplx(0.5 * std::sinh(z.real()), 0.0); };
  w.lap_hat_phi = [](cplx z) { return 0.25 * std::cosh(z.real()); };
  // (1/4) d^2/dx^2 log(cosh(x)/4) = sech^2(x)/4
  w.lap_hat_log_lap_hat = [](cplx z) {
    const double s = 1.0 / std::cosh(z.real());
    return 0.25 * s * s;
  };
  w.lap_hat_inf = [](double) { return 0.25; };
  return w;
}

Weight quartic_weight() {
  Weight w;
  w.name = "quartic";
  w.phi = [](cplx z) { return std::norm(z) * std::norm(z); };
  // del (z^2 zbar^2) = 2 z zbar^2
  w.dphi = [](cplx z) { return 2.0 * z * std::conj(z) * std::conj(z); };
  w.lap_hat_phi = [](cplx z) { return 4.0 * std::norm(z); };
  w.lap_hat_inf = [](double) { return 0.0; };
  return w;
}

Weight zero_weight() {
  Weight w;
  w.name = "zero";
  w.phi = [](cplx) { return 0.0; };
  w.dphi = [](cplx) { return cplx(0.0, 0.0); };
  w.lap_hat_phi = [](cplx) { return 0.0; };
  w.lap_hat_inf = [](double) { return 0.0; };
  return w;
}

namespace {

double param_or(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::string& name, const std::map<std::string, double>& params,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : params) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      throw Error(ErrorKind::invalid_argument, "weight '" + name + "' has no parameter '" + key + "'");
    }
  }
}

}  // namespace

Weight custom_weight(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "fock") {
    reject_unknown(name, params, {"t"});
    return fock_weight(param_or(params, "t", 1.0));
  }
  if (name == "fock-plus-harmonic") {
    reject_unknown(name, params, {"t", "b", "b_im"});
    return fock_plus_harmonic_weight(param_or(params, "t", 1.0),
                                     cplx(param_or(params, "b", 0.125), param_or(params, "b_im", 0.0)));
  }
  if (name == "cosh-x") {
    reject_unknown(name, params, {});
    return cosh_x_weight();
  }
  if (name == "quartic") {
    reject_unknown(name, params, {});
    return quartic_weight();
  }
  if (name == "zero") {
    reject_unknown(name, params, {});
    return zero_weight();
  }
  throw Error(ErrorKind::invalid_argument, "unknown weight '" + name + "'");
}

Weight parse_weight_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::invalid_argument, "weight parameter '" + item + "' is not key=value");
      }
      try {
        std::size_t used = 0;
        const std::string text = item.substr(eq + 1);
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        params[item.substr(0, eq)] = value;
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::invalid_argument, "weight parameter '" + item + "' is not numeric");
      }
    }
  }
  return custom_weight(name, params);
}

bool is_fock(const Weight& w) noexcept { return w.name == "fock"; }

void validate_weight(const Weight& w, const Grid& grid) {
  const double inf = w.lap_hat_inf ? w.lap_hat_inf(grid.radius()) : std::numeric_limits<double>::quiet_NaN();
  if (!(inf > 0.0)) {
    throw Error(ErrorKind::weight_invariant_violation,
                "Lap-hat phi of weight '" + w.name + "' is not bounded away from 0 on the square (infimum " +
                    std::to_string(inf) + ")");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = w.lap_hat_phi(grid.node(i));
    if (!(v > 0.0)) {
      throw Error(ErrorKind::weight_invariant_violation,
                  "Lap-hat phi of weight '" + w.name + "' is not positive at node " + std::to_string(i));
    }
  }
}

CurvatureReport curvature_margin(const Weight& w, const Grid& grid, CurvaturePath path, double tolerance) {
  validate_weight(w, grid);
  CurvatureReport report{Field::zeros(grid)};
  if (path == CurvaturePath::analytic && w.lap_hat_log_lap_hat) {
    report.path = CurvaturePath::analytic;
    report.margin_field = sample(
        [&w](cplx z) { return cplx(w.lap_hat_log_lap_hat(z) / w.lap_hat_phi(z) + 2.0, 0.0); }, grid);
    report.min_margin = std::numeric_limits<double>::infinity();
    for (const cplx& m : report.margin_field.values()) report.min_margin = std::min(report.min_margin, m.real());
  } else {
    report.path = CurvaturePath::discrete;
    const Field log_lap = sample([&w](cplx z) { return cplx(std::log(w.lap_hat_phi(z)), 0.0); }, grid);
    const Field lap_log = laplacian_hat(log_lap, Scheme::fd4);
    const Field lap = w.sample_lap_hat_phi(grid);
    std::vector<cplx> margin(grid.size(), 0.0);
    report.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < margin.size(); ++i) {
      if (grid.ring(i) < lap_log.boundary_band()) continue;
      margin[i] = lap_log[i].real() / lap[i].real() + 2.0;
      report.min_margin = std::min(report.min_margin, margin[i].real());
    }
    report.margin_field = Field(grid, std::move(margin), lap_log.boundary_band());
  }
  report.passes = report.min_margin >= -tolerance;
  return report;
}

}  // namespace dbarkit
