#include "dbarkit/bargmann.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "dbarkit/error.hpp"
#include "sum.hpp"

namespace dbarkit {

std::string to_string(BargmannReading r) {
  switch (r) {
    case BargmannReading::literal: return "literal";
    case BargmannReading::quadratic: return "quadratic";
    case BargmannReading::both: return "both";
    case BargmannReading::neither: return "neither";
  }
  return "unknown";
}

namespace {

using cplx = std::complex<double>;

// Integrand magnitudes are cut where the exponent drops by this much.
constexpr double kDecay = 37.0;

// integral A^p e^{-(p a - 1/beta) x^2} dx by the trapezoid rule.
double line_integral(double amplitude, double a, double beta, int p) {
  const double rate = p * a - 1.0 / beta;
  const double half = std::sqrt(2.0 * kDecay / rate);
  const double dx = 0.25 / std::sqrt(rate);
  const int count = static_cast<int>(std::ceil(half / dx));
  detail::CompensatedSum acc;
  for (int i = -count; i <= count; ++i) {
    const double x = i * dx;
    acc.add(std::exp(-rate * x * x));
  }
  return std::pow(amplitude, p) * dx * acc.value();
}

}  // namespace

BargmannReport bargmann_probe(double beta, double a, double amplitude, const BargmannOptions& opts) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorKind::invalid_argument, "beta must be positive");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw Error(ErrorKind::invalid_argument, "amplitude must be positive");
  }
  if (!(a > 1.0 / beta) || !std::isfinite(a)) {
    throw Error(ErrorKind::invalid_argument, "need a > 1/beta for the right-hand sides to converge");
  }
  if (!(opts.plane_step > 0.0)) throw Error(ErrorKind::invalid_argument, "plane step must be positive");

  BargmannReport r;
  r.beta = beta;
  r.a = a;
  r.amplitude = amplitude;
  r.constant = 2.0 * std::pow(std::numbers::pi, 1.5) / std::sqrt(beta);

  // |fhat(s + i t)|^2 decays like e^{-s^2/(2a)} and e^{-(beta - 1/(2a)) t^2}.
  const double s_max = std::sqrt(2.0 * a * kDecay);
  const double t_max = std::sqrt(kDecay / (beta - 0.5 / a));
  const double x_max = (t_max + std::sqrt(t_max * t_max + 160.0 * a)) / (2.0 * a);
  const double dx = 2.0 * std::numbers::pi / (s_max + std::sqrt(160.0 * a));
  const int nx = static_cast<int>(std::ceil(x_max / dx));
  const int ns = static_cast<int>(std::ceil(s_max / opts.plane_step));
  const int nt = static_cast<int>(std::ceil(t_max / opts.plane_step));

  std::vector<double> xs, fx;
  for (int i = -nx; i <= nx; ++i) {
    xs.push_back(i * dx);
    fx.push_back(amplitude * std::exp(-a * xs.back() * xs.back()));
  }
  // e^{-i x s} table, one row per s node.
  std::vector<cplx> phase(static_cast<std::size_t>(2 * ns + 1) * xs.size());
  for (int is = -ns; is <= ns; ++is) {
    const double s = is * opts.plane_step;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      phase[static_cast<std::size_t>(is + ns) * xs.size() + k] = std::polar(1.0, -xs[k] * s);
    }
  }

  detail::CompensatedSum lhs;
  double peak = 0.0, edge = 0.0;
  std::vector<double> gx(xs.size());
  for (int it = -nt; it <= nt; ++it) {
    const double t = it * opts.plane_step;
    // e^{-i x (s + i t)} = e^{-i x s} e^{x t}
    for (std::size_t k = 0; k < xs.size(); ++k) gx[k] = fx[k] * std::exp(xs[k] * t);
    const double damp = std::exp(-beta * t * t);
    for (int is = -ns; is <= ns; ++is) {
      const cplx* row = phase.data() + static_cast<std::size_t>(is + ns) * xs.size();
      cplx fhat = 0.0;
      for (std::size_t k = 0; k < xs.size(); ++k) fhat += row[k] * gx[k];
      fhat *= dx;
      const double v = std::norm(fhat) * damp;
      lhs.add(v);
      peak = std::max(peak, v);
      if (std::abs(it) == nt || std::abs(is) == ns) edge = std::max(edge, v);
    }
  }
  r.lhs = lhs.value() * opts.plane_step * opts.plane_step;
  r.truncation_mass = peak > 0.0 ? edge / peak : 0.0;
  r.truncation_warning = r.truncation_mass > opts.truncation_tol;

  r.rhs_literal = r.constant * line_integral(amplitude, a, beta, 1);
  r.rhs_quadratic = r.constant * line_integral(amplitude, a, beta, 2);
  r.rel_err_literal = std::abs(r.lhs - r.rhs_literal) / r.rhs_literal;
  r.rel_err_quadratic = std::abs(r.lhs - r.rhs_quadratic) / r.rhs_quadratic;
  const bool lit = r.rel_err_literal < opts.match_tol;
  const bool quad = r.rel_err_quadratic < opts.match_tol;
  r.match = lit && quad ? BargmannReading::both
            : lit       ? BargmannReading::literal
            : quad      ? BargmannReading::quadratic
                        : BargmannReading::neither;
  return r;
}

}  // namespace dbarkit
