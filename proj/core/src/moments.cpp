#include "dbarkit/moments.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>

#include "dbarkit/quadrature.hpp"
#include "sum.hpp"

namespace dbarkit {

double MomentVector::max_abs() const noexcept {
  double r = 0.0;
  for (const cplx& v : m) r = std::max(r, std::abs(v));
  return r;
}

MomentVector moments(const Field& f, int J) {
  if (J < 0) throw Error(ErrorKind::invalid_argument, "moment order must be >= 0");
  const Grid& g = f.grid();
  std::vector<detail::ComplexCompensatedSum> acc(static_cast<std::size_t>(J) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx z = g.node(i);
    cplx p = f[i];
    for (int j = 0; j <= J; ++j) {
      acc[j].add(p);
      p *= z;
    }
  }
  MomentVector r;
  r.J = J;
  const double h2 = g.spacing() * g.spacing();
  for (const auto& a : acc) r.m.push_back(h2 * a.value());
  r.l1_norm = l1_norm(f);
  r.boundary_mass = boundary_mass(f);
  r.boundary_warning = r.boundary_mass > kBoundaryMassThreshold;
  return r;
}

cplx pairing(const Field& f, const Field& g) {
  if (!(f.grid() == g.grid())) throw Error(ErrorKind::invalid_argument, "fields live on different grids");
  return integrate(f * g);
}

cplx fourier2(const Field& f, cplx xi, cplx eta) {
  const Grid& g = f.grid();
  if (g.radius() * (std::abs(xi.imag()) + std::abs(eta.imag())) > kFourierExponentLimit) {
    throw Error(ErrorKind::dynamic_range, "exponential factor in the Fourier integral exceeds e^" +
                                              std::to_string(static_cast<int>(kFourierExponentLimit)));
  }
  const int n = g.n();
  const cplx mi(0.0, -1.0);
  std::vector<cplx> ex(n), ey(n);
  for (int j = 0; j < n; ++j) {
    ex[j] = std::exp(mi * xi * g.coord(j));
    ey[j] = std::exp(mi * eta * g.coord(j));
  }
  detail::ComplexCompensatedSum total;
  for (int k = 0; k < n; ++k) {
    detail::ComplexCompensatedSum row;
    for (int j = 0; j < n; ++j) row.add(ex[j] * f[g.index(j, k)]);
    total.add(ey[k] * row.value());
  }
  return g.spacing() * g.spacing() * total.value();
}

double DiagonalSeries::max_value_abs() const noexcept {
  double r = 0.0;
  for (const cplx& v : values) r = std::max(r, std::abs(v));
  return r;
}

std::vector<cplx> default_diagonal_samples() {
  std::vector<cplx> xi;
  for (int i = -20; i <= 20; ++i) xi.emplace_back(0.1 * i, 0.0);
  for (int k = 0; k < 16; ++k) xi.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 16.0));
  return xi;
}

DiagonalSeries diagonal_restriction(const Field& f, const std::vector<cplx>& xi_samples, int J) {
  const MomentVector m = moments(f, J);
  const Grid& g = f.grid();

  // Absolute moments M_j = integral |z|^j |f| for the tail bound.
  constexpr int kTailTerms = 80;
  const int top = J + kTailTerms;
  std::vector<detail::CompensatedSum> abs_acc(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = std::abs(g.node(i));
    double p = std::abs(f[i]);
    for (int j = 0; j <= top; ++j) {
      abs_acc[j].add(p);
      p *= r;
    }
  }
  const double h2 = g.spacing() * g.spacing();

  DiagonalSeries d;
  d.xi = xi_samples;
  for (const cplx& xi : xi_samples) {
    d.values.push_back(fourier2(f, xi, cplx(0.0, 1.0) * xi));
    const cplx step = cplx(0.0, -1.0) * xi;
    cplx coef = 1.0;
    detail::ComplexCompensatedSum s;
    for (int j = 0; j <= J; ++j) {
      s.add(coef * m.m[j]);
      coef *= step / static_cast<double>(j + 1);
    }
    d.series.push_back(s.value());
    double c = 1.0;
    for (int j = 1; j <= J; ++j) c *= std::abs(xi) / j;
    double tail = 0.0;
    for (int j = J + 1; j <= top; ++j) {
      c *= std::abs(xi) / j;
      tail += c * h2 * abs_acc[j].value();
    }
    d.tail_bound.push_back(tail);
  }
  return d;
}

void write_diagonal_csv(const DiagonalSeries& d, const std::string& path) {
  std::unique_ptr<std::FILE, decltype(&std::fclose)> out(std::fopen(path.c_str(), "w"), &std::fclose);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  std::fprintf(out.get(), "xi_re,xi_im,fhat_re,fhat_im,series_re,series_im\n");
  for (std::size_t i = 0; i < d.xi.size(); ++i) {
    std::fprintf(out.get(), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", d.xi[i].real(), d.xi[i].imag(),
                 d.values[i].real(), d.values[i].imag(), d.series[i].real(), d.series[i].imag());
  }
}

}  // namespace dbarkit
