#include "dbarkit/diff.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace dbarkit {

std::string to_string(Scheme scheme) { return scheme == Scheme::spectral ? "spectral" : "fd4"; }

Scheme parse_scheme(const std::string& name) {
  if (name == "spectral") return Scheme::spectral;
  if (name == "fd4") return Scheme::fd4;
  throw Error(ErrorKind::invalid_argument, "unknown scheme '" + name + "'");
}

namespace {

struct Gradient {
  std::vector<double> dx;
  std::vector<double> dy;
};

// Real-valued derivative operators. Working on real and imaginary parts
// separately makes del(conj v) == conj(dbar v) hold bit for bit, since every
// operator here is odd under negation of its input.

double wavenumber(int index, int n, double radius) {
  const int m = index <= n / 2 ? index : index - n;
  return std::numbers::pi / radius * m;
}

Gradient spectral_gradient(const std::vector<double>& a, int n, double radius) {
  const int half = n / 2 + 1;
  auto hat = detail::rfft2(a, n, n);
  auto hx = hat;
  auto& hy = hat;
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int k = 0; k < n; ++k) {
    const double ky = (n % 2 == 0 && k == n / 2) ? 0.0 : wavenumber(k, n, radius);
    for (int j = 0; j < half; ++j) {
      const double kx = (n % 2 == 0 && j == n / 2) ? 0.0 : wavenumber(j, n, radius);
      const std::size_t i = static_cast<std::size_t>(k) * half + j;
      const std::complex<double> c = hat[i] * scale;
      hx[i] = std::complex<double>(0.0, kx) * c;
      hy[i] = std::complex<double>(0.0, ky) * c;
    }
  }
  return {detail::irfft2(std::move(hx), n, n), detail::irfft2(std::move(hy), n, n)};
}

std::vector<double> spectral_laplacian(const std::vector<double>& a, int n, double radius) {
  const int half = n / 2 + 1;
  auto hat = detail::rfft2(a, n, n);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int k = 0; k < n; ++k) {
    const double ky = wavenumber(k, n, radius);
    for (int j = 0; j < half; ++j) {
      const double kx = wavenumber(j, n, radius);
      hat[static_cast<std::size_t>(k) * half + j] *= -(kx * kx + ky * ky) * scale;
    }
  }
  return detail::irfft2(std::move(hat), n, n);
}

Gradient fd4_gradient(const std::vector<double>& a, int n, double h) {
  Gradient g{std::vector<double>(a.size(), 0.0), std::vector<double>(a.size(), 0.0)};
  const double c = 1.0 / (12.0 * h);
  auto at = [&](int j, int k) { return a[static_cast<std::size_t>(k) * n + j]; };
  for (int k = kFd4Band; k < n - kFd4Band; ++k) {
    for (int j = kFd4Band; j < n - kFd4Band; ++j) {
      const std::size_t i = static_cast<std::size_t>(k) * n + j;
      g.dx[i] = ((at(j - 2, k) - at(j + 2, k)) + 8.0 * (at(j + 1, k) - at(j - 1, k))) * c;
      g.dy[i] = ((at(j, k - 2) - at(j, k + 2)) + 8.0 * (at(j, k + 1) - at(j, k - 1))) * c;
    }
  }
  return g;
}

std::vector<double> fd4_laplacian(const std::vector<double>& a, int n, double h) {
  std::vector<double> out(a.size(), 0.0);
  const double c = 1.0 / (12.0 * h * h);
  auto at = [&](int j, int k) { return a[static_cast<std::size_t>(k) * n + j]; };
  for (int k = kFd4Band; k < n - kFd4Band; ++k) {
    for (int j = kFd4Band; j < n - kFd4Band; ++j) {
      const double xx = -(at(j - 2, k) + at(j + 2, k)) + 16.0 * (at(j - 1, k) + at(j + 1, k)) - 30.0 * at(j, k);
      const double yy = -(at(j, k - 2) + at(j, k + 2)) + 16.0 * (at(j, k - 1) + at(j, k + 1)) - 30.0 * at(j, k);
      out[static_cast<std::size_t>(k) * n + j] = (xx + yy) * c;
    }
  }
  return out;
}

void split(const Field& v, std::vector<double>& re, std::vector<double>& im) {
  re.resize(v.size());
  im.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    re[i] = v[i].real();
    im[i] = v[i].imag();
  }
}

Gradient gradient(const std::vector<double>& a, const Grid& g, Scheme scheme) {
  return scheme == Scheme::spectral ? spectral_gradient(a, g.n(), g.radius()) : fd4_gradient(a, g.n(), g.spacing());
}

int band_of(const Field& v, Scheme scheme) {
  return scheme == Scheme::fd4 ? std::max(v.boundary_band() + kFd4Band, kFd4Band) : v.boundary_band();
}

// sign = +1 gives dbar, -1 gives del.
Field wirtinger(const Field& v, Scheme scheme, double sign) {
  std::vector<double> re, im;
  split(v, re, im);
  const Gradient a = gradient(re, v.grid(), scheme);
  const Gradient b = gradient(im, v.grid(), scheme);
  std::vector<cplx> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double by = sign * b.dy[i];
    const double ay = sign * a.dy[i];
    out[i] = cplx(0.5 * (a.dx[i] - by), 0.5 * (b.dx[i] + ay));
  }
  return Field(v.grid(), std::move(out), band_of(v, scheme));
}

}  // namespace

Field dbar(const Field& v, Scheme scheme) { return wirtinger(v, scheme, 1.0); }

Field del(const Field& v, Scheme scheme) { return wirtinger(v, scheme, -1.0); }

Field laplacian_hat(const Field& v, Scheme scheme) {
  std::vector<double> re, im;
  split(v, re, im);
  const Grid& g = v.grid();
  auto lap = [&](const std::vector<double>& a) {
    return scheme == Scheme::spectral ? spectral_laplacian(a, g.n(), g.radius()) : fd4_laplacian(a, g.n(), g.spacing());
  };
  const auto lr = lap(re);
  const auto li = lap(im);
  std::vector<cplx> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.25 * cplx(lr[i], li[i]);
  return Field(g, std::move(out), band_of(v, scheme));
}

}  // namespace dbarkit
