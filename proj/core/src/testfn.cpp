#include "dbarkit/testfn.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace dbarkit {

namespace {

cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

cplx Polynomial::value(cplx z) const {
  cplx s = 0.0;
  for (const auto& t : terms) s += t.coeff * ipow(z, t.k) * ipow(std::conj(z), t.l);
  return s;
}

cplx Polynomial::dbar(cplx z) const {
  cplx s = 0.0;
  for (const auto& t : terms) {
    if (t.l > 0) s += t.coeff * static_cast<double>(t.l) * ipow(z, t.k) * ipow(std::conj(z), t.l - 1);
  }
  return s;
}

cplx Polynomial::del(cplx z) const {
  cplx s = 0.0;
  for (const auto& t : terms) {
    if (t.k > 0) s += t.coeff * static_cast<double>(t.k) * ipow(z, t.k - 1) * ipow(std::conj(z), t.l);
  }
  return s;
}

cplx Polynomial::lap_hat(cplx z) const {
  cplx s = 0.0;
  for (const auto& t : terms) {
    if (t.k > 0 && t.l > 0) {
      s += t.coeff * static_cast<double>(t.k * t.l) * ipow(z, t.k - 1) * ipow(std::conj(z), t.l - 1);
    }
  }
  return s;
}

Polynomial Polynomial::monomial(int k, int l, cplx coeff) { return Polynomial{{{k, l, coeff}}}; }

TestFunction bump(cplx center, double rho) {
  const double r2 = rho * rho;
  // w = e^g, g = 1/(s-1), s = |z-c|^2 / rho^2
  auto inside = [center, r2](cplx z, double& s) {
    s = std::norm(z - center) / r2;
    return s < 1.0;
  };
  TestFunction fn;
  fn.value = [=](cplx z) -> cplx {
    double s;
    return inside(z, s) ? std::exp(1.0 / (s - 1.0)) : 0.0;
  };
  fn.dbar = [=](cplx z) -> cplx {
    double s;
    if (!inside(z, s)) return 0.0;
    const double g1 = -1.0 / ((s - 1.0) * (s - 1.0));
    return std::exp(1.0 / (s - 1.0)) * g1 * (z - center) / r2;
  };
  fn.del = [=](cplx z) -> cplx {
    double s;
    if (!inside(z, s)) return 0.0;
    const double g1 = -1.0 / ((s - 1.0) * (s - 1.0));
    return std::exp(1.0 / (s - 1.0)) * g1 * std::conj(z - center) / r2;
  };
  fn.lap_hat = [=](cplx z) -> cplx {
    double s;
    if (!inside(z, s)) return 0.0;
    const double g1 = -1.0 / ((s - 1.0) * (s - 1.0));
    const double g2 = 2.0 / ((s - 1.0) * (s - 1.0) * (s - 1.0));
    return std::exp(1.0 / (s - 1.0)) * ((g1 * g1 + g2) * s / r2 + g1 / r2);
  };
  fn.extent = std::abs(center) + rho;
  return fn;
}

TestFunction gaussian_window(cplx center, double sigma) {
  const double s2 = sigma * sigma;
  TestFunction fn;
  fn.value = [=](cplx z) -> cplx { return std::exp(-std::norm(z - center) / s2); };
  fn.dbar = [=](cplx z) -> cplx { return -(z - center) / s2 * std::exp(-std::norm(z - center) / s2); };
  fn.del = [=](cplx z) -> cplx { return -std::conj(z - center) / s2 * std::exp(-std::norm(z - center) / s2); };
  fn.lap_hat = [=](cplx z) -> cplx {
    const double d2 = std::norm(z - center);
    return (d2 / (s2 * s2) - 1.0 / s2) * std::exp(-d2 / s2);
  };
  // e^{-37} is below double resolution relative to the peak.
  fn.extent = std::abs(center) + sigma * std::sqrt(37.0);
  return fn;
}

namespace {

// Smooth step S(t): 0 for t <= 0, 1 for t >= 1, with derivatives in t.
struct Step {
  double s, ds, dds;
};

Step smooth_step(double t) {
  if (t <= 0.0) return {0.0, 0.0, 0.0};
  if (t >= 1.0) return {1.0, 0.0, 0.0};
  // S = 1 / (1 + e^E), E = 1/t - 1/(1-t)
  const double e = 1.0 / t - 1.0 / (1.0 - t);
  const double x = std::exp(-std::abs(e));
  const double s = e > 0.0 ? x / (1.0 + x) : 1.0 / (1.0 + x);
  const double w = s * (1.0 - s);
  if (w == 0.0) return {s, 0.0, 0.0};
  const double e1 = -1.0 / (t * t) - 1.0 / ((1.0 - t) * (1.0 - t));
  const double e2 = 2.0 / (t * t * t) - 2.0 / ((1.0 - t) * (1.0 - t) * (1.0 - t));
  return {s, -e1 * w, w * (-(e1 * e1 + e2) + 2.0 * e1 * e1 * (1.0 - s))};
}

}  // namespace

TestFunction plateau(double inner, double outer) {
  const double width = outer - inner;
  // chi(r) = S((outer - r) / width)
  auto radial = [=](double r) {
    const Step st = smooth_step((outer - r) / width);
    return Step{st.s, -st.ds / width, st.dds / (width * width)};
  };
  TestFunction fn;
  fn.value = [=](cplx z) -> cplx { return radial(std::abs(z)).s; };
  fn.dbar = [=](cplx z) -> cplx {
    const double r = std::abs(z);
    return r == 0.0 ? 0.0 : radial(r).ds * z / (2.0 * r);
  };
  fn.del = [=](cplx z) -> cplx {
    const double r = std::abs(z);
    return r == 0.0 ? 0.0 : radial(r).ds * std::conj(z) / (2.0 * r);
  };
  fn.lap_hat = [=](cplx z) -> cplx {
    const double r = std::abs(z);
    if (r == 0.0) return 0.0;
    const Step st = radial(r);
    return 0.25 * (st.dds + st.ds / r);
  };
  fn.extent = outer;
  return fn;
}

TestFunction operator*(const TestFunction& window, const Polynomial& p) {
  TestFunction fn;
  fn.value = [window, p](cplx z) { return window.value(z) * p.value(z); };
  fn.dbar = [window, p](cplx z) { return window.dbar(z) * p.value(z) + window.value(z) * p.dbar(z); };
  fn.del = [window, p](cplx z) { return window.del(z) * p.value(z) + window.value(z) * p.del(z); };
  fn.lap_hat = [window, p](cplx z) {
    return window.lap_hat(z) * p.value(z) + window.del(z) * p.dbar(z) + window.dbar(z) * p.del(z) +
           window.value(z) * p.lap_hat(z);
  };
  fn.extent = window.extent;
  return fn;
}

std::vector<SuiteMember> make_suite(std::uint64_t seed, int count, Window window) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto in_disk = [&](double radius) {
    return std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
  };
  std::vector<SuiteMember> suite;
  suite.reserve(count);
  for (int i = 0; i < count; ++i) {
    SuiteMember m;
    m.window = window;
    m.center = in_disk(0.7);
    m.scale = window == Window::bump ? 1.5 + unit(rng) : 0.6 + 0.2 * unit(rng);
    const int degree = static_cast<int>(unit(rng) * 5.0);
    for (int d = 0; d <= std::min(degree, 4); ++d) {
      for (int k = 0; k <= d; ++k) m.poly.terms.push_back({k, d - k, in_disk(1.0)});
    }
    const TestFunction w = window == Window::bump ? bump(m.center, m.scale) : gaussian_window(m.center, m.scale);
    m.fn = w * m.poly;
    suite.push_back(std::move(m));
  }
  return suite;
}

}  // namespace dbarkit
