#include "dbarkit/cauchy.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "fft.hpp"

namespace dbarkit {

std::string to_string(CauchyRule rule) {
  switch (rule) {
    case CauchyRule::punctured_dense: return "punctured-dense";
    case CauchyRule::punctured_fft: return "punctured-fft";
    case CauchyRule::spectral: return "spectral";
  }
  return "unknown";
}

CauchyRule parse_cauchy_rule(const std::string& name) {
  if (name == "punctured-dense") return CauchyRule::punctured_dense;
  if (name == "punctured-fft") return CauchyRule::punctured_fft;
  if (name == "spectral") return CauchyRule::spectral;
  throw Error(ErrorKind::invalid_argument, "unknown Cauchy rule '" + name + "'");
}

namespace {

constexpr double kInvPi = 1.0 / std::numbers::pi;

Field punctured_fft(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.n();
  const int m = 2 * n;
  const double h = g.spacing();
  const std::size_t total = static_cast<std::size_t>(m) * m;

  std::vector<cplx> kernel(total, 0.0);
  for (int q = -(n - 1); q <= n - 1; ++q) {
    for (int p = -(n - 1); p <= n - 1; ++p) {
      if (p == 0 && q == 0) continue;
      const cplx d(p * h, q * h);
      const std::size_t i = static_cast<std::size_t>((q + m) % m) * m + (p + m) % m;
      kernel[i] = h * h * kInvPi / d;
    }
  }
  std::vector<cplx> src(total, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) src[static_cast<std::size_t>(k) * m + j] = f[g.index(j, k)];
  }
  detail::fft2(kernel, m, m, false);
  detail::fft2(src, m, m, false);
  for (std::size_t i = 0; i < total; ++i) src[i] *= kernel[i];
  detail::fft2(src, m, m, true);

  const double scale = 1.0 / static_cast<double>(total);
  std::vector<cplx> out(g.size());
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) out[g.index(j, k)] = src[static_cast<std::size_t>(k) * m + j] * scale;
  }
  return Field(g, std::move(out));
}

// Truncated-kernel symbol on the padded m x m grid, cached per (R, n).
struct SpectralPlan {
  int m = 0;
  std::shared_ptr<const std::vector<cplx>> symbol;
};

SpectralPlan spectral_plan(const Grid& g) {
  static std::mutex mutex;
  static std::map<std::pair<double, int>, SpectralPlan> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(g.radius(), g.n());
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // Periodic images stay farther than the cutoff D from every target:
  // M h > 2R + D with D the box diameter.
  const int n = g.n();
  const int m = detail::next_fast_size(static_cast<int>(std::floor(n * (1.0 + std::numbers::sqrt2))) + 1);
  const double dk = 2.0 * std::numbers::pi / (m * g.spacing());
  const double cutoff = 2.0 * std::numbers::sqrt2 * g.radius();
  auto signed_index = [m](int i) { return i <= (m - 1) / 2 ? i : i - m; };

  // 1 - J0(|k| D) depends on (|s_p|, |s_q|) only.
  const int half = m / 2 + 1;
  std::vector<double> radial(static_cast<std::size_t>(half) * half);
  for (int a = 0; a < half; ++a) {
    for (int b = 0; b <= a; ++b) {
      const double v = 1.0 - std::cyl_bessel_j(0.0, std::hypot(a * dk, b * dk) * cutoff);
      radial[static_cast<std::size_t>(a) * half + b] = v;
      radial[static_cast<std::size_t>(b) * half + a] = v;
    }
  }
  auto symbol = std::make_shared<std::vector<cplx>>(static_cast<std::size_t>(m) * m);
  for (int q = 0; q < m; ++q) {
    const int sq = signed_index(q);
    for (int p = 0; p < m; ++p) {
      const int sp = signed_index(p);
      if (sp == 0 && sq == 0) continue;
      const double r = radial[static_cast<std::size_t>(std::abs(sp)) * half + std::abs(sq)];
      (*symbol)[static_cast<std::size_t>(q) * m + p] = cplx(0.0, -2.0) * r / cplx(sp * dk, sq * dk);
    }
  }
  SpectralPlan plan{m, std::move(symbol)};
  if (cache.size() >= 8) cache.clear();
  cache.emplace(key, plan);
  return plan;
}

Field spectral(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.n();
  const SpectralPlan plan = spectral_plan(g);
  const int m = plan.m;
  const std::size_t total = static_cast<std::size_t>(m) * m;

  std::vector<cplx> buf(total, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(k) * m + j] = f[g.index(j, k)];
  }
  detail::fft2(buf, m, m, false);
  for (std::size_t i = 0; i < total; ++i) buf[i] *= (*plan.symbol)[i];
  detail::fft2(buf, m, m, true);
  const double scale = 1.0 / static_cast<double>(total);
  std::vector<cplx> out(g.size());
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) out[g.index(j, k)] = buf[static_cast<std::size_t>(k) * m + j] * scale;
  }
  return Field(g, std::move(out));
}

}  // namespace

Field cauchy_transform(const Field& f, const Grid& targets) {
  const Grid& g = f.grid();
  const int n = g.n();
  const double h = g.spacing();
  std::vector<double> xs(n);
  for (int j = 0; j < n; ++j) xs[j] = g.coord(j);

  std::vector<cplx> out(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const cplx z = targets.node(t);
    // Source cell containing the target, if any, is skipped.
    const long jc = std::lround(z.real() / h + 0.5 * (n - 1));
    const long kc = std::lround(z.imag() / h + 0.5 * (n - 1));
    double sr = 0.0, si = 0.0;
    for (int k = 0; k < n; ++k) {
      const double dy = z.imag() - xs[k];
      const cplx* row = f.values().data() + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) {
        if (j == jc && k == kc) continue;
        const double dx = z.real() - xs[j];
        const double inv = 1.0 / (dx * dx + dy * dy);
        // f / (dx + i dy) = f (dx - i dy) / |d|^2
        const double fr = row[j].real(), fi = row[j].imag();
        sr += (fr * dx + fi * dy) * inv;
        si += (fi * dx - fr * dy) * inv;
      }
    }
    out[t] = cplx(sr, si) * (h * h * kInvPi);
  }
  return Field(targets, std::move(out));
}

Field cauchy_transform(const Field& f, CauchyRule rule) {
  switch (rule) {
    case CauchyRule::punctured_dense: return cauchy_transform(f, f.grid());
    case CauchyRule::punctured_fft: return punctured_fft(f);
    case CauchyRule::spectral: return spectral(f);
  }
  throw Error(ErrorKind::invalid_argument, "unknown Cauchy rule");
}

}  // namespace dbarkit
