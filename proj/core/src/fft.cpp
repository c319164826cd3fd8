#include "fft.hpp"

#include <fftw3.h>

#include <memory>

namespace dbarkit::detail {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const noexcept { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void fft2(std::vector<std::complex<double>>& data, int rows, int cols, bool inverse) {
  Plan plan(fftw_plan_dft_2d(rows, cols, as_fftw(data.data()), as_fftw(data.data()),
                             inverse ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE));
  fftw_execute(plan.get());
}

std::vector<std::complex<double>> rfft2(const std::vector<double>& in, int rows, int cols) {
  std::vector<double> src(in);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(rows) * (cols / 2 + 1));
  Plan plan(fftw_plan_dft_r2c_2d(rows, cols, src.data(), as_fftw(out.data()), FFTW_ESTIMATE));
  fftw_execute(plan.get());
  return out;
}

std::vector<double> irfft2(std::vector<std::complex<double>> in, int rows, int cols) {
  std::vector<double> out(static_cast<std::size_t>(rows) * cols);
  Plan plan(fftw_plan_dft_c2r_2d(rows, cols, as_fftw(in.data()), out.data(), FFTW_ESTIMATE));
  fftw_execute(plan.get());
  return out;
}

int next_fast_size(int m) {
  for (int s = m;; ++s) {
    int r = s;
    for (int p : {2, 3, 5}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return s;
  }
}

}  // namespace dbarkit::detail
