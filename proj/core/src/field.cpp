#include "dbarkit/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace dbarkit {
namespace {

void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) {
    throw Error(ErrorKind::invalid_argument, "fields live on different grids");
  }
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Field::Field(Grid grid, std::vector<cplx> values, int boundary_band)
    : grid_(grid), values_(std::move(values)), band_(boundary_band) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorKind::invalid_argument,
                "field has " + std::to_string(values_.size()) + " values for " +
                    std::to_string(grid_.size()) + " nodes");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!finite(values_[i])) {
      throw Error(ErrorKind::non_finite, "field value at node " + std::to_string(i) + " is not finite");
    }
  }
}

Field Field::zeros(const Grid& grid) { return Field(grid, std::vector<cplx>(grid.size())); }

Field Field::conj() const {
  return map([](cplx z) { return std::conj(z); });
}

Field Field::abs2() const {
  return map([](cplx z) { return cplx(std::norm(z), 0.0); });
}

double Field::max_abs() const noexcept {
  double m = 0.0;
  for (const cplx& z : values_) m = std::max(m, std::abs(z));
  return m;
}

Field operator+(const Field& a, const Field& b) {
  require_same_grid(a, b);
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values_[i] + b.values_[i];
  return Field(a.grid_, std::move(out), std::max(a.band_, b.band_));
}

Field operator-(const Field& a, const Field& b) {
  require_same_grid(a, b);
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values_[i] - b.values_[i];
  return Field(a.grid_, std::move(out), std::max(a.band_, b.band_));
}

Field operator*(const Field& a, const Field& b) {
  require_same_grid(a, b);
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.values_[i] * b.values_[i];
  return Field(a.grid_, std::move(out), std::max(a.band_, b.band_));
}

Field operator*(cplx s, const Field& a) {
  return a.map([s](cplx z) { return s * z; });
}

Field operator-(const Field& a) {
  return a.map([](cplx z) { return -z; });
}

Field sample(const ComplexFn& fn, const Grid& grid) {
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const cplx v = fn(grid.node(i));
    if (!finite(v)) {
      const int j = static_cast<int>(i % grid.n());
      const int k = static_cast<int>(i / grid.n());
      throw Error(ErrorKind::sampling_error, "non-finite value at node " + std::to_string(i) + " (j=" +
                                                 std::to_string(j) + ", k=" + std::to_string(k) + ")");
    }
    out[i] = v;
  }
  return Field(grid, std::move(out));
}

void write_field_csv(const Field& field, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io, "cannot open " + path + " for writing");
  out << "re,im,val_re,val_im\n";
  char line[128];
  const Grid& g = field.grid();
  for (std::size_t i = 0; i < field.size(); ++i) {
    const cplx z = g.node(i);
    const cplx v = field[i];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", z.real(), z.imag(), v.real(), v.imag());
    out << line;
  }
  if (!out) throw Error(ErrorKind::io, "write failed for " + path);
}

}  // namespace dbarkit
