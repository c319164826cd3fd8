#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dbarkit/error.hpp"
#include "dbarkit/grid.hpp"

namespace dbarkit {

/// Complex samples on a Grid, immutable after construction.
///
/// `boundary_band` counts the outermost node rings whose values are not
/// meaningful (zeroed by a finite-difference scheme). Pointwise arithmetic
/// propagates the widest band of its operands.
class Field {
 public:
  Field(Grid grid, std::vector<cplx> values, int boundary_band = 0);

  static Field zeros(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  cplx operator[](std::size_t i) const noexcept { return values_[i]; }
  int boundary_band() const noexcept { return band_; }

  Field conj() const;
  /// |v|^2 as a real-valued Field.
  Field abs2() const;
  double max_abs() const noexcept;

  template <class Fn>
  Field map(Fn&& fn) const {
    std::vector<cplx> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = fn(values_[i]);
    return Field(grid_, std::move(out), band_);
  }

  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);
  friend Field operator*(const Field& a, const Field& b);
  friend Field operator*(cplx s, const Field& a);
  friend Field operator-(const Field& a);

 private:
  Grid grid_;
  std::vector<cplx> values_;
  int band_;
};

using ComplexFn = std::function<cplx(cplx)>;

/// Pointwise evaluation at the grid nodes; a non-finite value raises
/// sampling-error naming the node.
Field sample(const ComplexFn& fn, const Grid& grid);

/// Writes `re,im,val_re,val_im` rows in node order with 17 significant digits.
void write_field_csv(const Field& field, const std::string& path);

}  // namespace dbarkit
