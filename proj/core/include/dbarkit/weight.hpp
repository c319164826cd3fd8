#pragma once

#include <functional>
#include <map>
#include <string>

#include "dbarkit/diff.hpp"
#include "dbarkit/field.hpp"

namespace dbarkit {

/// Closed-form real weight phi with analytic derivatives.
///
/// dbar phi is always conj(del phi), so the two agree bitwise.
struct Weight {
  std::string name;
  std::map<std::string, double> params;
  std::function<double(cplx)> phi;
  std::function<cplx(cplx)> dphi;
  std::function<double(cplx)> lap_hat_phi;
  /// Lap-hat of log(Lap-hat phi); empty when no closed form is available.
  std::function<double(cplx)> lap_hat_log_lap_hat;
  /// Infimum of Lap-hat phi over the square [-R, R]^2.
  std::function<double(double)> lap_hat_inf;

  cplx dbarphi(cplx z) const { return std::conj(dphi(z)); }

  Field sample_phi(const Grid& grid) const;
  Field sample_dphi(const Grid& grid) const;
  Field sample_dbarphi(const Grid& grid) const;
  Field sample_lap_hat_phi(const Grid& grid) const;
  /// e^{s phi} sampled; dynamic-range error naming the node on overflow.
  Field sample_exp_phi(const Grid& grid, double s) const;
};

Weight fock_weight(double t = 1.0);
/// phi = t|z|^2/2 + Re(b z^2)
Weight fock_plus_harmonic_weight(double t, cplx b);
/// phi = cosh x
Weight cosh_x_weight();
/// phi = |z|^4; Lap-hat phi = 4|z|^2 vanishes at the origin.
Weight quartic_weight();
/// phi = 0; used for the isometry case only.
Weight zero_weight();

/// Builds a catalog weight from a name and parameters
/// (fock{t}, fock-plus-harmonic{t,b,b_im}, cosh-x, quartic, zero).
Weight custom_weight(const std::string& name, const std::map<std::string, double>& params);

/// Parses "fock", "fock:t=2", "fock-plus-harmonic:t=1,b=0.125".
Weight parse_weight_spec(const std::string& spec);

bool is_fock(const Weight& w) noexcept;

/// Throws weight-invariant-violation unless Lap-hat phi > 0 on the grid
/// (checked both at the nodes and through the analytic infimum).
void validate_weight(const Weight& w, const Grid& grid);

enum class CurvaturePath { analytic, discrete };

struct CurvatureReport {
  Field margin_field;  // (Lap-hat log Lap-hat phi)/(Lap-hat phi) + 2
  double min_margin = 0.0;
  bool passes = false;
  CurvaturePath path = CurvaturePath::analytic;
};

inline constexpr double kCurvatureTolerance = 1e-9;

/// Margin of the uniqueness condition (1/Lap phi) Lap log Lap phi >= -2.
/// The ratio is the same for Lap and Lap-hat = Lap/4, so Lap-hat is used.
/// The analytic path is taken when the weight provides it; the discrete path
/// applies fd4 to log(Lap-hat phi) and reports the minimum over interior nodes.
CurvatureReport curvature_margin(const Weight& w, const Grid& grid,
                                 CurvaturePath path = CurvaturePath::analytic,
                                 double tolerance = kCurvatureTolerance);

}  // namespace dbarkit
