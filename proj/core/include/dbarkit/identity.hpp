#pragma once

#include "dbarkit/diff.hpp"
#include "dbarkit/weight.hpp"

namespace dbarkit {

/// T v = dbar v - (dbar phi) v
Field apply_T(const Field& v, const Weight& w, Scheme scheme = Scheme::spectral);
/// T* v = -del v - (del phi) v
Field apply_Tstar(const Field& v, const Weight& w, Scheme scheme = Scheme::spectral);

/// Sesquilinear L^2 inner product integral of a * conj(b).
cplx inner(const Field& a, const Field& b);

inline constexpr double kRelErrFloor = 1e-30;

struct IdentityReport {
  double lhs = 0.0;  // ||T v||^2 - ||del v + v del phi||^2
  double rhs = 0.0;  // 2 integral |v|^2 Lap-hat phi
  double abs_err = 0.0;
  double rel_err = 0.0;
  Scheme scheme = Scheme::spectral;
  bool passes = false;
  double dbar_norm_sq = 0.0;  // ||T v||^2
  double del_norm_sq = 0.0;   // ||T* v||^2
  double boundary_mass = 0.0;
  bool boundary_warning = false;
};

/// Both sides of the weighted norm identity for a field supported inside the
/// grid. For the zero weight rel_err compares ||dbar v||^2 with ||del v||^2.
IdentityReport verify_norm_identity(const Field& v, const Weight& w, Scheme scheme,
                                    double rel_tol = 1e-6);

/// v = e^{phi} u
Field to_dual_picture(const Field& u, const Weight& w);
/// u = e^{-phi} v
Field from_dual_picture(const Field& v, const Weight& w);

struct KernelCheck {
  double residual = 0.0;  // max |T* k| over interior nodes, k = e^{-phi} conj(g)
  double k_max = 0.0;
  double boundary_mass = 0.0;
  bool boundary_warning = false;
};

KernelCheck kernel_check(const ComplexFn& g, const Weight& w, const Grid& grid,
                         Scheme scheme = Scheme::fd4);

}  // namespace dbarkit
