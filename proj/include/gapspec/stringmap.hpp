#pragma once

#include <complex>

#include "gapspec/medium.hpp"

namespace gapspec {

/// Momentum and rapidity maps of the medium,
///
///   k(w) = w n(w),   h(w) = (omega12 / w)^2 (w - omega12_bar) / (w n^5(w)),
///
/// their analytic continuations off the real axis, and the linearization of
/// the gap-side phase function
///
///   phi(xi) = (xi - omega12_bar) f(xi),  f(xi) = omega12^2 / (xi^3 nu^5(xi)).
///
/// Inside the gap the square-root branch is fixed once and for all by
/// n(xi +- i0) = +- i nu(xi); no generic complex square root is exposed.

/// Result of linearizing phi at the atomic frequency:
/// phi(xi) ~= a (xi - omega12) + b (xi - omega12)^2.
struct Linearization {
  double a = 0.0;  ///< f(omega12) > 0
  double b = 0.0;  ///< f'(omega12) > 0
  /// Largest |xi - omega12| at which the quadratic model tracks exact phi
  /// to 1% relative error (minimum over the two sides of omega12).
  double valid_radius = 0.0;
};

/// First-order continuation off a propagating branch, valid for |eta| << lambda.
struct OutsideContinuation {
  std::complex<double> k;
  std::complex<double> h;
  /// Set when |eta| > 0.1 |lambda|, outside the trusted first-order regime.
  bool beyond_linear_regime = false;
};

/// Continuation into the gap (either the printed first-order form or the
/// all-orders fixed-branch evaluation, see below).
struct GapContinuation {
  std::complex<double> k;
  std::complex<double> h;
};

// Real-line maps on the propagating branches (edge-guarded).
double momentum_real(const MediumParams& p, double lambda);
double momentum_derivative(const MediumParams& p, double lambda);
double rapidity_real(const MediumParams& p, double lambda);
double rapidity_derivative(const MediumParams& p, double lambda);

// Gap-side phase function and its closed-form derivative.
double f_factor(const MediumParams& p, double xi);
double f_factor_derivative(const MediumParams& p, double xi);
double phi(const MediumParams& p, double xi);
double phi_derivative(const MediumParams& p, double xi);

/// k(lambda + i eta) = k(lambda) + i eta k'(lambda), likewise for h.
OutsideContinuation continue_outside(const MediumParams& p, double lambda, double eta);

/// First-order gap continuation at omega = xi + i eta, eta != 0:
///   k = sgn(eta) [ -eta kappa'(xi) + i kappa(xi) ],
///   h = sgn(eta) [  eta phi'(xi)   - i phi(xi)   ].
/// eta = 0 is the branch point and is rejected.
GapContinuation continue_gap(const MediumParams& p, double xi, double eta);

/// All-orders evaluation of k and h at complex omega with Re omega strictly
/// inside the gap, on the same fixed branch (reduces to continue_gap at
/// first order in Im omega; at Im omega = 0 returns the +i0 boundary value).
/// Conjugation symmetry holds exactly: continuing at conj(omega) yields the
/// conjugate values.
GapContinuation gap_continuation_exact(const MediumParams& p, std::complex<double> omega);

/// Complex derivative dh/domega of the fixed-branch rapidity map, used as
/// the analytic Jacobian of (Re h, Im h) in (xi, eta) via Cauchy-Riemann.
std::complex<double> gap_rapidity_derivative_exact(const MediumParams& p,
                                                   std::complex<double> omega);

/// Linearization coefficients a = f(omega12), b = f'(omega12) and the
/// numerically determined 1% validity radius.  Requires omega12 strictly
/// inside the gap.
Linearization linearize(const MediumParams& p);

}  // namespace gapspec
