#pragma once

#include <complex>
#include <vector>

#include "gapspec/medium.hpp"

namespace gapspec {

/// A single Bethe string: N rapidities sharing the real part H with
/// imaginary parts spaced by beta,
///   h_j = H + i (beta/2) (N + 1 - 2j),  j = 1..N  (descending Im).
struct BetheString {
  int n_particles = 0;
  double carrying_rapidity = 0.0;
  double beta = 0.0;
  std::vector<std::complex<double>> rapidities;
};

BetheString build_string(int n_particles, double carrying_rapidity, double beta);

/// Outcome of the necessary condition sgn(Im h_j) = sgn(Im k_j).
/// Constituents with Im h_j = 0 (real one-particle members) are exempt.
struct NCReport {
  bool pass = true;
  std::vector<int> offending;      ///< 1-based constituent indices that fail
  std::vector<bool> satisfied;     ///< per-constituent flags (exempt => true)
};

NCReport check_nc(const BetheString& s, const std::vector<std::complex<double>>& momenta);

/// One periodic-boundary-condition residual.  The magnitude is carried in
/// log space (log_abs, arg) so that decay rates remain measurable long after
/// |value| underflows; value is the linear-space number when representable.
struct Residual {
  std::complex<double> value;
  double log_abs = 0.0;
  double arg = 0.0;
};

/// Finite-L residuals of the Bethe equations
///
///   e^{i k_j L} (h_j - i beta/2)/(h_j + i beta/2)
///       = - prod_{l != j} (h_j - h_l - i beta)/(h_j - h_l + i beta)
///
/// evaluated for a candidate string with its mapped momenta.  Each equation
/// is taken in the orientation (direct for Im h_j >= 0, reciprocal below)
/// that keeps its exponential factor bounded.  Factors driven to an exact
/// zero or pole by the ideal string spacing (within 1e-12 beta) are the
/// string's deviation content: matched pole-zero pairs are cancelled
/// analytically, and the residual reported for such constituents is the
/// deviation the vanishing factors would need to balance the equation,
/// which decays exponentially in L for a valid string.  An exact pole with
/// no matching zero signals a malformed string and raises DomainError.
/// Real (center) constituents of odd strings instead measure the finite-L
/// phase-quantization mismatch, which is O(1) at generic H.
std::vector<Residual> bae_residual(const MediumParams& p, const BetheString& s,
                                   const std::vector<std::complex<double>>& momenta,
                                   const std::vector<std::complex<double>>& omegas);

/// Total phase k(omega) L + theta(h(omega)) of the one-particle equation,
/// where theta = arg[(h - i beta/2)/(h + i beta/2)] taken continuously on
/// the branch.  Roots sit at odd multiples of pi.
double one_particle_phase(const MediumParams& p, Branch branch, double omega);

/// Number of one-particle modes in the edge-guarded window of the branch.
int count_one_particle_modes(const MediumParams& p, Branch branch);

/// Real root of the one-particle quantization condition
/// k(w) L + theta(h(w)) = pi (2 m + 1), located by bracketed bisection and
/// polished by Newton iteration with the analytic phase derivative.
double solve_one_particle(const MediumParams& p, Branch branch, int mode_index);

}  // namespace gapspec
