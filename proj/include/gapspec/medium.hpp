#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gapspec {

/// Physical configuration of the dispersive medium and the impurity atom.
///
/// All frequencies share one unit system (the CLI normalizes its inputs to
/// omega_perp = 1); hbar = c = 1 throughout, so lengths carry units of
/// inverse frequency.  The medium has a single polariton gap
/// G = (omega_perp, omega_par) in which the permeability is negative.
struct MediumParams {
  double omega_perp = 1.0;  ///< lower gap edge
  double omega_par = 1.2;   ///< upper gap edge
  double omega12 = 1.1;     ///< atomic transition frequency
  double beta = 1e-3;       ///< effective coupling gamma / omega12

  /// PBC sphere radius; required by the finite-L operations.
  std::optional<double> radius_L;

  /// Edge guard as a fraction of the gap width: operations reject inputs
  /// within edge_guard() of either gap edge, where nonradiative relaxation
  /// invalidates the model.
  double edge_guard_frac = 1e-6;

  /// Offset applied to the atomic frequency in the rapidity map
  /// (omega12_bar = omega12 + lamb_shift).  Zero by default; exposed as a
  /// sensitivity knob only.
  double lamb_shift = 0.0;

  double edge_guard() const { return edge_guard_frac * (omega_par - omega_perp); }
  double omega12_bar() const { return omega12 + lamb_shift; }
  double gap_width() const { return omega_par - omega_perp; }
  bool omega12_in_gap() const;

  /// Checks structural invariants (0 < omega_perp < omega_par, beta > 0,
  /// positive guards); throws DomainError on violation.  Returns advisory
  /// warnings, e.g. when beta exceeds the weak-coupling assumption.
  std::vector<std::string> validate() const;

  /// Same configuration rescaled so that omega_perp = 1 (lengths in units
  /// of 1/omega_perp).
  MediumParams normalized() const;
};

/// Classification of a positive real frequency against the gap.
enum class Branch { Lower, Gap, Upper, Edge };

const char* to_string(Branch b);

/// Dielectric permeability eps(w) = (w^2 - omega_par^2) / (w^2 - omega_perp^2).
/// Negative exactly inside the gap; simple pole at omega_perp (rejected
/// together with its edge-guard neighbourhood).
double permittivity(const MediumParams& p, double omega);
double permittivity_derivative(const MediumParams& p, double omega);

/// Refractive index n(w) = sqrt(eps(w)) for w outside the gap.
double refractive_index(const MediumParams& p, double omega);
double refractive_index_derivative(const MediumParams& p, double omega);

/// Gap decay index nu(xi) = sqrt(|eps(xi)|) for xi strictly inside the gap;
/// fixes the branch n(xi +- i0) = +- i nu(xi).
double gap_decay_index(const MediumParams& p, double xi);
double gap_decay_index_derivative(const MediumParams& p, double xi);

/// kappa(xi) = xi nu(xi), the inverse classical penetration length at gap
/// frequency xi.  Strictly decreasing across the gap; kappa_prime is the
/// closed-form derivative and is negative throughout.
double kappa(const MediumParams& p, double xi);
double kappa_prime(const MediumParams& p, double xi);

Branch classify(const MediumParams& p, double omega);

}  // namespace gapspec
