#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gapspec/bae.hpp"
#include "gapspec/medium.hpp"
#include "gapspec/stringmap.hpp"

namespace gapspec {

/// Approximation order carried by every gap-soliton state so that consumers
/// never mix regimes silently.
enum class SolitonMode { Linear, Corrected, Exact };

const char* to_string(SolitonMode m);

/// Bound complex of N lower-branch polaritons with carrier Omega solving
/// h(Omega) = H, H < 0.
struct OrdinarySoliton {
  int n_particles = 0;
  double carrying_rapidity = 0.0;
  double carrier = 0.0;   ///< Omega
  double energy = 0.0;    ///< E = Omega N
  double width = 0.0;     ///< Gamma = beta / h'(Omega)
  double momentum = 0.0;  ///< K = Omega n(Omega)
  double decay = 0.0;     ///< Q = beta k'(Omega) / h'(Omega)
  std::vector<std::complex<double>> frequencies;  ///< Omega + (i/2) Gamma (N+1-2j)
  std::vector<std::complex<double>> momenta;      ///< K + (i/2) Q (N+1-2j)
  /// Set when the string half-width Gamma (N-1)/2 exceeds 10% of the
  /// carrier, outside the trusted first-order continuation regime.
  bool beyond_linear_regime = false;
};

/// Bound complex of l confined gap pairs (even string, N = 2l).
struct GapSolitonState {
  int n_pairs = 0;
  double carrying_rapidity = 0.0;
  SolitonMode mode = SolitonMode::Linear;

  std::vector<double> xi;        ///< real parts of the pair frequencies, j = 1..l
  std::vector<double> eta;       ///< imaginary parts (>= 0; conjugates implied)
  std::vector<double> q;         ///< real momentum per pair member
  std::vector<double> kappa_im;  ///< imaginary momentum (decay) per pair

  double total_energy = 0.0;         ///< E = 2 sum xi_j
  double energy_per_particle = 0.0;  ///< eps_l = E / 2l
  double band_halfwidth = 0.0;       ///< Delta_l = b beta^2 (4l^2-1) / (12 a^3)
  double effective_mass = 0.0;       ///< m_l = a (sum |kappa'|)^2 / (2 b l^2)
  double size = 0.0;                 ///< delta_l = 1 / kappa(xi_1)
  double momentum_per_particle = 0.0;
  bool beyond_valid_radius = false;  ///< linearization advisory flag

  /// Constituents in string order (j = 1..l upper members, then conjugates).
  std::vector<std::complex<double>> frequencies() const;
  std::vector<std::complex<double>> momenta() const;
};

/// Odd-string state pinned to the atom (H -> 0+), 2l+1 particles.
struct PinnedSoliton {
  int n_pairs = 0;
  double bound_state_frequency = 0.0;  ///< xi_0 = omega12
  std::vector<double> xi;              ///< deformed pair frequencies, j = 1..l
  double total_energy = 0.0;           ///< E = omega12 (2l+1) - (beta/a) l (l+1)
  double binding_energy = 0.0;         ///< U_l = -(beta/a) l
  std::optional<double> pair_extraction_energy;  ///< U_1 = (beta/a)(2l-1), l >= 1

  std::vector<std::complex<double>> frequencies() const;  ///< all 2l+1 constituents
};

/// One row of a band-structure sweep; `error` is set (and the energies are
/// NaN) when a grid point fails, without aborting the sweep.
struct BandPoint {
  double carrying_rapidity = 0.0;
  double q_corrected = 0.0;
  double eps_corrected = 0.0;
  double q_exact = 0.0;
  double eps_exact = 0.0;
  std::optional<std::string> error;
};

struct BandTable {
  int n_pairs = 0;
  std::vector<BandPoint> points;
  /// Smallest sampled q where exact and quadratic-model energies diverge by
  /// more than 10% of the quadratic kinetic term; unset if never exceeded.
  std::optional<double> q_mass_limit;
};

/// Largest pair count whose linear-map frequencies stay inside the
/// edge-guarded window (omega_perp + tau, omega12).
int l_max(const MediumParams& p);

/// Largest pair count solvable by the exact map, bounded by the extremum of
/// phi across the gap.
int l_max_exact(const MediumParams& p);

double band_halfwidth(const MediumParams& p, int l);
double effective_mass(const MediumParams& p, int l);

OrdinarySoliton ordinary_soliton(const MediumParams& p, int n_particles, double H);

/// Two-particle gap state (l = 1, linear map): xi = omega12 - beta/2a,
/// eta = H/a, q = eta |kappa'(xi)|.  Requires H > 0.
GapSolitonState gap_pair(const MediumParams& p, double H);

/// Motionless l-pair gap soliton in the linear approximation.
GapSolitonState gap_soliton_linear(const MediumParams& p, int l);

/// U_d = E_l1 + E_{l-l1} - E_l = 2 (beta/a) l1 (l - l1).
double dissociation_energy(const MediumParams& p, int l, int l1);

/// First corrections: xi_j shifted by -(b/a)(xi0_j - omega12)^2 + (b/a) eta^2,
/// eps_l = eps0_l - Delta_l + q^2 / 2 m_l.  Requires the corrected
/// frequencies to stay inside the window and the 1% linearization radius.
GapSolitonState gap_soliton_corrected(const MediumParams& p, int l, double H);

/// Per-pair solution of Re h(xi_j, eta_j) = H, Im h(xi_j, eta_j) =
/// beta (l - j + 1/2) on the fixed gap branch, by damped 2D Newton iteration
/// with the analytic Jacobian; initial guesses from the corrected map.
GapSolitonState gap_soliton_exact(const MediumParams& p, int l, double H);

PinnedSoliton pinned_soliton(const MediumParams& p, int l);

/// Sweeps carrying rapidities and tabulates corrected and exact energies;
/// grid points are independent and may be evaluated on `threads` workers,
/// with output order fixed by the input grid.
BandTable band_structure(const MediumParams& p, int l, const std::vector<double>& H_grid,
                         unsigned threads = 1);

}  // namespace gapspec
