#include "gapspec/medium.hpp"

#include <cmath>
#include <cstdio>

#include "gapspec/errors.hpp"

namespace gapspec {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

}  // namespace

bool MediumParams::omega12_in_gap() const {
  const double tau = edge_guard();
  return omega12 > omega_perp + tau && omega12 < omega_par - tau;
}

std::vector<std::string> MediumParams::validate() const {
  if (!(omega_perp > 0.0))
    throw DomainError("medium: omega_perp must be positive, got " + fmt(omega_perp));
  if (!(omega_par > omega_perp))
    throw DomainError("medium: omega_par must exceed omega_perp (" + fmt(omega_par) +
                      " <= " + fmt(omega_perp) + ")");
  if (!(beta > 0.0)) throw DomainError("medium: beta must be positive, got " + fmt(beta));
  if (!(omega12 > 0.0)) throw DomainError("medium: omega12 must be positive, got " + fmt(omega12));
  if (!(edge_guard_frac > 0.0) || !(edge_guard_frac < 0.5))
    throw DomainError("medium: edge_guard_frac must lie in (0, 0.5), got " + fmt(edge_guard_frac));
  if (radius_L && !(*radius_L > 0.0))
    throw DomainError("medium: L must be positive, got " + fmt(*radius_L));

  std::vector<std::string> warnings;
  if (beta > 0.1)
    warnings.push_back("beta = " + fmt(beta) +
                       " violates the weak-coupling assumption (beta << 1); "
                       "string results are uncontrolled");
  return warnings;
}

MediumParams MediumParams::normalized() const {
  MediumParams q = *this;
  const double s = omega_perp;
  q.omega_perp = 1.0;
  q.omega_par = omega_par / s;
  q.omega12 = omega12 / s;
  q.lamb_shift = lamb_shift / s;
  if (radius_L) q.radius_L = *radius_L * s;  // L carries units of 1/omega
  return q;
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Lower: return "lower";
    case Branch::Gap: return "gap";
    case Branch::Upper: return "upper";
    case Branch::Edge: return "edge";
  }
  return "?";
}

Branch classify(const MediumParams& p, double omega) {
  if (!(omega > 0.0)) throw DomainError("classify: omega must be positive, got " + fmt(omega));
  const double tau = p.edge_guard();
  if (std::abs(omega - p.omega_perp) <= tau || std::abs(omega - p.omega_par) <= tau)
    return Branch::Edge;
  if (omega < p.omega_perp) return Branch::Lower;
  if (omega < p.omega_par) return Branch::Gap;
  return Branch::Upper;
}

double permittivity(const MediumParams& p, double omega) {
  if (!(omega > 0.0)) throw DomainError("permittivity: omega must be positive, got " + fmt(omega));
  if (std::abs(omega - p.omega_perp) <= p.edge_guard())
    throw DomainError("permittivity: pole at omega_perp; omega = " + fmt(omega) +
                      " is within the edge guard of " + fmt(p.omega_perp));
  const double a = omega * omega - p.omega_par * p.omega_par;
  const double b = omega * omega - p.omega_perp * p.omega_perp;
  return a / b;
}

double permittivity_derivative(const MediumParams& p, double omega) {
  if (!(omega > 0.0)) throw DomainError("permittivity: omega must be positive, got " + fmt(omega));
  if (std::abs(omega - p.omega_perp) <= p.edge_guard())
    throw DomainError("permittivity: pole at omega_perp; omega = " + fmt(omega) +
                      " is within the edge guard of " + fmt(p.omega_perp));
  const double d = p.omega_par * p.omega_par - p.omega_perp * p.omega_perp;
  const double b = omega * omega - p.omega_perp * p.omega_perp;
  return 2.0 * omega * d / (b * b);
}

double refractive_index(const MediumParams& p, double omega) {
  const Branch br = classify(p, omega);
  if (br != Branch::Lower && br != Branch::Upper)
    throw DomainError("refractive_index: omega = " + fmt(omega) +
                      " is not on a propagating branch (use gap_decay_index inside the gap)");
  return std::sqrt(permittivity(p, omega));
}

double refractive_index_derivative(const MediumParams& p, double omega) {
  return permittivity_derivative(p, omega) / (2.0 * refractive_index(p, omega));
}

double gap_decay_index(const MediumParams& p, double xi) {
  if (classify(p, xi) != Branch::Gap)
    throw DomainError("gap_decay_index: xi = " + fmt(xi) + " is not strictly inside the gap (" +
                      fmt(p.omega_perp) + ", " + fmt(p.omega_par) + ")");
  return std::sqrt(-permittivity(p, xi));
}

double gap_decay_index_derivative(const MediumParams& p, double xi) {
  return -permittivity_derivative(p, xi) / (2.0 * gap_decay_index(p, xi));
}

double kappa(const MediumParams& p, double xi) { return xi * gap_decay_index(p, xi); }

double kappa_prime(const MediumParams& p, double xi) {
  const double nu = gap_decay_index(p, xi);
  return nu - xi * permittivity_derivative(p, xi) / (2.0 * nu);
}

}  // namespace gapspec
