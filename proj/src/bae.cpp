#include "gapspec/bae.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gapspec/errors.hpp"
#include "gapspec/stringmap.hpp"

namespace gapspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

// Complex number carried as (log magnitude, phase); survives magnitudes far
// below the double underflow threshold.
struct LogComplex {
  double log_abs = 0.0;
  double arg = 0.0;

  static LogComplex from(std::complex<double> z) {
    return {std::log(std::abs(z)), std::arg(z)};
  }
  LogComplex operator*(const LogComplex& o) const { return {log_abs + o.log_abs, arg + o.arg}; }
  LogComplex operator/(const LogComplex& o) const { return {log_abs - o.log_abs, arg - o.arg}; }
  LogComplex negated() const { return {log_abs, arg + kPi}; }

  LogComplex operator+(const LogComplex& o) const {
    const LogComplex& big = log_abs >= o.log_abs ? *this : o;
    const LogComplex& small = log_abs >= o.log_abs ? o : *this;
    if (std::isinf(small.log_abs) && small.log_abs < 0.0) return big;
    const double r = std::exp(small.log_abs - big.log_abs);
    if (r == 0.0) return big;
    const double d = small.arg - big.arg;
    const double re = 1.0 + r * std::cos(d);
    const double im = r * std::sin(d);
    const double mag = std::hypot(re, im);
    return {big.log_abs + std::log(mag), big.arg + std::atan2(im, re)};
  }

  std::complex<double> value() const {
    const double m = std::exp(log_abs);  // underflows to 0 gracefully
    return {m * std::cos(arg), m * std::sin(arg)};
  }
};

}  // namespace

BetheString build_string(int n_particles, double carrying_rapidity, double beta) {
  if (n_particles < 1)
    throw DomainError("build_string: need at least one particle, got " +
                      std::to_string(n_particles));
  if (!(beta > 0.0)) throw DomainError("build_string: beta must be positive, got " + fmt(beta));
  BetheString s;
  s.n_particles = n_particles;
  s.carrying_rapidity = carrying_rapidity;
  s.beta = beta;
  s.rapidities.reserve(n_particles);
  for (int j = 1; j <= n_particles; ++j)
    s.rapidities.emplace_back(carrying_rapidity,
                              0.5 * beta * static_cast<double>(n_particles + 1 - 2 * j));
  return s;
}

NCReport check_nc(const BetheString& s, const std::vector<std::complex<double>>& momenta) {
  if (momenta.size() != s.rapidities.size())
    throw DomainError("check_nc: momenta list has " + std::to_string(momenta.size()) +
                      " entries for a string of " + std::to_string(s.rapidities.size()));
  NCReport rep;
  rep.satisfied.resize(s.rapidities.size(), true);
  for (std::size_t j = 0; j < s.rapidities.size(); ++j) {
    const double imh = s.rapidities[j].imag();
    if (imh == 0.0 || std::abs(imh) <= 1e-15 * s.beta) continue;  // real constituent: exempt
    const double imk = momenta[j].imag();
    const bool ok = (imh > 0.0 && imk > 0.0) || (imh < 0.0 && imk < 0.0);
    rep.satisfied[j] = ok;
    if (!ok) {
      rep.pass = false;
      rep.offending.push_back(static_cast<int>(j) + 1);
    }
  }
  return rep;
}

std::vector<Residual> bae_residual(const MediumParams& p, const BetheString& s,
                                   const std::vector<std::complex<double>>& momenta,
                                   const std::vector<std::complex<double>>& omegas) {
  if (!p.radius_L)
    throw DomainError("bae_residual: finite L is required (set MediumParams::radius_L)");
  const std::size_t n = s.rapidities.size();
  if (momenta.size() != n || omegas.size() != n)
    throw DomainError("bae_residual: string, momenta and frequency lists must have equal length");

  const double L = *p.radius_L;
  const double beta = s.beta;
  const double ztol = 1e-12 * beta;
  const std::complex<double> half_width(0.0, 0.5 * beta);
  const std::complex<double> full_width(0.0, beta);

  std::vector<Residual> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> h = s.rapidities[j];
    const std::complex<double> k = momenta[j];
    const double sigma = h.imag() < 0.0 ? -1.0 : 1.0;

    // Oriented scattering side e^{i sigma k L} B^{sigma}.
    LogComplex lhs = LogComplex::from((h - half_width) / (h + half_width));
    if (sigma < 0.0) lhs = LogComplex{0.0, 0.0} / lhs;
    lhs.log_abs += -sigma * k.imag() * L;
    lhs.arg += sigma * k.real() * L;

    // Oriented product over the other constituents with the ideal-string
    // zeros and poles set aside.
    LogComplex prod{0.0, 0.0};
    int exact_zeros = 0;
    int exact_poles = 0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const std::complex<double> d = h - s.rapidities[l];
      const std::complex<double> num = sigma > 0.0 ? d - full_width : d + full_width;
      const std::complex<double> den = sigma > 0.0 ? d + full_width : d - full_width;
      if (std::abs(num) <= ztol)
        ++exact_zeros;
      else
        prod = prod * LogComplex::from(num);
      if (std::abs(den) <= ztol)
        ++exact_poles;
      else
        prod = prod / LogComplex::from(den);
    }
    if (exact_poles > exact_zeros)
      throw DomainError("bae_residual: unmatched pole at constituent " + std::to_string(j + 1) +
                        "; string spacing deviates from exact i*beta beyond 1e-12");

    LogComplex res;
    if (exact_zeros + exact_poles > 0) {
      // Equation solved for the vanishing string factors: the residual is
      // the deviation they would need, -LHS / (regular part).
      res = (lhs / prod).negated();
    } else {
      res = lhs + prod;
    }
    out[j].log_abs = res.log_abs;
    out[j].arg = res.arg;
    out[j].value = res.value();
  }
  return out;
}

namespace {

struct PhaseWindow {
  double lo;
  double hi;
};

PhaseWindow one_particle_window(const MediumParams& p, Branch branch) {
  const double tau = p.edge_guard();
  if (branch == Branch::Lower) return {tau, p.omega_perp - 2.0 * tau};
  if (branch == Branch::Upper) return {p.omega_par + 2.0 * tau, 10.0 * p.omega_par};
  throw DomainError("one-particle quantization: branch must be Lower or Upper");
}

double scattering_phase(double h, double beta) { return -2.0 * std::atan(beta / (2.0 * h)); }

double scattering_phase_derivative(double h, double beta) {
  return beta / (h * h + 0.25 * beta * beta);
}

}  // namespace

double one_particle_phase(const MediumParams& p, Branch branch, double omega) {
  if (!p.radius_L)
    throw DomainError("one_particle_phase: finite L is required (set MediumParams::radius_L)");
  (void)branch;
  return momentum_real(p, omega) * *p.radius_L +
         scattering_phase(rapidity_real(p, omega), p.beta);
}

int count_one_particle_modes(const MediumParams& p, Branch branch) {
  const PhaseWindow w = one_particle_window(p, branch);
  const double lo = one_particle_phase(p, branch, w.lo);
  const double hi = one_particle_phase(p, branch, w.hi);
  // Odd multiples of pi strictly inside (phase(lo), phase(hi)).
  const long m_lo = std::max(0L, static_cast<long>(std::floor((lo / kPi - 1.0) / 2.0)) + 1L);
  const long m_hi = static_cast<long>(std::ceil((hi / kPi - 1.0) / 2.0)) - 1L;
  return static_cast<int>(std::max(0L, m_hi - m_lo + 1L));
}

double solve_one_particle(const MediumParams& p, Branch branch, int mode_index) {
  if (mode_index < 0)
    throw DomainError("solve_one_particle: mode_index must be non-negative, got " +
                      std::to_string(mode_index));
  const PhaseWindow w = one_particle_window(p, branch);
  const double L = p.radius_L ? *p.radius_L
                              : throw DomainError(
                                    "solve_one_particle: finite L is required "
                                    "(set MediumParams::radius_L)");
  const double target = kPi * (2.0 * mode_index + 1.0);

  auto phase = [&](double omega) { return one_particle_phase(p, branch, omega) - target; };
  double lo = w.lo, hi = w.hi;
  double flo = phase(lo);
  const double fhi = phase(hi);
  if (!(flo < 0.0 && fhi > 0.0))
    throw NoRootError("solve_one_particle: mode " + std::to_string(mode_index) +
                      " falls outside the edge-guarded window; branch supports " +
                      std::to_string(count_one_particle_modes(p, branch)) + " modes");

  // Bracketed bisection to locate the root...
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phase(mid);
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  // ...then Newton with the analytic phase derivative to polish.
  double omega = 0.5 * (lo + hi);
  for (int i = 0; i < 40; ++i) {
    const double h = rapidity_real(p, omega);
    const double dphase = momentum_derivative(p, omega) * L +
                          scattering_phase_derivative(h, p.beta) * rapidity_derivative(p, omega);
    const double step = phase(omega) / dphase;
    omega -= step;
    if (omega <= w.lo || omega >= w.hi) omega = std::clamp(omega, lo, hi);
    if (std::abs(step) <= 1e-14 * std::abs(omega)) {
      // one extra correction to settle on the machine-precision fixpoint
      const double h2 = rapidity_real(p, omega);
      const double d2 = momentum_derivative(p, omega) * L +
                        scattering_phase_derivative(h2, p.beta) * rapidity_derivative(p, omega);
      omega -= phase(omega) / d2;
      break;
    }
  }
  return omega;
}

}  // namespace gapspec
