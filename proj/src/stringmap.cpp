#include "gapspec/stringmap.hpp"

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

void require_propagating(const MediumParams& p, double lambda, const char* op) {
  const Branch br = classify(p, lambda);
  if (br != Branch::Lower && br != Branch::Upper)
    throw DomainError(std::string(op) + ": lambda = " + fmt(lambda) +
                      " is not on a propagating branch (use the gap continuation inside the gap)");
}

void require_gap(const MediumParams& p, double xi, const char* op) {
  if (classify(p, xi) != Branch::Gap)
    throw DomainError(std::string(op) + ": xi = " + fmt(xi) + " is not strictly inside the gap (" +
                      fmt(p.omega_perp) + ", " + fmt(p.omega_par) + ")");
}

}  // namespace

double momentum_real(const MediumParams& p, double lambda) {
  require_propagating(p, lambda, "momentum_real");
  return lambda * refractive_index(p, lambda);
}

double momentum_derivative(const MediumParams& p, double lambda) {
  require_propagating(p, lambda, "momentum_derivative");
  return refractive_index(p, lambda) + lambda * refractive_index_derivative(p, lambda);
}

double rapidity_real(const MediumParams& p, double lambda) {
  require_propagating(p, lambda, "rapidity_real");
  const double n = refractive_index(p, lambda);
  const double w12 = p.omega12;
  return w12 * w12 * (lambda - p.omega12_bar()) / (std::pow(lambda, 3) * std::pow(n, 5));
}

double rapidity_derivative(const MediumParams& p, double lambda) {
  require_propagating(p, lambda, "rapidity_derivative");
  const double n = refractive_index(p, lambda);
  const double np = refractive_index_derivative(p, lambda);
  const double w12 = p.omega12;
  const double pre = w12 * w12 / (std::pow(lambda, 3) * std::pow(n, 5));
  return pre * (1.0 - (lambda - p.omega12_bar()) * (3.0 / lambda + 5.0 * np / n));
}

double f_factor(const MediumParams& p, double xi) {
  require_gap(p, xi, "f_factor");
  const double nu = gap_decay_index(p, xi);
  return p.omega12 * p.omega12 / (std::pow(xi, 3) * std::pow(nu, 5));
}

double f_factor_derivative(const MediumParams& p, double xi) {
  const double nu = gap_decay_index(p, xi);
  const double nup = gap_decay_index_derivative(p, xi);
  return -f_factor(p, xi) * (3.0 / xi + 5.0 * nup / nu);
}

double phi(const MediumParams& p, double xi) {
  return (xi - p.omega12_bar()) * f_factor(p, xi);
}

double phi_derivative(const MediumParams& p, double xi) {
  return f_factor(p, xi) + (xi - p.omega12_bar()) * f_factor_derivative(p, xi);
}

OutsideContinuation continue_outside(const MediumParams& p, double lambda, double eta) {
  OutsideContinuation c;
  c.k = {momentum_real(p, lambda), eta * momentum_derivative(p, lambda)};
  c.h = {rapidity_real(p, lambda), eta * rapidity_derivative(p, lambda)};
  c.beyond_linear_regime = std::abs(eta) > 0.1 * std::abs(lambda);
  return c;
}

GapContinuation continue_gap(const MediumParams& p, double xi, double eta) {
  require_gap(p, xi, "continue_gap");
  if (eta == 0.0)
    throw DomainError("continue_gap: eta = 0 is the branch point; the two boundary values "
                      "differ (n(xi +- i0) = +- i nu)");
  const double s = eta > 0.0 ? 1.0 : -1.0;
  GapContinuation c;
  c.k = {s * (-eta * kappa_prime(p, xi)), s * kappa(p, xi)};
  c.h = {s * (eta * phi_derivative(p, xi)), s * (-phi(p, xi))};
  return c;
}

namespace {

// Branch-pinned boundary evaluation for Im omega >= 0: n(omega) = i sqrt(-eps(omega)),
// continuous with n(xi + i0) = i nu(xi).  The square root never crosses its
// cut here because -eps has positive real part throughout the guarded gap
// neighbourhood; a guard rejects excursions that would leave that region.
std::complex<double> gap_n5_upper(const MediumParams& p, std::complex<double> w) {
  const std::complex<double> num = w * w - p.omega_par * p.omega_par;
  const std::complex<double> den = w * w - p.omega_perp * p.omega_perp;
  const std::complex<double> meps = -num / den;
  if (meps.real() <= 0.0 && std::abs(meps.imag()) < 1e-300 * std::abs(meps.real()))
    throw DomainError("gap continuation: evaluation point left the fixed-branch region");
  const std::complex<double> nu = std::sqrt(meps);
  const std::complex<double> n = std::complex<double>(0.0, 1.0) * nu;
  return n * n * n * n * n;
}

std::complex<double> h_upper(const MediumParams& p, std::complex<double> w) {
  const double w12 = p.omega12;
  return w12 * w12 * (w - p.omega12_bar()) / (w * w * w * gap_n5_upper(p, w));
}

}  // namespace

GapContinuation gap_continuation_exact(const MediumParams& p, std::complex<double> omega) {
  require_gap(p, omega.real(), "gap_continuation_exact");
  const bool lower_half = omega.imag() < 0.0;
  const std::complex<double> w = lower_half ? std::conj(omega) : omega;
  GapContinuation c;
  const std::complex<double> nu = std::sqrt(-(w * w - p.omega_par * p.omega_par) /
                                            (w * w - p.omega_perp * p.omega_perp));
  c.k = w * std::complex<double>(0.0, 1.0) * nu;
  c.h = h_upper(p, w);
  if (lower_half) {
    c.k = std::conj(c.k);
    c.h = std::conj(c.h);
  }
  return c;
}

std::complex<double> gap_rapidity_derivative_exact(const MediumParams& p,
                                                   std::complex<double> omega) {
  require_gap(p, omega.real(), "gap_rapidity_derivative_exact");
  const bool lower_half = omega.imag() < 0.0;
  const std::complex<double> w = lower_half ? std::conj(omega) : omega;
  // d log h = 1/(w - omega12_bar) - 3/w - (5/2) eps'/eps, written without the
  // removable 0/0 at w = omega12_bar.
  const std::complex<double> b = w * w - p.omega_perp * p.omega_perp;
  const double d = p.omega_par * p.omega_par - p.omega_perp * p.omega_perp;
  const std::complex<double> eps = (w * w - p.omega_par * p.omega_par) / b;
  const std::complex<double> epsp = 2.0 * w * d / (b * b);
  const double w12 = p.omega12;
  const std::complex<double> pre = w12 * w12 / (w * w * w * gap_n5_upper(p, w));
  std::complex<double> dh =
      pre * (1.0 - (w - p.omega12_bar()) * (3.0 / w + 2.5 * epsp / eps));
  return lower_half ? std::conj(dh) : dh;
}

Linearization linearize(const MediumParams& p) {
  const double wbar = p.omega12_bar();
  if (classify(p, wbar) != Branch::Gap)
    throw RegimeError("linearize: omega12 = " + fmt(p.omega12) +
                      " must lie strictly inside the gap (" + fmt(p.omega_perp) + ", " +
                      fmt(p.omega_par) + ")");
  Linearization lin;
  lin.a = f_factor(p, wbar);
  lin.b = f_factor_derivative(p, wbar);

  // 1% validity radius of the quadratic model, scanned independently on each
  // side of omega12; the relative error grows monotonically from zero near
  // the expansion point.
  const double tau = p.edge_guard();
  auto rel_err = [&](double x) {
    const double quad = lin.a * x + lin.b * x * x;
    const double exact = phi(p, wbar + x);
    return std::abs(quad - exact) / std::abs(exact);
  };
  auto side_radius = [&](double sign) {
    const double span =
        (sign > 0.0 ? p.omega_par - tau - wbar : wbar - p.omega_perp - tau) - tau;
    double hi = 0.999 * span;
    if (rel_err(sign * hi) < 0.01) return hi;
    double lo = 1e-9 * span;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (rel_err(sign * mid) < 0.01 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  lin.valid_radius = std::min(side_radius(+1.0), side_radius(-1.0));
  return lin;
}

}  // namespace gapspec
