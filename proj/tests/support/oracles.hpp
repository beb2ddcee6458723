// Test-only oracles, kept independent of the library implementation paths:
// closed forms are re-coded locally from scratch, roots are located by plain
// bisection, and derivatives are checked against central finite differences.
#pragma once

#include <cmath>
#include <functional>

namespace oracles {

// Central finite difference with step scaled to the argument.
inline double central_diff(const std::function<double(double)>& f, double x,
                           double scale = 1.0) {
  const double h = 1e-7 * scale;
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Sign-change bisection to a requested interval width.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double width = 1e-12) {
  double flo = f(lo);
  for (int i = 0; i < 300 && (hi - lo) > width; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Independent evaluation of the canonical closed forms (omega_perp = 1,
// omega_par = 1.2, omega12 = 1.1 unless stated otherwise), written directly
// from the dielectric model.
struct CanonicalMedium {
  double wperp = 1.0, wpar = 1.2, w12 = 1.1;

  double eps(double w) const { return (w * w - wpar * wpar) / (w * w - wperp * wperp); }
  double n(double w) const { return std::sqrt(eps(w)); }
  double nu(double x) const { return std::sqrt(-eps(x)); }
  double kappav(double x) const { return x * nu(x); }
  double k(double w) const { return w * n(w); }
  double h(double w) const {
    return w12 * w12 * (w - w12) / (w * w * w * std::pow(n(w), 5.0));
  }
  double f(double x) const { return w12 * w12 / (x * x * x * std::pow(nu(x), 5.0)); }
  double phiv(double x) const { return (x - w12) * f(x); }
};

}  // namespace oracles
