#include "cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "cli/emit.hpp"
#include "gapspec/bae.hpp"
#include "gapspec/errors.hpp"
#include "gapspec/spectrum.hpp"
#include "gapspec/stringmap.hpp"

namespace gapspec::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

MediumParams canonical() { return MediumParams{}; }

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Closed forms recoded from scratch; the reference side of criterion 1.
struct DirectForms {
  double wperp, wpar, w12, beta;
  explicit DirectForms(const MediumParams& p)
      : wperp(p.omega_perp), wpar(p.omega_par), w12(p.omega12), beta(p.beta) {}
  double eps(double w) const { return (w * w - wpar * wpar) / (w * w - wperp * wperp); }
  double deps(double w) const {
    // plain quotient rule, composed differently from the library form
    const double num = w * w - wpar * wpar;
    const double den = w * w - wperp * wperp;
    return (2.0 * w * den - num * 2.0 * w) / (den * den);
  }
  double a() const { return w12 * w12 / (std::pow(w12, 3.0) * std::pow(-eps(w12), 2.5)); }
  double b() const { return a() * (-3.0 / w12 - 2.5 * deps(w12) / eps(w12)); }
};

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// least-squares quadratic-in-q fit eps = c0 + c2 q^2; returns {c0, c2}
std::pair<double, double> fit_parabola(const std::vector<double>& q,
                                       const std::vector<double>& e) {
  const double n = static_cast<double>(q.size());
  double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double x = q[i] * q[i];
    sx += x;
    sxx += x * x;
    sy += e[i];
    sxy += x * e[i];
  }
  const double c2 = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double c0 = (sy - c2 * sx) / n;
  return {c0, c2};
}

CheckResult formula_reproduction() {
  CheckResult r{"formula_reproduction_l30", true, ""};
  const MediumParams p = canonical();
  const DirectForms d(p);
  const double a = d.a(), b = d.b();
  double worst = 0.0;
  auto track = [&](double got, double want) {
    worst = std::max(worst, rel(got, want));
    if (rel(got, want) >= 1e-12) r.pass = false;
  };

  const Linearization lin = linearize(p);
  track(lin.a, a);
  track(lin.b, b);
  for (int l = 1; l <= 30; ++l) {
    track(gap_soliton_linear(p, l).total_energy, 2.0 * p.omega12 * l - (p.beta / a) * l * l);
    track(band_halfwidth(p, l), b * p.beta * p.beta * (4.0 * l * l - 1.0) / (12.0 * a * a * a));
    const PinnedSoliton pin = pinned_soliton(p, l);
    track(pin.total_energy, p.omega12 * (2.0 * l + 1.0) - (p.beta / a) * l * (l + 1.0));
    track(pin.binding_energy, -(p.beta / a) * l);
    track(*pin.pair_extraction_energy, (p.beta / a) * (2.0 * l - 1.0));
    for (int l1 = 1; l1 < l; ++l1)
      track(dissociation_energy(p, l, l1), 2.0 * (p.beta / a) * l1 * (l - l1));
  }
  r.detail = "max rel err = " + num(worst) + " (tolerance 1e-12)";
  return r;
}

CheckResult attraction_criterion() {
  CheckResult r{"attraction_criterion", true, ""};
  const MediumParams p = canonical();
  const double tau = p.edge_guard();
  double min_lower = 1e300, max_upper = -1e300;
  for (int i = 0; i < 1000; ++i) {
    const double s = (i + 0.5) / 1000.0;
    const double lo = 2.0 * tau + s * (p.omega_perp - 3.0 * tau);
    const double up = p.omega_par + 2.0 * tau + s * 9.0 * p.omega_par;
    min_lower = std::min(min_lower, rapidity_derivative(p, lo));
    max_upper = std::max(max_upper, rapidity_derivative(p, up));
  }
  r.pass = min_lower > 0.0 && max_upper < 0.0;
  r.detail = "min h' on C- = " + num(min_lower) + "; max h' on C+ = " + num(max_upper);
  return r;
}

CheckResult residual_decay() {
  CheckResult r{"residual_decay_gap_pair", true, ""};
  const double etaH = 1e-4;
  std::vector<double> Ls = {1e3, 2e3, 4e3};
  std::vector<double> logs;
  double rate = 0.0;
  for (double L : Ls) {
    MediumParams p = canonical();
    p.radius_L = L;
    const double H = linearize(p).a * etaH;
    const GapSolitonState pair = gap_pair(p, H);
    rate = kappa(p, pair.xi[0]);
    const std::vector<Residual> res =
        bae_residual(p, build_string(2, H, p.beta), pair.momenta(), pair.frequencies());
    logs.push_back(std::max(res[0].log_abs, res[1].log_abs));
  }
  const double slope = fit_slope(Ls, logs);
  r.pass = rel(slope, -rate) < 0.02;
  r.detail = "slope = " + num(slope) + "; -kappa(xi) = " + num(-rate) +
             "; rel err = " + num(rel(slope, -rate));
  return r;
}

CheckResult one_particle_quantization() {
  CheckResult r{"one_particle_quantization", true, ""};
  MediumParams p = canonical();
  p.radius_L = 1e4;
  double worst = 0.0;
  std::vector<double> roots(201);
  for (int m = 0; m <= 200; ++m) roots[m] = solve_one_particle(p, Branch::Lower, m);
  for (int m = 0; m < 200; ++m) {
    const BetheString s = build_string(1, rapidity_real(p, roots[m]), p.beta);
    const std::vector<Residual> res =
        bae_residual(p, s, {std::complex<double>(momentum_real(p, roots[m]), 0.0)},
                     {std::complex<double>(roots[m], 0.0)});
    worst = std::max(worst, std::abs(res[0].value));
    if (m > 0 && !(roots[m] > roots[m - 1])) r.pass = false;
  }
  if (worst >= 1e-10) r.pass = false;

  // phase winding across [window start, midpoint beyond the 200th root]
  const double mid = 0.5 * (roots[199] + roots[200]);
  const double phi_lo = one_particle_phase(p, Branch::Lower, p.edge_guard());
  const double phi_hi = one_particle_phase(p, Branch::Lower, mid);
  const long m_lo = std::max(0L, static_cast<long>(std::floor((phi_lo / kPi - 1.0) / 2.0)) + 1L);
  const long m_hi = static_cast<long>(std::ceil((phi_hi / kPi - 1.0) / 2.0)) - 1L;
  const long winding = m_hi - m_lo + 1L;
  if (winding != 200) r.pass = false;
  r.detail = "max |residual| = " + num(worst) + "; winding = " + std::to_string(winding) +
             " for 200 roots";
  return r;
}

CheckResult exact_vs_linear_scaling() {
  CheckResult r{"exact_vs_linear_scaling", true, ""};
  std::vector<double> betas = {1e-3, 5e-4, 2.5e-4};
  std::vector<double> lx, ly;
  for (double b : betas) {
    MediumParams p = canonical();
    p.beta = b;
    double worst = 0.0;
    for (int l : {1, 2, 3}) {
      const GapSolitonState ex = gap_soliton_exact(p, l, 0.1 * b);
      const GapSolitonState ln = gap_soliton_linear(p, l);
      for (int j = 0; j < l; ++j) worst = std::max(worst, std::abs(ex.xi[j] - ln.xi[j]));
    }
    lx.push_back(std::log(b));
    ly.push_back(std::log(worst));
  }
  const double expn = fit_slope(lx, ly);
  r.pass = std::abs(expn - 2.0) <= 0.2;
  r.detail = "fitted exponent = " + num(expn) + " (expected 2 +- 0.2)";
  return r;
}

CheckResult effective_mass_consistency() {
  CheckResult r{"effective_mass_consistency", true, ""};
  // Run where the effective-mass approximation is inside its validity
  // regime; at beta = 1e-3 the next-order corrections already exceed the 5%
  // tolerance (band-bottom ratios 1.05 / 1.17 / 1.30 for l = 1, 2, 3).
  MediumParams p = canonical();
  p.beta = 1e-4;
  std::string detail;
  for (int l : {1, 2, 3}) {
    const double delta = band_halfwidth(p, l);
    const double mass = effective_mass(p, l);
    const double eps0 = gap_soliton_linear(p, l).energy_per_particle;
    std::vector<double> qs, es;
    for (int i = 0; i < 8; ++i) {
      const GapSolitonState s = gap_soliton_exact(p, l, 1.5e-6 * i);
      qs.push_back(s.momentum_per_particle);
      es.push_back(s.energy_per_particle);
    }
    const auto [c0, c2] = fit_parabola(qs, es);
    const double curvature_ratio = 2.0 * c2 * mass;
    const double depression_ratio = (eps0 - c0) / delta;
    if (std::abs(curvature_ratio - 1.0) > 0.05 || std::abs(depression_ratio - 1.0) > 0.05)
      r.pass = false;
    if (!detail.empty()) detail += "; ";
    detail += "l=" + std::to_string(l) + ": curv ratio " + num(curvature_ratio) +
              "; bottom ratio " + num(depression_ratio);
  }
  r.detail = detail + " (beta = 1e-4)";
  return r;
}

CheckResult stability_inequalities() {
  CheckResult r{"stability_inequalities", true, ""};
  const MediumParams p = canonical();
  double min_ud = 1e300;
  for (int l = 2; l <= 30; ++l)
    for (int l1 = 1; l1 < l; ++l1) min_ud = std::min(min_ud, dissociation_energy(p, l, l1));
  if (!(min_ud > 0.0)) r.pass = false;

  bool hierarchy = true;
  const PinnedSoliton p1 = pinned_soliton(p, 1);
  if (rel(*p1.pair_extraction_energy, std::abs(p1.binding_energy)) > 1e-9) hierarchy = false;
  for (int l = 2; l <= 30; ++l) {
    const PinnedSoliton s = pinned_soliton(p, l);
    if (!(*s.pair_extraction_energy > std::abs(s.binding_energy))) hierarchy = false;
  }
  if (!hierarchy) r.pass = false;
  r.detail = "min U_d = " + num(min_ud) + "; U_1 >= |U_l| with equality only at l = 1: " +
             (hierarchy ? "yes" : "no");
  return r;
}

CheckResult structural_invariants() {
  CheckResult r{"structural_invariants", true, ""};
  const MediumParams p = canonical();
  const Linearization lin = linearize(p);
  std::string detail;

  // energy reality across all constructed state kinds
  double worst_im = 0.0;
  auto reality = [&](const std::vector<std::complex<double>>& ws) {
    std::complex<double> e{0.0, 0.0};
    for (const auto& w : ws) e += w;
    worst_im = std::max(worst_im, std::abs(e.imag()) / std::abs(e.real()));
  };
  reality(ordinary_soliton(p, 5, -0.5).frequencies);
  reality(gap_pair(p, lin.a * 1e-4).frequencies());
  reality(gap_soliton_linear(p, 4).frequencies());
  reality(gap_soliton_corrected(p, 2, lin.a * 5e-5).frequencies());
  reality(gap_soliton_exact(p, 3, 1e-4).frequencies());
  reality(pinned_soliton(p, 3).frequencies());
  if (worst_im >= 1e-12) r.pass = false;
  detail += "max |Im E|/|E| = " + num(worst_im);

  // string conjugation symmetry
  bool conj_ok = true;
  for (int n = 1; n <= 50; ++n) {
    const BetheString s = build_string(n, -0.3, p.beta);
    for (int j = 0; j < n; ++j)
      if (s.rapidities[j] != std::conj(s.rapidities[n - 1 - j])) conj_ok = false;
  }
  if (!conj_ok) r.pass = false;
  detail += std::string("; conjugation N<=50: ") + (conj_ok ? "exact" : "broken");

  // NC behaviour: H > 0 passes for gap pairs and H < 0 candidates fail
  bool nc_ok = true;
  {
    const double xi = p.omega12 - p.beta / (2.0 * lin.a);
    const GapContinuation up = continue_gap(p, xi, 1e-4);
    nc_ok = nc_ok &&
            check_nc(build_string(2, lin.a * 1e-4, p.beta), {up.k, std::conj(up.k)}).pass;
    const GapContinuation dn = continue_gap(p, xi, -1e-4);
    nc_ok = nc_ok &&
            !check_nc(build_string(2, -lin.a * 1e-4, p.beta), {dn.k, std::conj(dn.k)}).pass;
    bool rejected = false;
    try {
      ordinary_soliton(p, 2, +0.4);
    } catch (const RegimeError&) {
      rejected = true;
    }
    nc_ok = nc_ok && rejected;
  }
  if (!nc_ok) r.pass = false;
  detail += std::string("; NC pass/fail behaviour: ") + (nc_ok ? "ok" : "broken");

  // kappa strictly decreasing
  bool mono = true;
  {
    const double tau = p.edge_guard();
    double prev = kappa(p, p.omega_perp + 2.0 * tau);
    for (int i = 1; i < 1000; ++i) {
      const double xi = p.omega_perp + 2.0 * tau + (p.gap_width() - 4.0 * tau) * i / 999.0;
      const double cur = kappa(p, xi);
      if (!(cur < prev)) mono = false;
      prev = cur;
    }
  }
  if (!mono) r.pass = false;
  detail += std::string("; kappa monotone: ") + (mono ? "yes" : "no");

  // soliton size decreasing in l
  bool shrink = true;
  {
    double prev = gap_soliton_linear(p, 1).size;
    for (int l = 2; l <= std::min(30, l_max(p)); ++l) {
      const double cur = gap_soliton_linear(p, l).size;
      if (!(cur < prev)) shrink = false;
      prev = cur;
    }
  }
  if (!shrink) r.pass = false;
  detail += std::string("; delta_l decreasing: ") + (shrink ? "yes" : "no");

  // analytic derivatives vs central finite differences
  double worst_fd = 0.0;
  auto fd = [&](auto f, double x, double scale) {
    const double h = 1e-7 * scale;
    return (f(x + h) - f(x - h)) / (2.0 * h);
  };
  for (double w : {0.3, 0.6, 0.9, 1.4, 2.2}) {
    worst_fd = std::max(worst_fd, rel(permittivity_derivative(p, w),
                                      fd([&](double x) { return permittivity(p, x); }, w, 1.0)));
    worst_fd = std::max(worst_fd, rel(momentum_derivative(p, w),
                                      fd([&](double x) { return momentum_real(p, x); }, w, 1.0)));
    worst_fd = std::max(worst_fd, rel(rapidity_derivative(p, w),
                                      fd([&](double x) { return rapidity_real(p, x); }, w, 1.0)));
  }
  for (double xi : {1.03, 1.1, 1.17}) {
    worst_fd = std::max(worst_fd,
                        rel(gap_decay_index_derivative(p, xi),
                            fd([&](double x) { return gap_decay_index(p, x); }, xi, 1.0)));
    worst_fd = std::max(
        worst_fd, rel(kappa_prime(p, xi), fd([&](double x) { return kappa(p, x); }, xi, 1.0)));
    worst_fd = std::max(
        worst_fd, rel(phi_derivative(p, xi), fd([&](double x) { return phi(p, x); }, xi, 1.0)));
  }
  if (worst_fd >= 1e-6) r.pass = false;
  detail += "; max derivative-FD rel err = " + num(worst_fd);

  r.detail = detail;
  return r;
}

}  // namespace

std::vector<std::function<CheckResult()>> core_check_runners() {
  return {formula_reproduction,    attraction_criterion,       residual_decay,
          one_particle_quantization, exact_vs_linear_scaling,  effective_mass_consistency,
          stability_inequalities,  structural_invariants};
}

std::vector<CheckResult> run_core_checks() {
  std::vector<CheckResult> out;
  for (const auto& runner : core_check_runners()) out.push_back(runner());
  return out;
}

CheckResult determinism_check() {
  CheckResult r{"determinism_parallel", true, ""};
  RunConfig band_cfg;
  band_cfg.l = 1;
  band_cfg.points = 100;

  std::vector<std::string> blobs;
  for (unsigned threads : {1u, 4u, 8u}) {
    const std::vector<CheckResult> core = run_core_checks();
    const Table vt = make_validate_table(RunConfig{}, core);
    const Table bt = make_band_table(band_cfg, threads);
    blobs.push_back(emit_csv(vt) + emit_json(vt) + emit_csv(bt) + emit_json(bt));
  }
  r.pass = blobs[0] == blobs[1] && blobs[1] == blobs[2];
  r.detail = "validate + 100-point band at threads 1/4/8: " +
             std::string(r.pass ? "byte-identical" : "outputs differ") + " (" +
             std::to_string(blobs[0].size()) + " bytes)";
  return r;
}

std::vector<CheckResult> run_validation_suite() {
  std::vector<CheckResult> results = run_core_checks();
  results.push_back(determinism_check());
  return results;
}

}  // namespace gapspec::cli
