#include "gapspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gapspec/errors.hpp"
#include "gapspec/parallel.hpp"

namespace gapspec {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void require_gap_regime(const MediumParams& p, const char* op) {
  const Branch br = classify(p, p.omega12_bar());
  if (br == Branch::Upper)
    throw RegimeError(std::string(op) + ": omega12 above the gap admits composite solitons, "
                      "an unsupported regime");
  if (br != Branch::Gap)
    throw RegimeError(std::string(op) + ": omega12 = " + fmt(p.omega12) +
                      " must lie strictly inside the gap");
}

// Extremum of phi across the gap; phi is negative below omega12 and turns
// back towards zero near the lower edge, so solvable Im h targets are
// bounded by |phi| at this point.
double phi_argmin(const MediumParams& p) {
  const double tau = p.edge_guard();
  double lo = p.omega_perp + tau;          // phi' < 0 here
  double hi = p.omega12_bar() - tau;       // phi' ~ a > 0 here
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (phi_derivative(p, mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// xi on the branch adjoining omega12 with phi(xi) = target (target < 0).
double solve_phi(const MediumParams& p, double xi_min, double target) {
  double lo = xi_min;                       // phi minimal here
  double hi = p.omega12_bar() - 1e-18;      // phi -> 0- here
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (phi(p, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> linear_frequencies(const MediumParams& p, int l, double a) {
  std::vector<double> xi(l);
  for (int j = 1; j <= l; ++j)
    xi[j - 1] = p.omega12_bar() - (p.beta / a) * (l + 0.5 - j);
  return xi;
}

void verify_nc(const GapSolitonState& st, const MediumParams& p, const char* op) {
  const BetheString s = build_string(2 * st.n_pairs, st.carrying_rapidity, p.beta);
  const NCReport nc = check_nc(s, st.momenta());
  if (!nc.pass)
    throw RegimeError(std::string(op) + ": necessary condition violated at constituent " +
                      std::to_string(nc.offending.front()));
}

}  // namespace

const char* to_string(SolitonMode m) {
  switch (m) {
    case SolitonMode::Linear: return "linear";
    case SolitonMode::Corrected: return "corrected";
    case SolitonMode::Exact: return "exact";
  }
  return "?";
}

std::vector<std::complex<double>> GapSolitonState::frequencies() const {
  std::vector<std::complex<double>> w;
  w.reserve(2 * xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) w.emplace_back(xi[j], eta[j]);
  for (std::size_t j = xi.size(); j-- > 0;) w.emplace_back(xi[j], -eta[j]);
  return w;
}

std::vector<std::complex<double>> GapSolitonState::momenta() const {
  std::vector<std::complex<double>> k;
  k.reserve(2 * q.size());
  for (std::size_t j = 0; j < q.size(); ++j) k.emplace_back(q[j], kappa_im[j]);
  for (std::size_t j = q.size(); j-- > 0;) k.emplace_back(q[j], -kappa_im[j]);
  return k;
}

std::vector<std::complex<double>> PinnedSoliton::frequencies() const {
  std::vector<std::complex<double>> w;
  w.reserve(2 * xi.size() + 1);
  for (double x : xi) w.emplace_back(x, 0.0);
  w.emplace_back(bound_state_frequency, 0.0);
  for (std::size_t j = xi.size(); j-- > 0;) w.emplace_back(xi[j], 0.0);
  return w;
}

int l_max(const MediumParams& p) {
  p.validate();
  require_gap_regime(p, "l_max");
  const double a = linearize(p).a;
  const double span = p.omega12_bar() - p.omega_perp - p.edge_guard();
  int l = static_cast<int>(std::floor(span * a / p.beta + 0.5));
  while (l >= 1 && !(p.omega12_bar() - (p.beta / a) * (l - 0.5) > p.omega_perp + p.edge_guard()))
    --l;
  return std::max(l, 0);
}

int l_max_exact(const MediumParams& p) {
  p.validate();
  require_gap_regime(p, "l_max_exact");
  const double max_t = -phi(p, phi_argmin(p));
  const int bound = static_cast<int>(std::floor(0.999999 * max_t / p.beta + 0.5));
  return std::min(bound, l_max(p));
}

double band_halfwidth(const MediumParams& p, int l) {
  if (l < 1) throw DomainError("band_halfwidth: l must be >= 1");
  const Linearization lin = linearize(p);
  return lin.b * p.beta * p.beta * (4.0 * l * l - 1.0) / (12.0 * lin.a * lin.a * lin.a);
}

double effective_mass(const MediumParams& p, int l) {
  if (l < 1) throw DomainError("effective_mass: l must be >= 1");
  if (l > l_max(p))
    throw WindowError("effective_mass: l = " + std::to_string(l) +
                      " exceeds the supported bound l_max = " + std::to_string(l_max(p)));
  const Linearization lin = linearize(p);
  double sum = 0.0;
  for (double x : linear_frequencies(p, l, lin.a)) sum += std::abs(kappa_prime(p, x));
  return lin.a * sum * sum / (2.0 * lin.b * l * l);
}

OrdinarySoliton ordinary_soliton(const MediumParams& p, int n_particles, double H) {
  p.validate();
  if (n_particles < 1) throw DomainError("ordinary_soliton: need at least one particle");
  if (!(H < 0.0))
    throw RegimeError("ordinary_soliton: requires a negative carrying rapidity, got H = " +
                      fmt(H) + "; no lower-branch root exists for H >= 0");
  if (classify(p, p.omega12_bar()) == Branch::Upper)
    throw RegimeError("ordinary_soliton: omega12 above the gap admits composite solitons, "
                      "an unsupported regime");

  // h is monotone on the edge-guarded lower branch, rising from -inf to 0-.
  const double tau = p.edge_guard();
  const double wlo = tau, whi = p.omega_perp - tau;
  const double hlo = rapidity_real(p, wlo), hhi = rapidity_real(p, whi);
  if (!(hlo < H && H < hhi))
    throw NoRootError("ordinary_soliton: h(Omega) = " + fmt(H) +
                      " has no root on the edge-guarded lower branch; reachable range is (" +
                      fmt(hlo) + ", " + fmt(hhi) + ")");
  double lo = wlo, hi = whi;
  for (int i = 0; i < 200 && (hi - lo) > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (rapidity_real(p, mid) < H ? lo : hi) = mid;
  }
  double omega = 0.5 * (lo + hi);
  for (int i = 0; i < 40; ++i) {
    const double step = (rapidity_real(p, omega) - H) / rapidity_derivative(p, omega);
    omega -= step;
    if (std::abs(step) <= 1e-14 * omega) {
      omega -= (rapidity_real(p, omega) - H) / rapidity_derivative(p, omega);
      break;
    }
  }

  OrdinarySoliton sol;
  sol.n_particles = n_particles;
  sol.carrying_rapidity = H;
  sol.carrier = omega;
  sol.energy = omega * n_particles;
  const double hp = rapidity_derivative(p, omega);
  sol.width = p.beta / hp;
  sol.momentum = momentum_real(p, omega);
  sol.decay = p.beta * momentum_derivative(p, omega) / hp;
  for (int j = 1; j <= n_particles; ++j) {
    const double m = static_cast<double>(n_particles + 1 - 2 * j);
    sol.frequencies.emplace_back(omega, 0.5 * sol.width * m);
    sol.momenta.emplace_back(sol.momentum, 0.5 * sol.decay * m);
  }

  const NCReport nc = check_nc(build_string(n_particles, H, p.beta), sol.momenta);
  if (!nc.pass)
    throw RegimeError("ordinary_soliton: necessary condition violated at constituent " +
                      std::to_string(nc.offending.front()));
  return sol;
}

GapSolitonState gap_pair(const MediumParams& p, double H) {
  p.validate();
  require_gap_regime(p, "gap_pair");
  if (!(H > 0.0))
    throw RegimeError("gap_pair: requires a positive carrying rapidity, got H = " + fmt(H) +
                      "; only strings with H > 0 map to gap states");
  const Linearization lin = linearize(p);
  const double xi = p.omega12_bar() - p.beta / (2.0 * lin.a);
  if (!(xi > p.omega_perp + p.edge_guard()))
    throw WindowError("gap_pair: pair frequency " + fmt(xi) + " falls outside the allowed window");
  const double eta = H / lin.a;

  GapSolitonState st;
  st.n_pairs = 1;
  st.carrying_rapidity = H;
  st.mode = SolitonMode::Linear;
  st.xi = {xi};
  st.eta = {eta};
  st.q = {eta * std::abs(kappa_prime(p, xi))};
  st.kappa_im = {kappa(p, xi)};
  st.total_energy = 2.0 * xi;
  st.energy_per_particle = xi;
  st.band_halfwidth = band_halfwidth(p, 1);
  st.effective_mass = effective_mass(p, 1);
  st.size = 1.0 / st.kappa_im[0];
  st.momentum_per_particle = st.q[0];
  st.beyond_valid_radius = p.beta / (2.0 * lin.a) > lin.valid_radius;
  verify_nc(st, p, "gap_pair");
  return st;
}

GapSolitonState gap_soliton_linear(const MediumParams& p, int l) {
  p.validate();
  require_gap_regime(p, "gap_soliton_linear");
  if (l < 1) throw DomainError("gap_soliton_linear: l must be >= 1");
  if (l > l_max(p))
    throw WindowError("gap_soliton_linear: l = " + std::to_string(l) +
                      " pushes the deepest pair frequency outside the allowed window; "
                      "largest supported l is " + std::to_string(l_max(p)));
  const Linearization lin = linearize(p);

  GapSolitonState st;
  st.n_pairs = l;
  st.carrying_rapidity = 0.0;
  st.mode = SolitonMode::Linear;
  st.xi = linear_frequencies(p, l, lin.a);
  st.eta.assign(l, 0.0);
  st.q.assign(l, 0.0);
  for (double x : st.xi) st.kappa_im.push_back(kappa(p, x));
  double sum = 0.0;
  for (double x : st.xi) sum += x;
  st.total_energy = 2.0 * sum;
  st.energy_per_particle = st.total_energy / (2.0 * l);
  st.band_halfwidth = band_halfwidth(p, l);
  st.effective_mass = effective_mass(p, l);
  st.size = 1.0 / st.kappa_im[0];
  st.momentum_per_particle = 0.0;
  st.beyond_valid_radius = (p.beta / lin.a) * (l - 0.5) > lin.valid_radius;
  return st;
}

double dissociation_energy(const MediumParams& p, int l, int l1) {
  p.validate();
  require_gap_regime(p, "dissociation_energy");
  if (l < 1 || l1 < 0 || l1 > l)
    throw DomainError("dissociation_energy: need 0 <= l1 <= l with l >= 1");
  const double a = linearize(p).a;
  // exact integer product keeps U_d(l, l1) == U_d(l, l - l1) bitwise
  const double split = static_cast<double>(l1) * static_cast<double>(l - l1);
  return 2.0 * (p.beta / a) * split;
}

GapSolitonState gap_soliton_corrected(const MediumParams& p, int l, double H) {
  p.validate();
  require_gap_regime(p, "gap_soliton_corrected");
  if (l < 1) throw DomainError("gap_soliton_corrected: l must be >= 1");
  if (l > l_max(p))
    throw WindowError("gap_soliton_corrected: l = " + std::to_string(l) +
                      " exceeds the supported bound l_max = " + std::to_string(l_max(p)));
  if (H < 0.0)
    throw RegimeError("gap_soliton_corrected: carrying rapidity must be >= 0, got " + fmt(H));
  const Linearization lin = linearize(p);
  const double eta = H / lin.a;
  const double wbar = p.omega12_bar();

  GapSolitonState st;
  st.n_pairs = l;
  st.carrying_rapidity = H;
  st.mode = SolitonMode::Corrected;
  const std::vector<double> xi0 = linear_frequencies(p, l, lin.a);
  double qsum = 0.0;
  for (double x0 : xi0) {
    const double dx = x0 - wbar;
    const double x = x0 - (lin.b / lin.a) * dx * dx + (lin.b / lin.a) * eta * eta;
    if (!(x > p.omega_perp + p.edge_guard()) || !(x < wbar))
      throw WindowError("gap_soliton_corrected: corrected frequency " + fmt(x) +
                        " leaves the allowed window (" + fmt(p.omega_perp) + ", " + fmt(wbar) +
                        ")");
    if (std::abs(x - wbar) > lin.valid_radius)
      throw WindowError("gap_soliton_corrected: correction places a pair " + fmt(std::abs(x - wbar)) +
                        " from omega12, beyond the 1% linearization radius " +
                        fmt(lin.valid_radius));
    st.xi.push_back(x);
    st.eta.push_back(eta);
    st.q.push_back(eta * std::abs(kappa_prime(p, x0)));
    st.kappa_im.push_back(kappa(p, x));
    qsum += st.q.back();
  }
  double sum = 0.0;
  for (double x : st.xi) sum += x;
  st.total_energy = 2.0 * sum;
  st.band_halfwidth = band_halfwidth(p, l);
  st.effective_mass = effective_mass(p, l);
  st.momentum_per_particle = qsum / l;
  st.energy_per_particle =
      (wbar - (p.beta / (2.0 * lin.a)) * l) - st.band_halfwidth +
      st.momentum_per_particle * st.momentum_per_particle / (2.0 * st.effective_mass);
  st.size = 1.0 / kappa(p, st.xi[0]);
  st.beyond_valid_radius = false;
  verify_nc(st, p, "gap_soliton_corrected");
  return st;
}

GapSolitonState gap_soliton_exact(const MediumParams& p, int l, double H) {
  p.validate();
  require_gap_regime(p, "gap_soliton_exact");
  if (l < 1) throw DomainError("gap_soliton_exact: l must be >= 1");
  if (H < 0.0)
    throw RegimeError("gap_soliton_exact: carrying rapidity must be >= 0, got " + fmt(H));
  const double xi_min = phi_argmin(p);
  const double max_t = -phi(p, xi_min);
  if (p.beta * (l - 0.5) >= max_t)
    throw WindowError("gap_soliton_exact: Im h target beta*(l-1/2) = " +
                      fmt(p.beta * (l - 0.5)) + " exceeds the reachable maximum |phi| = " +
                      fmt(max_t) + "; largest supported l is " + std::to_string(l_max_exact(p)));
  const Linearization lin = linearize(p);
  const double wbar = p.omega12_bar();
  const double tol = 1e-12 * p.beta;

  GapSolitonState st;
  st.n_pairs = l;
  st.carrying_rapidity = H;
  st.mode = SolitonMode::Exact;

  for (int j = 1; j <= l; ++j) {
    const double t = p.beta * (l - j + 0.5);
    // Initial guess from the corrected map, pulled back to the reachable
    // branch when the expansion has already broken down.
    double eta = H / lin.a;
    const double dx0 = -(p.beta / lin.a) * (l + 0.5 - j);
    double xi = wbar + dx0 - (lin.b / lin.a) * dx0 * dx0 + (lin.b / lin.a) * eta * eta;
    if (!(xi > xi_min) || !(xi < wbar)) {
      xi = solve_phi(p, xi_min, -t);
      eta = H / phi_derivative(p, xi);
    }

    bool converged = false;
    bool retried = false;
    double f1 = 0.0, f2 = 0.0;
    for (int it = 0; it < 50; ++it) {
      const std::complex<double> h = gap_continuation_exact(p, {xi, eta}).h;
      f1 = h.real() - H;
      f2 = h.imag() - t;
      if (std::abs(f1) <= tol && std::abs(f2) <= tol) {
        converged = true;
        break;
      }
      const std::complex<double> dh = gap_rapidity_derivative_exact(p, {xi, eta});
      const double det = std::norm(dh);
      double dxi = (dh.real() * f1 + dh.imag() * f2) / det;
      double deta = (-dh.imag() * f1 + dh.real() * f2) / det;
      // Half-step damping whenever the residual grows.
      const double r0 = std::max(std::abs(f1), std::abs(f2));
      for (int halve = 0; halve < 10; ++halve) {
        const double nxi = std::clamp(xi - dxi, p.omega_perp + p.edge_guard(), wbar - 1e-18);
        const double neta = std::max(eta - deta, 0.0);
        const std::complex<double> hn = gap_continuation_exact(p, {nxi, neta}).h;
        if (std::max(std::abs(hn.real() - H), std::abs(hn.imag() - t)) <= r0 || halve == 9) {
          xi = nxi;
          eta = neta;
          break;
        }
        dxi *= 0.5;
        deta *= 0.5;
      }
      if (it == 49 && !retried) {
        // restart from a bracketed prelocate on the phi branch
        retried = true;
        it = -1;
        xi = solve_phi(p, xi_min, -t);
        eta = H / phi_derivative(p, xi);
      }
    }
    if (!converged)
      throw ConvergenceError("gap_soliton_exact: pair " + std::to_string(j) +
                             " did not converge; last iterate xi = " + fmt(xi) + ", eta = " +
                             fmt(eta) + ", residuals (" + fmt(f1) + ", " + fmt(f2) + ")");

    const GapContinuation c = gap_continuation_exact(p, {xi, eta});
    st.xi.push_back(xi);
    st.eta.push_back(eta);
    st.q.push_back(c.k.real());
    st.kappa_im.push_back(c.k.imag());
  }

  double sum = 0.0, qsum = 0.0;
  for (double x : st.xi) sum += x;
  for (double qq : st.q) qsum += qq;
  st.total_energy = 2.0 * sum;
  st.energy_per_particle = st.total_energy / (2.0 * l);
  st.momentum_per_particle = qsum / l;
  st.band_halfwidth = l <= l_max(p) ? band_halfwidth(p, l) : std::numeric_limits<double>::quiet_NaN();
  st.effective_mass = l <= l_max(p) ? effective_mass(p, l) : std::numeric_limits<double>::quiet_NaN();
  st.size = 1.0 / kappa(p, st.xi[0]);
  double worst = 0.0;
  for (double x : st.xi) worst = std::max(worst, std::abs(x - wbar));
  st.beyond_valid_radius = worst > lin.valid_radius;
  verify_nc(st, p, "gap_soliton_exact");
  return st;
}

PinnedSoliton pinned_soliton(const MediumParams& p, int l) {
  p.validate();
  require_gap_regime(p, "pinned_soliton");
  if (l < 0) throw DomainError("pinned_soliton: l must be >= 0");
  const Linearization lin = linearize(p);
  const double wbar = p.omega12_bar();

  PinnedSoliton st;
  st.n_pairs = l;
  st.bound_state_frequency = wbar;
  for (int j = 1; j <= l; ++j) {
    const double x = wbar - (p.beta / lin.a) * (l - j + 1);
    if (!(x > p.omega_perp + p.edge_guard()))
      throw WindowError("pinned_soliton: pair frequency " + fmt(x) +
                        " falls outside the allowed window; largest supported l is " +
                        std::to_string(static_cast<int>(
                            std::floor((wbar - p.omega_perp - p.edge_guard()) * lin.a / p.beta))));
    st.xi.push_back(x);
  }
  double sum = 0.0;
  for (double x : st.xi) sum += x;
  st.total_energy = wbar + 2.0 * sum;

  // Pinning energetics by direct bookkeeping against the mobile states.
  auto pinned_energy = [&](int pairs) {
    double e = wbar;
    for (int j = 1; j <= pairs; ++j) e += 2.0 * (wbar - (p.beta / lin.a) * (pairs - j + 1));
    return e;
  };
  if (l >= 1) {
    st.binding_energy = st.total_energy - (wbar + gap_soliton_linear(p, l).total_energy);
    st.pair_extraction_energy =
        (pinned_energy(l - 1) + gap_soliton_linear(p, 1).total_energy) - st.total_energy;
  }
  return st;
}

BandTable band_structure(const MediumParams& p, int l, const std::vector<double>& H_grid,
                         unsigned threads) {
  p.validate();
  require_gap_regime(p, "band_structure");
  if (l < 1) throw DomainError("band_structure: l must be >= 1");

  BandTable table;
  table.n_pairs = l;
  table.points.resize(H_grid.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();

  parallel_for(H_grid.size(), threads, [&](std::size_t i) {
    BandPoint& pt = table.points[i];
    pt.carrying_rapidity = H_grid[i];
    pt.q_corrected = pt.eps_corrected = pt.q_exact = pt.eps_exact = nan;
    std::string err;
    try {
      const GapSolitonState c = gap_soliton_corrected(p, l, H_grid[i]);
      pt.q_corrected = c.momentum_per_particle;
      pt.eps_corrected = c.energy_per_particle;
    } catch (const std::exception& e) {
      err += std::string("corrected: ") + e.what();
    }
    try {
      const GapSolitonState x = gap_soliton_exact(p, l, H_grid[i]);
      pt.q_exact = x.momentum_per_particle;
      pt.eps_exact = x.energy_per_particle;
    } catch (const std::exception& e) {
      if (!err.empty()) err += "; ";
      err += std::string("exact: ") + e.what();
    }
    if (!err.empty()) pt.error = err;
  });

  // Where the quadratic model stops tracking the exact dispersion.
  if (l <= l_max(p)) {
    const double eps0 = p.omega12_bar() - (p.beta / (2.0 * linearize(p).a)) * l;
    const double delta = band_halfwidth(p, l);
    const double mass = effective_mass(p, l);
    for (const BandPoint& pt : table.points) {
      if (pt.error || !(pt.q_exact > 0.0)) continue;
      const double kinetic = pt.q_exact * pt.q_exact / (2.0 * mass);
      const double quad = eps0 - delta + kinetic;
      if (std::abs(pt.eps_exact - quad) > 0.1 * kinetic) {
        if (!table.q_mass_limit || pt.q_exact < *table.q_mass_limit)
          table.q_mass_limit = pt.q_exact;
      }
    }
  }
  return table;
}

}  // namespace gapspec
