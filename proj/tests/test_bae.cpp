#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gapspec/bae.hpp"
#include "gapspec/errors.hpp"
#include "gapspec/spectrum.hpp"
#include "gapspec/stringmap.hpp"
#include "support/oracles.hpp"
#include "support/reference_values.hpp"

using namespace gapspec;
using cplx = std::complex<double>;

namespace {

MediumParams canonical(double L = 0.0) {
  MediumParams p;
  if (L > 0.0) p.radius_L = L;
  return p;
}

}  // namespace

TEST_CASE("build_string: direct substitution cases") {
  const BetheString one = build_string(1, 0.5, 1e-3);
  REQUIRE(one.rapidities.size() == 1);
  CHECK(one.rapidities[0] == cplx(0.5, 0.0));

  const BetheString two = build_string(2, 0.3, 1e-3);
  CHECK(two.rapidities[0] == cplx(0.3, 5e-4));
  CHECK(two.rapidities[1] == cplx(0.3, -5e-4));

  const BetheString three = build_string(3, 0.0, 1e-3);
  CHECK(three.rapidities[1] == cplx(0.0, 0.0));
  CHECK(three.rapidities[0] == cplx(0.0, 1e-3));
  CHECK(three.rapidities[2] == cplx(0.0, -1e-3));

  CHECK_THROWS_AS(build_string(0, 0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(build_string(2, 0.0, -1.0), DomainError);
}

TEST_CASE("string conjugation symmetry up to N = 50") {
  for (int n = 1; n <= 50; ++n) {
    const BetheString s = build_string(n, -0.17, 1e-3);
    for (int j = 0; j < n; ++j) {
      CHECK(s.rapidities[j] == std::conj(s.rapidities[n - 1 - j]));  // machine exact
    }
  }
}

TEST_CASE("necessary condition: gap pairs pass for H > 0, fail for H < 0") {
  const MediumParams p = canonical();
  const Linearization lin = linearize(p);
  const double xi = p.omega12 - p.beta / (2.0 * lin.a);

  // physical pair: eta = H/a > 0, momenta from the gap continuation
  {
    const double H = 1e-4;
    const GapContinuation c = continue_gap(p, xi, H / lin.a);
    const NCReport rep = check_nc(build_string(2, H, p.beta), {c.k, std::conj(c.k)});
    CHECK(rep.pass);
  }
  // H < 0 maps the upper string member to a decaying-in-the-wrong-direction
  // momentum: sign condition violated
  {
    const double H = -1e-4;
    const GapContinuation c = continue_gap(p, xi, H / lin.a);
    const NCReport rep = check_nc(build_string(2, H, p.beta), {c.k, std::conj(c.k)});
    CHECK_FALSE(rep.pass);
    CHECK(rep.offending.size() == 2);
  }
  // one-particle real string: exempt
  {
    const NCReport rep = check_nc(build_string(1, 0.4, p.beta), {cplx(0.3, 0.0)});
    CHECK(rep.pass);
  }
  CHECK_THROWS_AS(check_nc(build_string(2, 0.1, 1e-3), {cplx(0, 0)}), DomainError);
}

TEST_CASE("one-particle roots satisfy the quantization residual") {
  MediumParams p = canonical(1e4);
  const double omega = solve_one_particle(p, Branch::Lower, 100);

  // independent oracle: plain bisection on a locally recoded phase function
  const oracles::CanonicalMedium m;
  const double L = 1e4;
  auto phase = [&](double w) {
    return m.k(w) * L - 2.0 * std::atan(p.beta / (2.0 * m.h(w))) - M_PI * 201.0;
  };
  const double oracle = oracles::bisect(phase, p.edge_guard(), 1.0 - p.edge_guard(), 1e-13);
  CHECK(std::abs(omega - oracle) < 1e-11);

  // residual of the found root, through the Bethe equations directly
  const BetheString s = build_string(1, rapidity_real(p, omega), p.beta);
  const std::vector<Residual> r =
      bae_residual(p, s, {cplx(momentum_real(p, omega), 0.0)}, {cplx(omega, 0.0)});
  CHECK(std::abs(r[0].value) < 1e-10);
}

TEST_CASE("one-particle roots interlace and the mode count matches the winding") {
  MediumParams p = canonical(2e3);
  double prev_k = 0.0;
  for (int m = 0; m < 21; ++m) {
    const double w = solve_one_particle(p, Branch::Lower, m);
    const double k = momentum_real(p, w);
    CHECK(k > prev_k);
    prev_k = k;
  }
  const int n_lower = count_one_particle_modes(p, Branch::Lower);
  CHECK(n_lower > 0);
  CHECK_THROWS_AS(solve_one_particle(p, Branch::Lower, n_lower), NoRootError);
  CHECK_NOTHROW(solve_one_particle(p, Branch::Lower, n_lower - 1));

  // upper branch works the same way
  const double wu = solve_one_particle(p, Branch::Upper, 3);
  CHECK(wu > p.omega_par);
  CHECK_THROWS_AS(solve_one_particle(p, Branch::Gap, 0), DomainError);
  CHECK_THROWS_AS(solve_one_particle(p, Branch::Lower, -1), DomainError);
}

TEST_CASE("beta -> 0 limit approaches free quantization") {
  MediumParams p = canonical(1e3);
  p.beta = 1e-12;
  const double w = solve_one_particle(p, Branch::Lower, 7);
  // free mode: k(w) L = pi (2m+1), solved independently
  const oracles::CanonicalMedium m;
  const double free_root =
      oracles::bisect([&](double x) { return m.k(x) * 1e3 - M_PI * 15.0; }, 1e-6, 1.0 - 1e-6,
                      1e-13);
  CHECK(std::abs(w - free_root) < 1e-8);
}

TEST_CASE("gap-pair residual decays at the classical penetration rate") {
  const double H = refvals::kLinA * 1e-4;  // eta = 1e-4
  std::vector<double> Ls = {1e3, 2e3, 4e3};
  std::vector<double> logs;
  double xi = 0.0;
  for (double L : Ls) {
    MediumParams p = canonical(L);
    const GapSolitonState pair = gap_pair(p, H);
    xi = pair.xi[0];
    const BetheString s = build_string(2, H, p.beta);
    const std::vector<Residual> r = bae_residual(p, s, pair.momenta(), pair.frequencies());
    // conjugate members carry conjugate residuals
    CHECK(std::abs(r[0].log_abs - r[1].log_abs) < 1e-9 * std::abs(r[0].log_abs));
    logs.push_back(r[0].log_abs);
  }
  MediumParams p = canonical();
  const double rate = kappa(p, xi);
  // |residual(2L)| / |residual(L)| = e^{-kappa L}
  CHECK(oracles::rel_err(logs[1] - logs[0], -rate * 1e3) < 0.02);
  // least-squares slope of log|r| vs L
  const double n = 3, sx = 7e3, sxx = 21e6;
  const double sy = logs[0] + logs[1] + logs[2];
  const double sxy = 1e3 * logs[0] + 2e3 * logs[1] + 4e3 * logs[2];
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(oracles::rel_err(slope, -rate) < 0.02);
}

TEST_CASE("perturbing the carrying rapidity inflates the residual") {
  const double H = refvals::kLinA * 1e-6;  // small eta: scattering factor ~ H/beta
  MediumParams p = canonical(1e3);
  const GapSolitonState pair = gap_pair(p, H);

  const BetheString valid = build_string(2, H, p.beta);
  const BetheString shifted = build_string(2, H + 1e-3, p.beta);
  const std::vector<Residual> r0 = bae_residual(p, valid, pair.momenta(), pair.frequencies());
  const std::vector<Residual> r1 = bae_residual(p, shifted, pair.momenta(), pair.frequencies());
  CHECK(r1[0].log_abs - r0[0].log_abs > std::log(100.0));
}

TEST_CASE("pinned string residuals stay finite through matched pole-zero pairs") {
  MediumParams p = canonical(1e3);
  const Linearization lin = linearize(p);
  // three-particle string at H -> 0+: center is the polariton-atom bound state
  const double H = 1e-9;
  const PinnedSoliton pin = pinned_soliton(p, 1);
  const BetheString s = build_string(3, H, p.beta);
  std::vector<cplx> momenta;
  const GapContinuation c1 = gap_continuation_exact(p, {pin.xi[0], H / lin.a});
  momenta.push_back(c1.k);
  momenta.push_back(gap_continuation_exact(p, {pin.bound_state_frequency, 0.0}).k);
  momenta.push_back(std::conj(c1.k));
  const std::vector<Residual> r = bae_residual(p, s, momenta, pin.frequencies());
  for (const Residual& rr : r) CHECK(rr.log_abs < -500.0);  // exponentially small at L = 1e3
}

TEST_CASE("broken string spacing raises the unmatched-pole signal") {
  MediumParams p = canonical(1e3);
  BetheString s = build_string(3, 0.1, p.beta);
  s.rapidities[2] -= cplx(0.0, 1e-9);  // spacing now off by 1e-9 >> 1e-12 beta
  const std::vector<cplx> k(3, cplx(0.0, 1.0));
  const std::vector<cplx> w(3, cplx(1.1, 0.0));
  CHECK_THROWS_AS(bae_residual(p, s, k, w), DomainError);
}

TEST_CASE("finite L is required for residuals and quantization") {
  MediumParams p = canonical();  // no L
  const BetheString s = build_string(1, -0.5, p.beta);
  CHECK_THROWS_AS(bae_residual(p, s, {cplx(1, 0)}, {cplx(1, 0)}), DomainError);
  CHECK_THROWS_AS(solve_one_particle(p, Branch::Lower, 0), DomainError);
}
