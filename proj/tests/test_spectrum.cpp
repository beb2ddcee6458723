#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gapspec/errors.hpp"
#include "gapspec/spectrum.hpp"
#include "support/oracles.hpp"
#include "support/reference_values.hpp"

using namespace gapspec;
using cplx = std::complex<double>;

namespace {

MediumParams canonical() { return MediumParams{}; }

double imag_sum_over_energy(const std::vector<cplx>& ws) {
  cplx e{0.0, 0.0};
  for (const cplx& w : ws) e += w;
  return std::abs(e.imag()) / std::abs(e.real());
}

}  // namespace

TEST_CASE("ordinary soliton: N = 1 collapses to a real polariton") {
  const OrdinarySoliton s = ordinary_soliton(canonical(), 1, -0.5);
  CHECK(s.frequencies.size() == 1);
  CHECK(s.frequencies[0].imag() == 0.0);
  CHECK(s.frequencies[0].real() == s.carrier);
  CHECK(s.energy == s.carrier);
}

TEST_CASE("ordinary soliton: carrier from bisection oracle, derived fields") {
  const MediumParams p = canonical();
  const OrdinarySoliton s = ordinary_soliton(p, 3, -0.5);

  // independent root of h(Omega) = -0.5 on the lower branch
  const oracles::CanonicalMedium m;
  const double oracle =
      oracles::bisect([&](double w) { return m.h(w) + 0.5; }, 0.1, 0.999, 1e-13);
  CHECK(std::abs(s.carrier - oracle) < 1e-11);
  CHECK(oracles::rel_err(s.carrier, refvals::kOrdinaryOmega_Hm0p5) < 1e-12);
  CHECK(oracles::rel_err(s.width, p.beta / refvals::kOrdinaryHPrime_Hm0p5) < 1e-11);
  CHECK(oracles::rel_err(s.momentum, refvals::kOrdinaryK_Hm0p5) < 1e-12);
  CHECK(oracles::rel_err(
            s.decay, p.beta * refvals::kOrdinaryKPrime_Hm0p5 / refvals::kOrdinaryHPrime_Hm0p5) <
        1e-11);
  CHECK(s.width > 0.0);
  CHECK(s.decay > 0.0);

  // E = N Omega exactly, string structure conjugation-symmetric
  CHECK(s.energy == 3.0 * s.carrier);
  CHECK(s.frequencies[0] == std::conj(s.frequencies[2]));
  CHECK(s.frequencies[1].imag() == 0.0);
  CHECK(imag_sum_over_energy(s.frequencies) < 1e-12);

  const OrdinarySoliton s7 = ordinary_soliton(p, 7, -1.3);
  CHECK(s7.energy == 7.0 * s7.carrier);
}

TEST_CASE("ordinary soliton: regime and root errors") {
  CHECK_THROWS_AS(ordinary_soliton(canonical(), 3, 0.0), RegimeError);
  CHECK_THROWS_AS(ordinary_soliton(canonical(), 3, 0.7), RegimeError);
  CHECK_THROWS_AS(ordinary_soliton(canonical(), 3, -1e30), NoRootError);
  MediumParams above = canonical();
  above.omega12 = 1.5;  // composite-soliton regime
  CHECK_THROWS_AS(ordinary_soliton(above, 3, -0.5), RegimeError);
}

TEST_CASE("gap pair: frequencies, momenta and size from the linear map") {
  const MediumParams p = canonical();
  const double H = refvals::kLinA * 1e-4;  // eta = 1e-4
  const GapSolitonState pair = gap_pair(p, H);

  CHECK(pair.n_pairs == 1);
  CHECK(oracles::rel_err(pair.xi[0], refvals::kXiPair) < 1e-13);
  CHECK(oracles::rel_err(pair.eta[0], 1e-4) < 1e-12);
  CHECK(oracles::rel_err(pair.q[0], 1e-4 * std::abs(refvals::kKappaPrimeAtXiPair)) < 1e-12);
  CHECK(oracles::rel_err(pair.kappa_im[0], refvals::kKappaAtXiPair) < 1e-13);
  CHECK(oracles::rel_err(pair.size, 1.0 / refvals::kKappaAtXiPair) < 1e-13);
  CHECK(pair.total_energy < 2.0 * p.omega12);  // bound below two atomic quanta
  CHECK(imag_sum_over_energy(pair.frequencies()) < 1e-12);

  // pair at rest as H -> 0+
  const GapSolitonState rest = gap_pair(p, 1e-12);
  CHECK(rest.q[0] < 1e-10);
  CHECK(rest.xi[0] == pair.xi[0]);

  CHECK_THROWS_AS(gap_pair(p, 0.0), RegimeError);
  CHECK_THROWS_AS(gap_pair(p, -1e-4), RegimeError);
  MediumParams outside = canonical();
  outside.omega12 = 0.9;
  CHECK_THROWS_AS(gap_pair(outside, H), RegimeError);
}

TEST_CASE("linear gap soliton: energies against the frozen formula values") {
  const MediumParams p = canonical();
  const GapSolitonState s5 = gap_soliton_linear(p, 5);
  CHECK(oracles::rel_err(s5.total_energy, refvals::kE0_l5) < 1e-12);
  CHECK(oracles::rel_err(s5.energy_per_particle, refvals::kE0_l5 / 10.0) < 1e-12);

  // l = 1 coincides with the resting pair construction
  const GapSolitonState s1 = gap_soliton_linear(p, 1);
  CHECK(oracles::rel_err(s1.xi[0], refvals::kXiPair) < 1e-13);

  // exact concavity identity E_{l+1} + E_{l-1} - 2 E_l = -2 beta / a
  for (int l = 2; l <= 29; ++l) {
    const double lhs = gap_soliton_linear(p, l + 1).total_energy +
                       gap_soliton_linear(p, l - 1).total_energy -
                       2.0 * gap_soliton_linear(p, l).total_energy;
    CHECK(oracles::rel_err(lhs, -2.0 * refvals::kBetaOverA) < 1e-9);
  }

  CHECK_THROWS_AS(gap_soliton_linear(p, 0), DomainError);
  CHECK_THROWS_AS(gap_soliton_linear(p, l_max(p) + 1), WindowError);
  CHECK_NOTHROW(gap_soliton_linear(p, l_max(p)));
}

TEST_CASE("soliton size shrinks with the pair count") {
  const MediumParams p = canonical();
  double prev = gap_soliton_linear(p, 1).size;
  for (int l = 2; l <= 30; ++l) {
    const double cur = gap_soliton_linear(p, l).size;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("dissociation energy: positivity, symmetry, two algebraic routes") {
  const MediumParams p = canonical();
  CHECK(oracles::rel_err(dissociation_energy(p, 4, 1), refvals::kUd_4_1) < 1e-12);
  CHECK(dissociation_energy(p, 4, 4) == 0.0);
  CHECK(dissociation_energy(p, 4, 0) == 0.0);
  for (int l = 2; l <= 30; ++l) {
    for (int l1 = 1; l1 < l; ++l1) {
      const double ud = dissociation_energy(p, l, l1);
      CHECK(ud > 0.0);
      CHECK(ud == dissociation_energy(p, l, l - l1));
      // route through the eigenenergies
      const double route = gap_soliton_linear(p, l1).total_energy +
                           gap_soliton_linear(p, l - l1).total_energy -
                           gap_soliton_linear(p, l).total_energy;
      CHECK(oracles::rel_err(ud, route) < 1e-7);  // difference of near-equal energies
    }
  }
  CHECK_THROWS_AS(dissociation_energy(p, 3, 5), DomainError);
}

TEST_CASE("corrected soliton: band identities at small momentum") {
  const MediumParams p = canonical();
  const Linearization lin = linearize(p);

  // motionless: eps = eps0 - Delta
  const GapSolitonState rest = gap_soliton_corrected(p, 2, 0.0);
  const double eps0 = p.omega12 - (p.beta / (2.0 * lin.a)) * 2.0;
  CHECK(oracles::rel_err(rest.energy_per_particle, eps0 - rest.band_halfwidth) < 1e-12);
  // the per-particle energy equals the constituent mean exactly
  CHECK(oracles::rel_err(rest.energy_per_particle, rest.total_energy / 4.0) < 1e-12);

  // kinetic term equals (b/a) eta^2 identically
  for (int l : {1, 2}) {
    const double H = lin.a * 2e-5;  // eta = 2e-5
    const GapSolitonState s = gap_soliton_corrected(p, l, H);
    const double kinetic =
        s.momentum_per_particle * s.momentum_per_particle / (2.0 * s.effective_mass);
    CHECK(oracles::rel_err(kinetic, (lin.b / lin.a) * 2e-5 * 2e-5) < 1e-10);
  }

  // Delta_2 / Delta_1 = 5 exactly
  CHECK(oracles::rel_err(band_halfwidth(p, 2) / band_halfwidth(p, 1), 5.0) < 1e-13);
  CHECK(oracles::rel_err(band_halfwidth(p, 1), refvals::kDelta_l1) < 1e-10);
  CHECK(oracles::rel_err(band_halfwidth(p, 2), refvals::kDelta_l2) < 1e-10);

  // corrected frequencies against a direct local evaluation
  const GapSolitonState s1 = gap_soliton_corrected(p, 1, lin.a * 1e-4);
  const double x0 = -p.beta / (2.0 * lin.a);
  const double want =
      p.omega12 + x0 - (lin.b / lin.a) * x0 * x0 + (lin.b / lin.a) * 1e-8;
  CHECK(oracles::rel_err(s1.xi[0], want) < 1e-13);

  CHECK_THROWS_AS(gap_soliton_corrected(p, 1, -1e-6), RegimeError);
  // at canonical coupling the l = 3 corrections leave the 1% radius
  CHECK_THROWS_AS(gap_soliton_corrected(p, 3, 0.0), WindowError);
}

TEST_CASE("exact soliton: solves the continued equations to tolerance") {
  const MediumParams p = canonical();
  const double H = 1e-4;
  const GapSolitonState s = gap_soliton_exact(p, 3, H);
  REQUIRE(s.n_pairs == 3);
  for (int j = 0; j < 3; ++j) {
    const cplx h = gap_continuation_exact(p, {s.xi[j], s.eta[j]}).h;
    CHECK(std::abs(h.real() - H) < 1e-12 * p.beta);
    CHECK(std::abs(h.imag() - p.beta * (3 - (j + 1) + 0.5)) < 1e-12 * p.beta);
    CHECK(s.xi[j] < p.omega12);
    CHECK(s.xi[j] > p.omega_perp);
  }
  CHECK(imag_sum_over_energy(s.frequencies()) < 1e-12);
  CHECK(s.momentum_per_particle > 0.0);
}

TEST_CASE("exact soliton: continuity in H down to the motionless state") {
  const MediumParams p = canonical();
  const GapSolitonState rest = gap_soliton_exact(p, 1, 0.0);
  const GapSolitonState tiny = gap_soliton_exact(p, 1, 1e-10);
  CHECK(std::abs(rest.xi[0] - tiny.xi[0]) < 1e-12);
  CHECK(rest.eta[0] == 0.0);
  CHECK(oracles::rel_err(rest.xi[0], refvals::kXiExact_l1_H0) < 1e-12);
  // linear and exact differ at second order in beta (2.4e-5 here)
  CHECK(std::abs(rest.xi[0] - refvals::kXiPair) > 1e-5);
  CHECK(std::abs(rest.xi[0] - refvals::kXiPair) < 1e-4);
}

TEST_CASE("exact-vs-linear deviation scales as beta^2") {
  MediumParams p = canonical();
  std::vector<double> betas = {1e-3, 5e-4, 2.5e-4};
  std::vector<double> devs;
  for (double b : betas) {
    p.beta = b;
    double worst = 0.0;
    for (int l : {1, 2}) {
      const GapSolitonState ex = gap_soliton_exact(p, l, 0.1 * b);
      const GapSolitonState ln = gap_soliton_linear(p, l);
      for (int j = 0; j < l; ++j)
        worst = std::max(worst, std::abs(ex.xi[j] - ln.xi[j]));
    }
    devs.push_back(worst);
  }
  const double e1 = std::log(devs[0] / devs[1]) / std::log(2.0);
  const double e2 = std::log(devs[1] / devs[2]) / std::log(2.0);
  CHECK(e1 == doctest::Approx(2.0).epsilon(0.1));
  CHECK(e2 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("exact soliton: unreachable targets fail with the window bound") {
  const MediumParams p = canonical();
  CHECK(l_max_exact(p) >= 3);
  CHECK_THROWS_AS(gap_soliton_exact(p, 30, 1e-4), WindowError);
  CHECK_THROWS_AS(gap_soliton_exact(p, 1, -1e-4), RegimeError);
}

TEST_CASE("pinned soliton: bound-state limit and frozen energetics") {
  const MediumParams p = canonical();
  const PinnedSoliton p0 = pinned_soliton(p, 0);
  CHECK(p0.total_energy == p.omega12);
  CHECK(p0.binding_energy == 0.0);
  CHECK_FALSE(p0.pair_extraction_energy.has_value());

  const PinnedSoliton p2 = pinned_soliton(p, 2);
  CHECK(oracles::rel_err(p2.total_energy, refvals::kEp_l2) < 1e-12);
  CHECK(oracles::rel_err(*p2.pair_extraction_energy, refvals::kU1_l2) < 1e-10);
  CHECK(p2.frequencies().size() == 5);
  CHECK(imag_sum_over_energy(p2.frequencies()) < 1e-15);

  // bookkeeping identity: U_l = -(beta/a) l across the range
  for (int l = 1; l <= 30; ++l) {
    const PinnedSoliton s = pinned_soliton(p, l);
    CHECK(oracles::rel_err(s.binding_energy, -refvals::kBetaOverA * l) < 1e-8);
    CHECK(s.binding_energy < 0.0);
    if (l >= 1) {
      CHECK(*s.pair_extraction_energy > 0.0);
      // pulling one pair costs at least as much as unbinding all of them
      const double u1 = *s.pair_extraction_energy;
      const double ul = std::abs(s.binding_energy);
      if (l == 1)
        CHECK(oracles::rel_err(u1, ul) < 1e-9);
      else
        CHECK(u1 > ul);
    }
  }
  CHECK_THROWS_AS(pinned_soliton(p, -1), DomainError);
  CHECK_THROWS_AS(pinned_soliton(p, 100), WindowError);
}

TEST_CASE("band structure: ordered rows, monotone momentum, per-point errors") {
  const MediumParams p = canonical();
  std::vector<double> grid;
  for (int i = 0; i < 7; ++i) grid.push_back(1e-4 * i / 6.0);
  const BandTable t = band_structure(p, 1, grid, 2);
  REQUIRE(t.points.size() == 7);
  double prev_q = -1.0;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    CHECK(t.points[i].carrying_rapidity == grid[i]);
    CHECK_FALSE(t.points[i].error.has_value());
    CHECK(t.points[i].q_exact > prev_q);
    prev_q = t.points[i].q_exact;
    CHECK(std::isfinite(t.points[i].eps_corrected));
    CHECK(std::isfinite(t.points[i].eps_exact));
  }

  // l = 3 at canonical coupling: corrected column fails per point, exact fine
  const BandTable t3 = band_structure(p, 3, {0.0, 5e-5}, 1);
  CHECK(t3.points[0].error.has_value());
  CHECK(std::isnan(t3.points[0].eps_corrected));
  CHECK(std::isfinite(t3.points[0].eps_exact));
}

TEST_CASE("NC rejection surfaces as regime errors for wrong-sign rapidities") {
  const MediumParams p = canonical();
  // positive carrying rapidity cannot sit on the lower branch
  CHECK_THROWS_AS(ordinary_soliton(p, 2, 0.3), RegimeError);
  // negative carrying rapidity cannot map to gap states
  CHECK_THROWS_AS(gap_pair(p, -0.3), RegimeError);
  CHECK_THROWS_AS(gap_soliton_exact(p, 1, -0.3), RegimeError);
}
