#include "cli/tables.hpp"

#include <cmath>

#include "gapspec/errors.hpp"

namespace gapspec::cli {

namespace {

Meta make_meta(const RunConfig& cfg, const MediumParams& normalized, const char* object,
               const char* mode_label) {
  Meta m;
  m.object = object;
  m.mode_label = mode_label;
  m.params = normalized;
  m.unit_scale = cfg.unit_scale();
  m.warnings = normalized.validate();
  if (normalized.omega12_in_gap()) {
    m.valid_radius = linearize(normalized).valid_radius;
    m.l_max = l_max(normalized);
  }
  return m;
}

Cell real(double x) { return Cell{x}; }
Cell integer(long long x) { return Cell{x}; }
Cell text(std::string s) { return Cell{std::move(s)}; }

// frequency-like quantity: absolute = normalized * unit_scale
void push_freq(std::vector<Cell>& row, double norm, double scale) {
  row.push_back(real(norm * scale));
  row.push_back(real(norm));
}

void scalar_freq(Table& t, const std::string& name, double norm, double scale) {
  t.scalars.emplace_back(name + "_abs", real(norm * scale));
  t.scalars.emplace_back(name + "_norm", real(norm));
}

SolitonMode parse_mode(const std::string& mode) {
  if (mode == "linear") return SolitonMode::Linear;
  if (mode == "corrected") return SolitonMode::Corrected;
  if (mode == "exact") return SolitonMode::Exact;
  throw ConfigError("mode must be linear|corrected|exact, got '" + mode + "'");
}

}  // namespace

Table make_medium_table(const RunConfig& cfg) {
  const MediumParams p = cfg.medium().normalized();
  const double scale = cfg.unit_scale();
  Table t;
  t.meta = make_meta(cfg, p, "medium", "-");
  t.columns = {"omega_abs", "omega_norm", "branch", "epsilon", "n", "nu", "kappa"};
  const int n = std::max(cfg.points, 2);
  const double tau = p.edge_guard();

  auto add_row = [&](double w) {
    std::vector<Cell> row;
    push_freq(row, w, scale);
    const Branch br = classify(p, w);
    row.push_back(text(to_string(br)));
    row.push_back(real(permittivity(p, w)));
    if (br == Branch::Lower || br == Branch::Upper) {
      row.push_back(real(refractive_index(p, w)));
      row.push_back(Cell{});
      row.push_back(Cell{});
    } else {
      row.push_back(Cell{});
      row.push_back(real(gap_decay_index(p, w)));
      row.push_back(real(kappa(p, w)));
    }
    t.rows.push_back(std::move(row));
  };

  for (int i = 0; i < n; ++i)
    add_row(2.0 * tau + (p.omega_perp - 4.0 * tau) * i / (n - 1.0));
  for (int i = 0; i < n; ++i)
    add_row(p.omega_perp + 2.0 * tau + (p.gap_width() - 4.0 * tau) * i / (n - 1.0));
  for (int i = 0; i < n; ++i)
    add_row(p.omega_par + 2.0 * tau + (2.0 * p.omega_par) * i / (n - 1.0));
  return t;
}

Table make_ordinary_table(const RunConfig& cfg) {
  const MediumParams p = cfg.medium().normalized();
  const double scale = cfg.unit_scale();
  const OrdinarySoliton s = ordinary_soliton(p, cfg.n_particles, cfg.H);

  Table t;
  t.meta = make_meta(cfg, p, "ordinary_soliton", "-");
  t.scalars.emplace_back("N", integer(s.n_particles));
  t.scalars.emplace_back("H", real(s.carrying_rapidity));
  scalar_freq(t, "carrier", s.carrier, scale);
  scalar_freq(t, "energy", s.energy, scale);
  scalar_freq(t, "width", s.width, scale);
  scalar_freq(t, "momentum", s.momentum, scale);
  scalar_freq(t, "decay", s.decay, scale);

  t.columns = {"j", "omega_re_abs", "omega_re_norm", "omega_im_abs", "omega_im_norm",
               "k_re_abs", "k_re_norm", "k_im_abs", "k_im_norm", "h_re", "h_im"};
  const BetheString str = build_string(s.n_particles, s.carrying_rapidity, p.beta);
  for (int j = 0; j < s.n_particles; ++j) {
    std::vector<Cell> row;
    row.push_back(integer(j + 1));
    push_freq(row, s.frequencies[j].real(), scale);
    push_freq(row, s.frequencies[j].imag(), scale);
    push_freq(row, s.momenta[j].real(), scale);
    push_freq(row, s.momenta[j].imag(), scale);
    row.push_back(real(str.rapidities[j].real()));
    row.push_back(real(str.rapidities[j].imag()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

Table gap_state_table(const RunConfig& cfg, const GapSolitonState& s, const char* object) {
  const MediumParams p = cfg.medium().normalized();
  const double scale = cfg.unit_scale();
  Table t;
  t.meta = make_meta(cfg, p, object, to_string(s.mode));
  t.scalars.emplace_back("l", integer(s.n_pairs));
  t.scalars.emplace_back("H", real(s.carrying_rapidity));
  scalar_freq(t, "energy", s.total_energy, scale);
  scalar_freq(t, "energy_per_particle", s.energy_per_particle, scale);
  scalar_freq(t, "band_halfwidth", s.band_halfwidth, scale);
  scalar_freq(t, "effective_mass", s.effective_mass, scale);
  t.scalars.emplace_back("size_abs", real(s.size / scale));
  t.scalars.emplace_back("size_norm", real(s.size));
  scalar_freq(t, "q_per_particle", s.momentum_per_particle, scale);
  t.scalars.emplace_back("beyond_valid_radius",
                         text(s.beyond_valid_radius ? "true" : "false"));

  t.columns = {"j", "xi_abs", "xi_norm", "eta_abs", "eta_norm",
               "q_abs", "q_norm", "kappa_abs", "kappa_norm"};
  const auto ws = s.frequencies();
  const auto ks = s.momenta();
  for (std::size_t j = 0; j < ws.size(); ++j) {
    std::vector<Cell> row;
    row.push_back(integer(static_cast<long long>(j) + 1));
    push_freq(row, ws[j].real(), scale);
    push_freq(row, ws[j].imag(), scale);
    push_freq(row, ks[j].real(), scale);
    push_freq(row, ks[j].imag(), scale);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Table make_pair_table(const RunConfig& cfg) {
  const MediumParams p = cfg.medium().normalized();
  return gap_state_table(cfg, gap_pair(p, cfg.H), "gap_pair");
}

Table make_soliton_table(const RunConfig& cfg) {
  const MediumParams p = cfg.medium().normalized();
  const SolitonMode mode = parse_mode(cfg.mode);
  GapSolitonState s;
  switch (mode) {
    case SolitonMode::Linear: s = gap_soliton_linear(p, cfg.l); break;
    case SolitonMode::Corrected: s = gap_soliton_corrected(p, cfg.l, cfg.H); break;
    case SolitonMode::Exact: s = gap_soliton_exact(p, cfg.l, cfg.H); break;
  }
  return gap_state_table(cfg, s, "gap_soliton");
}

Table make_pinned_table(const RunConfig& cfg) {
  const MediumParams p = cfg.medium().normalized();
  const double scale = cfg.unit_scale();
  const PinnedSoliton s = pinned_soliton(p, cfg.l);

  Table t;
  t.meta = make_meta(cfg, p, "pinned_soliton", "-");
  t.scalars.emplace_back("l", integer(s.n_pairs));
  t.scalars.emplace_back("n_particles", integer(2LL * s.n_pairs + 1));
  scalar_freq(t, "energy", s.total_energy, scale);
  scalar_freq(t, "binding_energy", s.binding_energy, scale);
  if (s.pair_extraction_energy) {
    scalar_freq(t, "pair_extraction_energy", *s.pair_extraction_energy, scale);
  } else {
    t.scalars.emplace_back("pair_extraction_energy_abs", Cell{});
    t.scalars.emplace_back("pair_extraction_energy_norm", Cell{});
  }

  t.columns = {"j", "xi_abs", "xi_norm", "multiplicity"};
  {
    std::vector<Cell> row;
    row.push_back(integer(0));
    push_freq(row, s.bound_state_frequency, scale);
    row.push_back(integer(1));
    t.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < s.xi.size(); ++j) {
    std::vector<Cell> row;
    row.push_back(integer(static_cast<long long>(j) + 1));
    push_freq(row, s.xi[j], scale);
    row.push_back(integer(2));  // conjugate pair with eta -> 0+
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table make_band_table(const RunConfig& cfg, unsigned threads) {
  const MediumParams p = cfg.medium().normalized();
  const double scale = cfg.unit_scale();
  const int n = std::max(cfg.points, 2);
  const double hi = cfg.h_max ? *cfg.h_max : 0.1 * p.beta;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = cfg.h_min + (hi - cfg.h_min) * i / (n - 1.0);

  const BandTable b = band_structure(p, cfg.l, grid, threads);

  Table t;
  t.meta = make_meta(cfg, p, "band_structure", "corrected+exact");
  t.scalars.emplace_back("l", integer(b.n_pairs));
  if (b.q_mass_limit) {
    t.scalars.emplace_back("q_mass_limit_abs", real(*b.q_mass_limit * scale));
    t.scalars.emplace_back("q_mass_limit_norm", real(*b.q_mass_limit));
  } else {
    t.scalars.emplace_back("q_mass_limit_abs", Cell{});
    t.scalars.emplace_back("q_mass_limit_norm", Cell{});
  }

  t.columns = {"H", "q_corrected_abs", "q_corrected_norm", "eps_corrected_abs",
               "eps_corrected_norm", "q_exact_abs", "q_exact_norm", "eps_exact_abs",
               "eps_exact_norm", "status"};
  for (const BandPoint& pt : b.points) {
    std::vector<Cell> row;
    row.push_back(real(pt.carrying_rapidity));
    auto push_opt = [&](double v) {
      if (std::isfinite(v)) {
        row.push_back(real(v * scale));
        row.push_back(real(v));
      } else {
        row.push_back(Cell{});
        row.push_back(Cell{});
      }
    };
    push_opt(pt.q_corrected);
    push_opt(pt.eps_corrected);
    push_opt(pt.q_exact);
    push_opt(pt.eps_exact);
    row.push_back(text(pt.error ? *pt.error : "ok"));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table make_validate_table(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  const MediumParams p = cfg.medium().normalized();
  Table t;
  t.meta = make_meta(cfg, p, "validation_report", "-");
  int passed = 0;
  for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
  t.scalars.emplace_back("checks", integer(static_cast<long long>(results.size())));
  t.scalars.emplace_back("passed", integer(passed));
  t.scalars.emplace_back("status",
                         text(passed == static_cast<int>(results.size()) ? "pass" : "fail"));
  t.columns = {"index", "name", "status", "detail"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::vector<Cell> row;
    row.push_back(integer(static_cast<long long>(i) + 1));
    row.push_back(text(results[i].name));
    row.push_back(text(results[i].pass ? "pass" : "fail"));
    row.push_back(text(results[i].detail));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace gapspec::cli
