#include "cli/run.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cli/checks.hpp"
#include "cli/config.hpp"
#include "cli/emit.hpp"
#include "cli/tables.hpp"
#include "gapspec/errors.hpp"
#include "gapspec/version.hpp"

namespace gapspec::cli {

namespace {

unsigned resolve_threads(const RunConfig& cfg) {
  if (const char* env = std::getenv("GAPSPEC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
      throw ConfigError(std::string("GAPSPEC_THREADS must be a positive integer, got '") + env +
                        "'");
    }
    throw ConfigError(std::string("GAPSPEC_THREADS must be a positive integer, got '") +
                      std::getenv("GAPSPEC_THREADS") + "'");
  }
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  return static_cast<unsigned>(cfg.threads);
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + cfg.output + "'");
  out << payload;
}

void print_warnings(const Table& t) {
  for (const std::string& w : t.meta.warnings) std::cerr << "gapspec: warning: " << w << "\n";
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"gapspec: many-particle spectrum of a two-level atom in a frequency gap medium"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  RunConfig flags;  // flag values land here, applied over the config file

  // medium parameters (absolute or normalized; normalized internally)
  auto add_medium = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key = value configuration file");
    sub->add_option("--omega-perp", flags.omega_perp, "lower gap edge");
    sub->add_option("--omega-par", flags.omega_par, "upper gap edge");
    sub->add_option("--omega12", flags.omega12, "atomic transition frequency");
    sub->add_option("--beta", flags.beta, "effective coupling gamma/omega12");
    sub->add_option("--L", [&flags](const CLI::results_t& res) {
      flags.L = std::stod(res[0]);
      return true;
    }, "PBC sphere radius");
    sub->add_option("--edge-guard-frac", flags.edge_guard_frac, "edge guard fraction");
    sub->add_option("--lamb-shift", flags.lamb_shift, "shift knob for omega12_bar");
    sub->add_option("--format", flags.format, "csv | json");
    sub->add_option("--output,-o", flags.output, "output path (default stdout)");
    sub->add_option("--threads", flags.threads, "sweep parallelism degree");
  };

  CLI::App* medium = app.add_subcommand("medium", "permeability / index / decay tables");
  medium->add_option("--points", flags.points, "grid points per region");
  add_medium(medium);

  CLI::App* ordinary = app.add_subcommand("ordinary", "ordinary soliton below the gap");
  ordinary->add_option("--N", flags.n_particles, "number of polaritons");
  ordinary->add_option("--H", flags.H, "carrying rapidity (< 0)");
  add_medium(ordinary);

  CLI::App* pair = app.add_subcommand("pair", "correlated gap pair");
  pair->add_option("--H", flags.H, "carrying rapidity (> 0)");
  add_medium(pair);

  CLI::App* soliton = app.add_subcommand("soliton", "l-pair gap soliton");
  soliton->add_option("--l", flags.l, "number of pairs");
  soliton->add_option("--H", flags.H, "carrying rapidity (>= 0)");
  soliton->add_option("--mode", flags.mode, "linear | corrected | exact");
  add_medium(soliton);

  CLI::App* pinned = app.add_subcommand("pinned", "pinned odd-string soliton");
  pinned->add_option("--l", flags.l, "number of pairs (total particles 2l+1)");
  add_medium(pinned);

  CLI::App* band = app.add_subcommand("band", "carrying-rapidity sweep of the soliton band");
  band->add_option("--l", flags.l, "number of pairs");
  band->add_option("--points", flags.points, "grid points");
  band->add_option("--h-min", flags.h_min, "lowest carrying rapidity");
  band->add_option("--h-max", [&flags](const CLI::results_t& res) {
    flags.h_max = std::stod(res[0]);
    return true;
  }, "highest carrying rapidity (default 0.1 beta)");
  add_medium(band);

  CLI::App* validate = app.add_subcommand("validate", "run the full invariant suite");
  add_medium(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      return app.exit(e);
    }
    std::cerr << "gapspec: " << e.what() << "\n";
    return 1;
  }

  try {
    // precedence: defaults < config file < flags (CLI11 wrote flags over the
    // defaults in `flags`; replay the provided ones over the file values)
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    CLI::App* sub = app.get_subcommands().front();
    auto given = [&](const char* name) {
      const CLI::Option* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    auto take = [&](const char* name, auto member) {
      if (given(name)) cfg.*member = flags.*member;
    };
    take("--omega-perp", &RunConfig::omega_perp);
    take("--omega-par", &RunConfig::omega_par);
    take("--omega12", &RunConfig::omega12);
    take("--beta", &RunConfig::beta);
    if (given("--L")) cfg.L = flags.L;
    take("--edge-guard-frac", &RunConfig::edge_guard_frac);
    take("--lamb-shift", &RunConfig::lamb_shift);
    take("--format", &RunConfig::format);
    take("--output", &RunConfig::output);
    take("--threads", &RunConfig::threads);
    take("--points", &RunConfig::points);
    take("--N", &RunConfig::n_particles);
    take("--H", &RunConfig::H);
    take("--l", &RunConfig::l);
    take("--mode", &RunConfig::mode);
    take("--h-min", &RunConfig::h_min);
    if (given("--h-max")) cfg.h_max = flags.h_max;
    if (cfg.format != "csv" && cfg.format != "json")
      throw ConfigError("format must be csv|json, got '" + cfg.format + "'");

    const unsigned threads = resolve_threads(cfg);

    Table t;
    bool suite_failed = false;
    if (sub == medium) t = make_medium_table(cfg);
    else if (sub == ordinary) t = make_ordinary_table(cfg);
    else if (sub == pair) t = make_pair_table(cfg);
    else if (sub == soliton) t = make_soliton_table(cfg);
    else if (sub == pinned) t = make_pinned_table(cfg);
    else if (sub == band) t = make_band_table(cfg, threads);
    else {
      const std::vector<CheckResult> results = run_validation_suite();
      t = make_validate_table(cfg, results);
      for (const CheckResult& r : results) suite_failed = suite_failed || !r.pass;
    }
    print_warnings(t);
    write_output(cfg, emit(t, cfg.format));
    return suite_failed ? 2 : 0;
  } catch (const ConfigError& e) {
    std::cerr << "gapspec: config error: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "gapspec: convergence error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "gapspec: domain error: " << e.what() << "\n";
    return 2;
  } catch (const RegimeError& e) {
    std::cerr << "gapspec: regime error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gapspec: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gapspec::cli
