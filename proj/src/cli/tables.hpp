#pragma once

#include <vector>

#include "cli/config.hpp"
#include "cli/emit.hpp"
#include "gapspec/spectrum.hpp"

namespace gapspec::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Subcommand reports.  All computations run on the normalized configuration;
// frequency-like quantities are emitted in both normalized and absolute
// input units.
Table make_medium_table(const RunConfig& cfg);
Table make_ordinary_table(const RunConfig& cfg);
Table make_pair_table(const RunConfig& cfg);
Table make_soliton_table(const RunConfig& cfg);
Table make_pinned_table(const RunConfig& cfg);
Table make_band_table(const RunConfig& cfg, unsigned threads);
Table make_validate_table(const RunConfig& cfg, const std::vector<CheckResult>& results);

}  // namespace gapspec::cli
