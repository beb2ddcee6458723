#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gapspec/medium.hpp"

namespace gapspec::cli {

/// One table cell: a real (rendered in scientific notation for CSV and as a
/// decimal string for JSON), an integer, text, or empty.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Meta {
  std::string object;
  std::string mode_label;
  MediumParams params;             // normalized (omega_perp = 1)
  double unit_scale = 1.0;         // absolute units per normalized unit
  std::optional<double> valid_radius;
  std::optional<int> l_max;
  std::vector<std::string> warnings;
};

/// Report emitted by every subcommand: named scalars plus one record per
/// constituent or grid point.
struct Table {
  Meta meta;
  std::vector<std::pair<std::string, Cell>> scalars;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// CSV with a header row; scalar fields are folded in as constant leading
/// columns; reals carry 12 significant digits in scientific notation.
std::string emit_csv(const Table& t);

/// JSON with a meta block; reals are decimal strings (17 significant digits,
/// lossless round-trip), so exactness-critical fields reparse bit-equal.
std::string emit_json(const Table& t);

std::string emit(const Table& t, const std::string& format);

}  // namespace gapspec::cli
