#include "cli/emit.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "gapspec/errors.hpp"
#include "gapspec/version.hpp"

namespace gapspec::cli {

namespace {

std::string csv_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", x);
  return buf;
}

std::string json_real(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (const double* d = std::get_if<double>(&c)) return csv_real(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return csv_quote(std::get<std::string>(c));
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (const double* d = std::get_if<double>(&c)) return json_real(*d);
  if (const long long* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

std::string emit_csv(const Table& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, cell] : t.scalars) {
    (void)cell;
    out << (first ? "" : ",") << name;
    first = false;
  }
  for (const std::string& col : t.columns) {
    out << (first ? "" : ",") << col;
    first = false;
  }
  out << "\n";
  if (t.rows.empty() && !t.scalars.empty()) {
    // scalar-only report: emit the one record
    first = true;
    for (const auto& [name, cell] : t.scalars) {
      (void)name;
      out << (first ? "" : ",") << csv_cell(cell);
      first = false;
    }
    out << "\n";
    return out.str();
  }
  for (const auto& row : t.rows) {
    first = true;
    for (const auto& [name, cell] : t.scalars) {
      (void)name;
      out << (first ? "" : ",") << csv_cell(cell);
      first = false;
    }
    for (const Cell& cell : row) {
      out << (first ? "" : ",") << csv_cell(cell);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string emit_json(const Table& t) {
  nlohmann::ordered_json j;
  j["object"] = t.meta.object;

  nlohmann::ordered_json meta;
  meta["tool"] = "gapspec";
  meta["version"] = kVersion;
  meta["mode"] = t.meta.mode_label;
  meta["unit_scale"] = json_real(t.meta.unit_scale);
  nlohmann::ordered_json params;
  params["omega_perp"] = json_real(t.meta.params.omega_perp);
  params["omega_par"] = json_real(t.meta.params.omega_par);
  params["omega12"] = json_real(t.meta.params.omega12);
  params["beta"] = json_real(t.meta.params.beta);
  params["L"] = t.meta.params.radius_L ? nlohmann::ordered_json(json_real(*t.meta.params.radius_L))
                                       : nlohmann::ordered_json(nullptr);
  params["edge_guard_frac"] = json_real(t.meta.params.edge_guard_frac);
  params["lamb_shift"] = json_real(t.meta.params.lamb_shift);
  meta["params"] = params;
  meta["valid_radius"] = t.meta.valid_radius
                             ? nlohmann::ordered_json(json_real(*t.meta.valid_radius))
                             : nlohmann::ordered_json(nullptr);
  meta["l_max"] = t.meta.l_max ? nlohmann::ordered_json(*t.meta.l_max)
                               : nlohmann::ordered_json(nullptr);
  meta["warnings"] = t.meta.warnings;
  j["meta"] = meta;

  nlohmann::ordered_json scalars;
  for (const auto& [name, cell] : t.scalars) scalars[name] = json_cell(cell);
  j["scalars"] = scalars;
  j["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cell& cell : row) r.push_back(json_cell(cell));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string emit(const Table& t, const std::string& format) {
  if (format == "csv") return emit_csv(t);
  if (format == "json") return emit_json(t);
  throw ConfigError("emit: unknown format '" + format + "' (csv|json)");
}

}  // namespace gapspec::cli
