#include "cli/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gapspec/errors.hpp"

namespace gapspec::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                      "' needs a real number, got '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                      "' needs an integer, got '" + value + "'");
  }
}

std::string fmt_full(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

MediumParams RunConfig::medium() const {
  MediumParams p;
  p.omega_perp = omega_perp;
  p.omega_par = omega_par;
  p.omega12 = omega12;
  p.beta = beta;
  p.radius_L = L;
  p.edge_guard_frac = edge_guard_frac;
  p.lamb_shift = lamb_shift;
  p.validate();
  return p;
}

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
  RunConfig c = base;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line) +
                        ": expected 'key = value', got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(line) + ": empty key");

    if (key == "omega_perp") c.omega_perp = parse_double(key, value, line);
    else if (key == "omega_par") c.omega_par = parse_double(key, value, line);
    else if (key == "omega12") c.omega12 = parse_double(key, value, line);
    else if (key == "beta") c.beta = parse_double(key, value, line);
    else if (key == "L") {
      if (value == "none") c.L.reset();
      else c.L = parse_double(key, value, line);
    } else if (key == "edge_guard_frac") c.edge_guard_frac = parse_double(key, value, line);
    else if (key == "lamb_shift") c.lamb_shift = parse_double(key, value, line);
    else if (key == "l") c.l = parse_int(key, value, line);
    else if (key == "n_particles") c.n_particles = parse_int(key, value, line);
    else if (key == "H") c.H = parse_double(key, value, line);
    else if (key == "mode") {
      if (value != "linear" && value != "corrected" && value != "exact")
        throw ConfigError("config line " + std::to_string(line) +
                          ": key 'mode' must be linear|corrected|exact, got '" + value + "'");
      c.mode = value;
    } else if (key == "points") c.points = parse_int(key, value, line);
    else if (key == "h_min") c.h_min = parse_double(key, value, line);
    else if (key == "h_max") {
      if (value == "none") c.h_max.reset();
      else c.h_max = parse_double(key, value, line);
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw ConfigError("config line " + std::to_string(line) +
                          ": key 'format' must be csv|json, got '" + value + "'");
      c.format = value;
    } else if (key == "output") c.output = value;
    else if (key == "threads") c.threads = parse_int(key, value, line);
    else
      throw ConfigError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
  }
  return c;
}

RunConfig load_config_file(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), base);
}

std::string serialize(const RunConfig& c) {
  std::ostringstream out;
  out << "omega_perp = " << fmt_full(c.omega_perp) << "\n";
  out << "omega_par = " << fmt_full(c.omega_par) << "\n";
  out << "omega12 = " << fmt_full(c.omega12) << "\n";
  out << "beta = " << fmt_full(c.beta) << "\n";
  out << "L = " << (c.L ? fmt_full(*c.L) : std::string("none")) << "\n";
  out << "edge_guard_frac = " << fmt_full(c.edge_guard_frac) << "\n";
  out << "lamb_shift = " << fmt_full(c.lamb_shift) << "\n";
  out << "l = " << c.l << "\n";
  out << "n_particles = " << c.n_particles << "\n";
  out << "H = " << fmt_full(c.H) << "\n";
  out << "mode = " << c.mode << "\n";
  out << "points = " << c.points << "\n";
  out << "h_min = " << fmt_full(c.h_min) << "\n";
  out << "h_max = " << (c.h_max ? fmt_full(*c.h_max) : std::string("none")) << "\n";
  out << "format = " << c.format << "\n";
  out << "output = " << c.output << "\n";
  out << "threads = " << c.threads << "\n";
  return out.str();
}

}  // namespace gapspec::cli
