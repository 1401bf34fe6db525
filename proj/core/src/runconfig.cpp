#include "dsgeo/runconfig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dsgeo/chart_catalog.hpp"
#include "dsgeo/errors.hpp"

namespace dsgeo {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != raw.size() || raw.empty()) {
    throw ConfigInvalid("config line " + std::to_string(line) +
                        ": expected a number, got '" + raw + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& raw, int line) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != raw.size() || raw.empty()) {
    throw ConfigInvalid("config line " + std::to_string(line) +
                        ": expected a non-negative integer, got '" + raw + "'");
  }
  return v;
}

bool parse_bool(const std::string& raw, int line) {
  if (raw == "true" || raw == "1" || raw == "on") return true;
  if (raw == "false" || raw == "0" || raw == "off") return false;
  throw ConfigInvalid("config line " + std::to_string(line) +
                      ": expected a boolean, got '" + raw + "'");
}

std::vector<double> parse_list(const std::string& raw, int line) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(raw);
  while (std::getline(is, item, ',')) {
    out.push_back(parse_double(trim(item), line));
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ConfigInvalid("radius must be positive and finite");
  }
  if (!(step > 1e-9) || !(step < 1e-2)) {
    throw ConfigInvalid("step must lie strictly inside (1e-9, 1e-2)");
  }
  if (samples < 1) throw ConfigInvalid("samples must be at least 1");
  if (!(tol_first > 0.0) || !(tol_second > 0.0) || !(tol_integrator > 0.0)) {
    throw ConfigInvalid("tolerances must be positive");
  }
  if (grid.count < 2) throw ConfigInvalid("grid count must be at least 2");
  if (!(grid.min > 0.0) || !(grid.max > grid.min) || !std::isfinite(grid.max)) {
    throw ConfigInvalid("grid requires 0 < min < max, both finite");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigInvalid("dt must be positive and finite");
  }
  if (!(tau_end > 0.0) || !std::isfinite(tau_end)) {
    throw ConfigInvalid("tau-end must be positive and finite");
  }
  if (!state.empty() && state.size() % 2 != 0) {
    throw ConfigInvalid("state must list coordinates then velocities (even length)");
  }
  if (chart.empty()) throw ConfigInvalid("chart name must not be empty");
  // Every command accepts --chart, including the ones that sweep the whole
  // catalog; reject typos up front instead of silently ignoring them.
  const std::vector<std::string> known = chart_names();
  if (std::find(known.begin(), known.end(), chart) == known.end()) {
    throw UnknownChart("unknown chart: " + chart);
  }
}

StepPolicy RunConfig::policy() const {
  StepPolicy pol;
  pol.base = step;
  pol.second_base = std::max(1e-4, step);
  pol.richardson = richardson;
  return pol;
}

std::vector<double> RunConfig::grid_points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.count));
  if (grid.log_spacing) {
    const double lo = std::log(grid.min), hi = std::log(grid.max);
    for (int i = 0; i < grid.count; ++i) {
      out.push_back(std::exp(lo + (hi - lo) * i / (grid.count - 1)));
    }
  } else {
    for (int i = 0; i < grid.count; ++i) {
      out.push_back(grid.min + (grid.max - grid.min) * i / (grid.count - 1));
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> e;
  e.emplace_back("radius", fmt_double(radius));
  e.emplace_back("seed", std::to_string(seed));
  e.emplace_back("samples", std::to_string(samples));
  e.emplace_back("step", fmt_double(step));
  e.emplace_back("richardson", richardson ? "true" : "false");
  e.emplace_back("tol-first", fmt_double(tol_first));
  e.emplace_back("tol-second", fmt_double(tol_second));
  e.emplace_back("tol-integrator", fmt_double(tol_integrator));
  e.emplace_back("grid-min", fmt_double(grid.min));
  e.emplace_back("grid-max", fmt_double(grid.max));
  e.emplace_back("grid-count", std::to_string(grid.count));
  e.emplace_back("grid-log", grid.log_spacing ? "true" : "false");
  e.emplace_back("chart", chart);
  e.emplace_back("dt", fmt_double(dt));
  e.emplace_back("tau-end", fmt_double(tau_end));
  std::string st;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) st += ",";
    st += fmt_double(state[i]);
  }
  e.emplace_back("state", st);
  e.emplace_back("out", out);
  e.emplace_back("traj", traj);
  return e;
}

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
  RunConfig cfg = base;
  std::istringstream is(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigInvalid("config line " + std::to_string(lineno) +
                            ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "run" && section != "tolerances" && section != "grid" &&
          section != "geodesic" && section != "output") {
        throw ConfigInvalid("config line " + std::to_string(lineno) +
                            ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigInvalid("config line " + std::to_string(lineno) +
                          ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (section.empty()) {
      throw ConfigInvalid("config line " + std::to_string(lineno) +
                          ": key outside any section");
    }
    bool known = true;
    if (section == "run") {
      if (key == "radius") cfg.radius = parse_double(val, lineno);
      else if (key == "seed") cfg.seed = parse_uint(val, lineno);
      else if (key == "samples") cfg.samples = static_cast<int>(parse_uint(val, lineno));
      else if (key == "step") cfg.step = parse_double(val, lineno);
      else if (key == "richardson") cfg.richardson = parse_bool(val, lineno);
      else if (key == "chart") cfg.chart = val;
      else known = false;
    } else if (section == "tolerances") {
      if (key == "first") cfg.tol_first = parse_double(val, lineno);
      else if (key == "second") cfg.tol_second = parse_double(val, lineno);
      else if (key == "integrator") cfg.tol_integrator = parse_double(val, lineno);
      else known = false;
    } else if (section == "grid") {
      if (key == "min") cfg.grid.min = parse_double(val, lineno);
      else if (key == "max") cfg.grid.max = parse_double(val, lineno);
      else if (key == "count") cfg.grid.count = static_cast<int>(parse_uint(val, lineno));
      else if (key == "log") cfg.grid.log_spacing = parse_bool(val, lineno);
      else known = false;
    } else if (section == "geodesic") {
      if (key == "dt") cfg.dt = parse_double(val, lineno);
      else if (key == "tau-end") cfg.tau_end = parse_double(val, lineno);
      else if (key == "state") cfg.state = parse_list(val, lineno);
      else known = false;
    } else if (section == "output") {
      if (key == "report") cfg.out = val;
      else if (key == "trajectory") cfg.traj = val;
      else known = false;
    }
    if (!known) {
      throw ConfigInvalid("config line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [" + section + "]");
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path, const RunConfig& base) {
  std::ifstream f(path);
  if (!f) throw ConfigInvalid("config file not readable: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), base);
}

}  // namespace dsgeo
