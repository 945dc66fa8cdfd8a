//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file config.cpp
//  \brief flat key = value config parsing

#include "bgk/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "bgk/errors.hpp"

namespace bgk {

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string &key, const std::string &value) {
  const std::string v = trim(value);
  if (v.empty()) throw TypeMismatchError(key, "empty value");
  char *end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || !std::isfinite(x))
    throw TypeMismatchError(key, "'" + value + "' is not a finite number");
  return x;
}

double parse_positive(const std::string &key, const std::string &value) {
  const double x = parse_double(key, value);
  if (!(x > 0.0)) throw TypeMismatchError(key, "'" + value + "' must be > 0");
  return x;
}

int parse_positive_int(const std::string &key, const std::string &value) {
  const double x = parse_positive(key, value);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    throw TypeMismatchError(key, "'" + value + "' is not an integer");
  return i;
}

bool parse_bool(const std::string &key, const std::string &value) {
  const std::string v = trim(value);
  if (v == "true") return true;
  if (v == "false") return false;
  throw TypeMismatchError(key, "'" + value + "' is not true/false");
}

std::vector<double> parse_time_list(const std::string &key, const std::string &value) {
  std::vector<double> times;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const double t = parse_double(key, item);
    if (t < 0.0) throw TypeMismatchError(key, "snapshot times must be >= 0");
    times.push_back(t);
  }
  return times;
}

bool known_key(const std::string &key) {
  static const char *keys[] = {"scenario", "scheme", "conservative", "nx",
                               "nv",       "cfl",    "kappa",        "t_final",
                               "newton_tol", "out_dir", "snapshots", "exact"};
  for (const char *k : keys)
    if (key == k) return true;
  return false;
}

}  // namespace

RunConfig parse_config(const std::string &text) {
  // First pass: syntax and key allowlist, later duplicates overwrite earlier.
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    if (!known_key(key)) throw UnknownKeyError(key);
    entries.emplace_back(key, value);
  }

  auto last_value = [&](const std::string &key) -> const std::string * {
    const std::string *found = nullptr;
    for (const auto &e : entries)
      if (e.first == key) found = &e.second;
    return found;
  };

  const std::string *scenario_value = last_value("scenario");
  if (!scenario_value) throw ConfigError("config: missing required key 'scenario'");

  RunConfig cfg;
  cfg.scenario = scenario_defaults(scenario_from_name(trim(*scenario_value)));
  const std::string *scheme_value = last_value("scheme");
  cfg.spec = SchemeSpec::parse(scheme_value ? trim(*scheme_value) : "RK3-W35-DM");

  for (const auto &[key, value] : entries) {
    if (key == "scenario" || key == "scheme") continue;  // already applied
    if (key == "conservative")
      cfg.spec.conservative = parse_bool(key, value);
    else if (key == "nx")
      cfg.scenario.nx = parse_positive_int(key, value);
    else if (key == "nv")
      cfg.scenario.nv = parse_positive_int(key, value);
    else if (key == "cfl") {
      cfg.scenario.cfl = parse_positive(key, value);
      cfg.cfl_overridden = true;
    }
    else if (key == "kappa")
      cfg.scenario.kappa = parse_positive(key, value);
    else if (key == "t_final")
      cfg.scenario.t_final = parse_positive(key, value);
    else if (key == "newton_tol")
      cfg.newton_tol = parse_positive(key, value);
    else if (key == "out_dir")
      cfg.out_dir = trim(value);
    else if (key == "snapshots")
      cfg.snapshot_times = parse_time_list(key, value);
    else if (key == "exact")
      cfg.exact = parse_bool(key, value);
  }
  cfg.spec.validate();
  return cfg;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace bgk
