//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file csv.cpp
//  \brief CSV artifact writers and reader

#include "bgk/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "bgk/errors.hpp"

namespace bgk {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

void finish(std::ofstream &out, const std::string &path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void ensure_directory(const std::string &path) {
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw IoError("cannot create directory '" + path + "': " + ec.message());
}

void write_snapshot_csv(const std::string &path, const PhaseGrid &g,
                        const MomentField &m) {
  std::ofstream out = open_out(path);
  out << "x,rho,u,T,p\n";
  for (int i = 0; i < g.nx; ++i) {
    out << fmt(g.x_center(i)) << ',' << fmt(m.rho[i]) << ',' << fmt(m.u(i)) << ','
        << fmt(m.temperature(i)) << ',' << fmt(m.pressure(i)) << '\n';
  }
  finish(out, path);
}

void write_history_csv(const std::string &path,
                       const std::vector<ConservationRecord> &history) {
  std::ofstream out = open_out(path);
  out << "step,t,mass_rel,mom_rel,energy_rel\n";
  for (const ConservationRecord &r : history) {
    out << r.step << ',' << fmt(r.t) << ',' << fmt(r.drift[0]) << ',' << fmt(r.drift[1])
        << ',' << fmt(r.drift[2]) << '\n';
  }
  finish(out, path);
}

void write_rate_csv(const std::string &path, const ConvergenceTable &table) {
  std::ofstream out = open_out(path);
  out << "nx_coarse,nx_fine,error,rate\n";
  for (std::size_t k = 0; k < table.error.size(); ++k) {
    out << table.nx_coarse[k] << ',' << table.nx_fine[k] << ',' << fmt(table.error[k])
        << ',' << fmt(table.rate[k]) << '\n';
  }
  finish(out, path);
}

void write_exact_csv(const std::string &path, const std::vector<double> &x,
                     const std::vector<EulerState> &states) {
  if (x.size() != states.size())
    throw ConfigError("write_exact_csv: coordinate and state counts differ");
  std::ofstream out = open_out(path);
  out << "x,rho,u,T,p\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    const EulerState &s = states[i];
    out << fmt(x[i]) << ',' << fmt(s.rho) << ',' << fmt(s.u) << ',' << fmt(s.p / s.rho)
        << ',' << fmt(s.p) << '\n';
  }
  finish(out, path);
}

void write_xy_csv(const std::string &path, const std::string &xname,
                  const std::string &yname,
                  const std::vector<std::pair<double, double>> &rows) {
  std::ofstream out = open_out(path);
  out << xname << ',' << yname << '\n';
  for (const auto &[x, y] : rows) out << fmt(x) << ',' << fmt(y) << '\n';
  finish(out, path);
}

int CsvTable::column(const std::string &name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable read_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV file: " + path);
  std::istringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      if (cell.empty()) {
        row.push_back(std::nan(""));
        continue;
      }
      char *end = nullptr;
      const double x = std::strtod(cell.c_str(), &end);
      if (end != cell.c_str() + cell.size())
        throw IoError(path + ":" + std::to_string(lineno) + ": non-numeric cell '" +
                      cell + "'");
      row.push_back(x);
    }
    if (row.size() != table.header.size())
      throw IoError(path + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(table.header.size()) + " cells, got " +
                    std::to_string(row.size()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace bgk
