//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
#ifndef BGK_CSV_HPP_
#define BGK_CSV_HPP_
//! \file csv.hpp
//  \brief CSV artifact writers and a reader for round-trip checks
//
// All values print with %.17g so that rereading reproduces the doubles
// bit-exactly, and writers emit rows in fixed order: identical configs give
// byte-identical files.

#include <string>
#include <utility>
#include <vector>

#include "bgk/diagnostics.hpp"
#include "bgk/grid.hpp"
#include "bgk/integrator.hpp"
#include "bgk/riemann.hpp"
#include "bgk/stability.hpp"

namespace bgk {

// Create the directory (and parents) if absent; IoError on failure.
void ensure_directory(const std::string &path);

// Moment snapshot, header `x,rho,u,T,p`, one row per cell.
void write_snapshot_csv(const std::string &path, const PhaseGrid &g,
                        const MomentField &m);

// Conservation history, header `step,t,mass_rel,mom_rel,energy_rel` (columns
// switch to absolute drift for moments whose initial total vanishes; the run
// summary records which).
void write_history_csv(const std::string &path,
                       const std::vector<ConservationRecord> &history);

// Convergence pairs, header `nx_coarse,nx_fine,error,rate` (rate is nan on the
// first pair, which has no predecessor).
void write_rate_csv(const std::string &path, const ConvergenceTable &table);

// Exact Riemann reference curve, header `x,rho,u,T,p` with T = p/rho.
void write_exact_csv(const std::string &path, const std::vector<double> &x,
                     const std::vector<EulerState> &states);

// Generic two-column table (stability scans and the like).
void write_xy_csv(const std::string &path, const std::string &xname,
                  const std::string &yname,
                  const std::vector<std::pair<double, double>> &rows);

//! \struct CsvTable
//  \brief parsed CSV contents (numeric cells; empty cells read as nan)
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string &name) const;  // -1 when absent
};

CsvTable read_csv(const std::string &path);

}  // namespace bgk

#endif  // BGK_CSV_HPP_
