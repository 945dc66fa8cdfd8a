//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
#ifndef BGK_DIAGNOSTICS_HPP_
#define BGK_DIAGNOSTICS_HPP_
//! \file diagnostics.hpp
//  \brief conservation drift, distance to equilibrium and convergence tables

#include <array>
#include <vector>

#include "bgk/grid.hpp"
#include "bgk/integrator.hpp"
#include "bgk/maxwellian.hpp"
#include "bgk/scenarios.hpp"

namespace bgk {

//! \struct DriftReport
//  \brief per-moment drift between two total-moment snapshots
//
// Relative to the initial total, except for moments whose initial total
// vanishes (momentum in symmetric setups): those are reported in absolute
// terms and flagged.
struct DriftReport {
  std::array<double, 3> drift{};
  std::array<bool, 3> absolute{};
};

DriftReport conservation_error(const std::array<double, 3> &initial,
                               const std::array<double, 3> &final_totals);

// || f - M(f) ||_1 = sum_{ij} |f_ij - M_ij| dv dx with the cellwise Maxwellian
// in the requested realization. The relaxation test checks this is O(kappa).
double distance_to_equilibrium(const Distribution &f, const PhaseGrid &g,
                               MaxwellianMode mode, const NewtonConfig &newton);

// Restrict a fine-grid cell-centered field (size 2N) to the coarse grid (size
// N). Coarse centers fall halfway between fine-center pairs, so this is
// sixth-order midpoint interpolation with weights (3, -25, 150, 150, -25, 3)/256;
// indices wrap for periodic data and clamp otherwise.
std::vector<double> restrict_to_coarse(const std::vector<double> &fine, Bc bc);

//! \struct ConvergenceTable
//  \brief self-convergence errors and rates on consecutive resolution pairs
//
// error[k] = relative L1 difference between the run at nx_coarse[k] and the
// next-finer run restricted to its grid; rate[k] = log2(error[k-1]/error[k])
// with rate[0] undefined (NaN).
struct ConvergenceTable {
  std::vector<int> nx_coarse;
  std::vector<int> nx_fine;
  std::vector<double> error;
  std::vector<double> rate;
};

// Pairwise table from per-level density profiles (level k has nx_list[k] cells).
ConvergenceTable density_convergence(const std::vector<int> &nx_list,
                                     const std::vector<std::vector<double>> &rho,
                                     Bc bc);

// Run the scenario at every resolution in nx_list (each doubling the previous,
// at least two) and tabulate density self-convergence.
ConvergenceTable convergence_table(const SchemeSpec &spec, ScenarioId id,
                                   const std::vector<int> &nx_list, int nv, double cfl,
                                   double kappa, const NewtonConfig &newton,
                                   const WenoParams &weno);

}  // namespace bgk

#endif  // BGK_DIAGNOSTICS_HPP_
