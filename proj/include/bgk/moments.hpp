//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file moments.hpp
//  \brief discrete moments of a distribution: midpoint-rule sums against (1, v, v^2/2)
//
// Summation order is fixed (ascending j, then ascending i) so runs are bit-reproducible
// independent of the worker count.

#ifndef BGK_MOMENTS_HPP_
#define BGK_MOMENTS_HPP_

#include <array>

#include "bgk/grid.hpp"

namespace bgk {

// (rho, rho*U, E) of one velocity row: sum_j f_j phi(v_j) dv, phi = (1, v, v^2/2).
std::array<double, 3> moments_of_row(const double *f, const PhaseGrid &g);

// Per-cell moments of the whole field.
MomentField compute_moments(const Distribution &f, const PhaseGrid &g);

// Domain totals sum_i m_i * dx for each conserved component (fixed order).
std::array<double, 3> moment_totals(const Distribution &f, const PhaseGrid &g);

}  // namespace bgk

#endif  // BGK_MOMENTS_HPP_
