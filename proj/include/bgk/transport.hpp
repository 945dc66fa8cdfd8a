//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file transport.hpp
//  \brief semi-Lagrangian shift of a distribution along characteristics
//
// For a shift time tau the foot of the characteristic through (x_i, v_j) is
// x_i - tau*v_j. On a uniform grid the fractional offset theta = frac(-tau*v_j/dx) is
// the same for every cell of a velocity row, so each row uses one frozen G-WENO kernel
// over a padded copy of the row (periodic wrap or free-flow edge clamp).

#ifndef BGK_TRANSPORT_HPP_
#define BGK_TRANSPORT_HPP_

#include "bgk/grid.hpp"
#include "bgk/gweno.hpp"

namespace bgk {

// out_{ij} = I[f(., v_j)](x_i - tau * v_j). tau may be negative (backward stage
// differences use it). Throws StencilOutOfDomain if the shifted stencil would span
// more than the whole domain.
Distribution interpolate_shifted(const Distribution &f, const PhaseGrid &g, double tau,
                                 GwenoOrder order, const WenoParams &params);

// Validate that a maximum shift magnitude |tau|*v_max plus the stencil radius fits
// inside the domain; used at configuration time before a run starts.
void validate_shift_extent(const PhaseGrid &g, double max_abs_tau, GwenoOrder order);

}  // namespace bgk

#endif  // BGK_TRANSPORT_HPP_
