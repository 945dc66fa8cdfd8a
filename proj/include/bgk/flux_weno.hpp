//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file flux_weno.hpp
//  \brief upwind flux splitting and conservative finite-difference WENO face fluxes
//
// Classical finite-difference WENO reconstruction of numerical fluxes at cell faces
// (Shu, "Essentially non-oscillatory and weighted essentially non-oscillatory schemes
// for hyperbolic conservation laws", 1998). The advection speed in the kinetic
// equation is the velocity node itself, so the splitting is exact upwinding:
// F+ = v f for v > 0, F- = v f for v < 0, and F̂_{i+1/2} = F̂+_i + F̂-_{i+1}.
// (F̂_{i+1/2} - F̂_{i-1/2})/dx then approximates d(vf)/dx at 5th (or 3rd) order and
// telescopes exactly when summed over cells, which is what the conservative
// correction step of the time integrators relies on.

#ifndef BGK_FLUX_WENO_HPP_
#define BGK_FLUX_WENO_HPP_

#include <vector>

#include "bgk/grid.hpp"
#include "bgk/gweno.hpp"

namespace bgk {

enum class FluxOrder { First, Third, Fifth };

inline FluxOrder flux_order_for(GwenoOrder o) {
  return o == GwenoOrder::W35 ? FluxOrder::Fifth
                              : (o == GwenoOrder::W23 ? FluxOrder::Third : FluxOrder::First);
}

// Split a pointwise flux value: returns (F+, F-) with F+ + F- = v*f and the sign
// carried entirely by one side (both zero at v = 0).
inline void flux_split(double f, double v, double *fplus, double *fminus) {
  if (v > 0.0) {
    *fplus = v * f;
    *fminus = 0.0;
  } else if (v < 0.0) {
    *fplus = 0.0;
    *fminus = v * f;
  } else {
    *fplus = 0.0;
    *fminus = 0.0;
  }
}

// Face fluxes F̂_{k-1/2} for k = 0..nx (face k sits at x_min + k*dx). fp/fm hold the
// per-cell split fluxes of one velocity row; out is resized to nx+1.
void weno_flux_faces(const std::vector<double> &fp, const std::vector<double> &fm, Bc bc,
                     FluxOrder order, const WenoParams &params, std::vector<double> &out);

}  // namespace bgk

#endif  // BGK_FLUX_WENO_HPP_
