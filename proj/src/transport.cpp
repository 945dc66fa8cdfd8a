//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file transport.cpp
//  \brief padded-row gather and per-row interpolation sweep

#include "bgk/transport.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bgk/parallel.hpp"

namespace bgk {

namespace {

inline int wrap_index(int t, int nx) {
  t %= nx;
  return t < 0 ? t + nx : t;
}

inline int clamp_index(int t, int nx) { return t < 0 ? 0 : (t >= nx ? nx - 1 : t); }

}  // namespace

void validate_shift_extent(const PhaseGrid &g, double max_abs_tau, GwenoOrder order) {
  const double cells = std::fabs(max_abs_tau) * g.vmax_abs() / g.dx();
  const int reach = static_cast<int>(std::ceil(cells)) +
                    std::max(gweno_left_width(order), gweno_right_width(order));
  if (reach >= g.nx)
    throw StencilOutOfDomainError(
        "shifted stencil spans " + std::to_string(reach) + " cells but the grid has only " +
        std::to_string(g.nx) + "; reduce the time step or refine the grid");
}

Distribution interpolate_shifted(const Distribution &f, const PhaseGrid &g, double tau,
                                 GwenoOrder order, const WenoParams &params) {
  const int nx = g.nx;
  const int nvn = g.num_vnodes();
  const double dx = g.dx();
  const int wl = gweno_left_width(order);
  const int wr = gweno_right_width(order);
  Distribution out(nx, nvn);

  parallel_for(0, nvn, [&](int j) {
    const double v = g.v_node(j);
    // Foot of cell i sits at fractional index i + q.
    const double q = -tau * v / dx;
    const double base_f = std::floor(q);
    int base = static_cast<int>(base_f);
    double theta = q - base_f;
    if (theta >= 1.0) {  // guard against floor() edge rounding
      theta -= 1.0;
      ++base;
    }

    // Gather the row plus halo into a contiguous buffer. Needed source indices are
    // [base - wl, nx-1 + base + wr].
    const int lo = base - wl;
    const int hi = nx - 1 + base + wr;
    std::vector<double> padded(hi - lo + 1);
    if (g.bc == Bc::Periodic) {
      for (int t = lo; t <= hi; ++t) padded[t - lo] = f(wrap_index(t, nx), j);
    } else {
      for (int t = lo; t <= hi; ++t) padded[t - lo] = f(clamp_index(t, nx), j);
    }

    const GwenoKernel kernel(order, theta, params);
    for (int i = 0; i < nx; ++i) out(i, j) = kernel(&padded[i + base - lo]);
  });

  return out;
}

}  // namespace bgk
