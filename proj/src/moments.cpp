//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file moments.cpp
//  \brief midpoint-rule moment sums

#include "bgk/moments.hpp"

#include "bgk/parallel.hpp"

namespace bgk {

std::array<double, 3> moments_of_row(const double *f, const PhaseGrid &g) {
  const int nvn = g.num_vnodes();
  const double dv = g.dv();
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (int j = 0; j < nvn; ++j) {
    const double v = g.v_node(j);
    m0 += f[j];
    m1 += f[j] * v;
    m2 += f[j] * (0.5 * v * v);
  }
  return {m0 * dv, m1 * dv, m2 * dv};
}

MomentField compute_moments(const Distribution &f, const PhaseGrid &g) {
  MomentField m(g.nx);
  parallel_for(0, g.nx, [&](int i) {
    const auto mi = moments_of_row(f.row(i), g);
    m.rho[i] = mi[0];
    m.mom[i] = mi[1];
    m.energy[i] = mi[2];
  });
  return m;
}

std::array<double, 3> moment_totals(const Distribution &f, const PhaseGrid &g) {
  const double dx = g.dx();
  double t0 = 0.0, t1 = 0.0, t2 = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const auto mi = moments_of_row(f.row(i), g);
    t0 += mi[0];
    t1 += mi[1];
    t2 += mi[2];
  }
  return {t0 * dx, t1 * dx, t2 * dx};
}

}  // namespace bgk
