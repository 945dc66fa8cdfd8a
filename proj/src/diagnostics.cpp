//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file diagnostics.cpp
//  \brief conservation drift, distance to equilibrium and convergence tables

#include "bgk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "bgk/errors.hpp"
#include "bgk/moments.hpp"
#include "bgk/parallel.hpp"

namespace bgk {

DriftReport conservation_error(const std::array<double, 3> &initial,
                               const std::array<double, 3> &final_totals) {
  DriftReport r;
  for (int m = 0; m < 3; ++m) {
    r.drift[m] = std::fabs(final_totals[m] - initial[m]);
    r.absolute[m] = std::fabs(initial[m]) < 1e-10 * std::fabs(initial[0]);
    if (!r.absolute[m]) r.drift[m] /= std::fabs(initial[m]);
  }
  return r;
}

double distance_to_equilibrium(const Distribution &f, const PhaseGrid &g,
                               MaxwellianMode mode, const NewtonConfig &newton) {
  const int nvn = g.num_vnodes();
  std::vector<double> partial(g.nx, 0.0);
  parallel_for(0, g.nx, [&](int i) {
    std::vector<double> maxw(nvn);
    const std::array<double, 3> m = moments_of_row(f.row(i), g);
    char ctx[48];
    std::snprintf(ctx, sizeof ctx, "equilibrium distance, cell %d", i);
    collision_maxwellian(m, g, mode, newton, maxw.data(), ctx);
    const double *row = f.row(i);
    double acc = 0.0;
    for (int j = 0; j < nvn; ++j) acc += std::fabs(row[j] - maxw[j]);
    partial[i] = acc;
  });
  // Sequential reduction keeps the result independent of the thread count.
  double total = 0.0;
  for (double p : partial) total += p;
  return total * g.dv() * g.dx();
}

std::vector<double> restrict_to_coarse(const std::vector<double> &fine, Bc bc) {
  const int nf = static_cast<int>(fine.size());
  if (nf < 2 || nf % 2 != 0)
    throw ConfigError("restrict_to_coarse: fine field must have even size >= 2");
  const int nc = nf / 2;
  // Coarse center i sits midway between fine centers 2i and 2i+1.
  static constexpr double w[6] = {3.0 / 256.0,  -25.0 / 256.0, 150.0 / 256.0,
                                  150.0 / 256.0, -25.0 / 256.0, 3.0 / 256.0};
  std::vector<double> coarse(nc);
  for (int i = 0; i < nc; ++i) {
    double acc = 0.0;
    for (int k = 0; k < 6; ++k) {
      int idx = 2 * i + k - 2;
      if (bc == Bc::Periodic)
        idx = (idx % nf + nf) % nf;
      else
        idx = std::clamp(idx, 0, nf - 1);
      acc += w[k] * fine[idx];
    }
    coarse[i] = acc;
  }
  return coarse;
}

ConvergenceTable density_convergence(const std::vector<int> &nx_list,
                                     const std::vector<std::vector<double>> &rho,
                                     Bc bc) {
  const int levels = static_cast<int>(nx_list.size());
  if (levels < 2) throw ConfigError("convergence table needs at least two resolutions");
  if (static_cast<int>(rho.size()) != levels)
    throw ConfigError("convergence table: profile count does not match resolutions");
  for (int k = 0; k < levels; ++k) {
    if (static_cast<int>(rho[k].size()) != nx_list[k])
      throw ConfigError("convergence table: profile size mismatch at level " +
                        std::to_string(k));
    if (k > 0 && nx_list[k] != 2 * nx_list[k - 1])
      throw ConfigError("convergence table: each resolution must double the previous");
  }

  ConvergenceTable t;
  for (int k = 0; k + 1 < levels; ++k) {
    const std::vector<double> ref = restrict_to_coarse(rho[k + 1], bc);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < nx_list[k]; ++i) {
      num += std::fabs(rho[k][i] - ref[i]);
      den += std::fabs(ref[i]);
    }
    t.nx_coarse.push_back(nx_list[k]);
    t.nx_fine.push_back(nx_list[k + 1]);
    t.error.push_back(num / den);
    t.rate.push_back(k == 0 ? std::nan("")
                            : std::log2(t.error[k - 1] / t.error[k]));
  }
  return t;
}

ConvergenceTable convergence_table(const SchemeSpec &spec, ScenarioId id,
                                   const std::vector<int> &nx_list, int nv, double cfl,
                                   double kappa, const NewtonConfig &newton,
                                   const WenoParams &weno) {
  if (nx_list.size() < 2)
    throw ConfigError("convergence table needs at least two resolutions");
  const Scenario sc = scenario_defaults(id);
  const CollisionParams coll(kappa);
  std::vector<std::vector<double>> rho;
  rho.reserve(nx_list.size());
  for (int nx : nx_list) {
    const PhaseGrid g = sc.make_grid(nx, nv);
    RunOptions opt;
    opt.spec = spec;
    opt.cfl = cfl;
    opt.t_final = sc.t_final;
    opt.newton = newton;
    opt.weno = weno;
    const RunResult res = run(scenario_initial(sc, g), g, coll, opt);
    rho.push_back(res.moments_final.rho);
  }
  return density_convergence(nx_list, rho, sc.bc);
}

}  // namespace bgk
