//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file grid.hpp
//  \brief phase-space grid, distribution storage and macroscopic moment fields
//
// The position grid is cell-centered: x_i = x_min + (i + 1/2) dx, i = 0..N_x-1.
// The velocity grid is node-based: v_j = v_min + j dv, j = 0..N_v, i.e. N_v+1 nodes.
// Moments are midpoint-rule sums over the velocity nodes with weight dv.

#ifndef BGK_GRID_HPP_
#define BGK_GRID_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "bgk/errors.hpp"

namespace bgk {

enum class Bc { Periodic, FreeFlow };

//----------------------------------------------------------------------------------------
//! \struct PhaseGrid
//  \brief immutable description of the (x, v) discretization

struct PhaseGrid {
  double x_min, x_max;
  int nx;  // position cell count
  double v_min, v_max;
  int nv;  // velocity interval count; nodes are j = 0..nv
  Bc bc;

  PhaseGrid(double x_min_, double x_max_, int nx_, double v_min_, double v_max_,
            int nv_, Bc bc_)
      : x_min(x_min_), x_max(x_max_), nx(nx_), v_min(v_min_), v_max(v_max_),
        nv(nv_), bc(bc_) {
    if (nx < 1 || x_max <= x_min)
      throw ConfigError("phase grid: need nx >= 1 and x_max > x_min");
    if (nv + 1 < 3 || v_max <= v_min)
      throw ConfigError("phase grid: need at least 3 velocity nodes and v_max > v_min");
  }

  double dx() const { return (x_max - x_min) / nx; }
  double dv() const { return (v_max - v_min) / nv; }
  int num_vnodes() const { return nv + 1; }
  double x_center(int i) const { return x_min + (i + 0.5) * dx(); }
  double v_node(int j) const { return v_min + j * dv(); }
  double vmax_abs() const { return std::max(std::fabs(v_min), std::fabs(v_max)); }
};

//----------------------------------------------------------------------------------------
//! \struct Distribution
//  \brief f(x_i, v_j) with the velocity index contiguous
//
// Layout: values[i * (nv+1) + j]. Transport sweeps walk fixed j across i (strided) and
// per-cell collision solves walk fixed i across j (contiguous); the collision solve is
// the inner hot loop so it gets the unit stride.

struct Distribution {
  int nx = 0;
  int nvn = 0;  // number of velocity nodes
  std::vector<double> values;

  Distribution() = default;
  Distribution(int nx_, int nvn_) : nx(nx_), nvn(nvn_), values(
      static_cast<std::size_t>(nx_) * nvn_, 0.0) {}

  explicit Distribution(const PhaseGrid &g) : Distribution(g.nx, g.num_vnodes()) {}

  double &operator()(int i, int j) { return values[static_cast<std::size_t>(i) * nvn + j]; }
  double operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i) * nvn + j];
  }
  double *row(int i) { return values.data() + static_cast<std::size_t>(i) * nvn; }
  const double *row(int i) const {
    return values.data() + static_cast<std::size_t>(i) * nvn;
  }

  bool same_shape(const PhaseGrid &g) const {
    return nx == g.nx && nvn == g.num_vnodes();
  }

  // Hard error on any non-finite entry; silent NaN propagation is forbidden.
  void check_finite(const char *where) const {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!std::isfinite(values[k])) {
        const int i = static_cast<int>(k) / nvn;
        const int j = static_cast<int>(k) % nvn;
        throw NonFiniteValueError(std::string(where) + ": non-finite value at cell " +
                                  std::to_string(i) + ", velocity node " +
                                  std::to_string(j));
      }
    }
  }
};

//----------------------------------------------------------------------------------------
//! \struct MomentField
//  \brief conserved triple (rho, rho*U, E) per cell plus derived primitives
//
// 1D monoatomic closure: E = rho*T/2 + rho*U^2/2, so T = 2E/rho - U^2 and p = rho*T.
// Cells with rho <= 0 are marked invalid; requesting a Maxwellian there errors downstream.

struct MomentField {
  std::vector<double> rho, mom, energy;

  MomentField() = default;
  explicit MomentField(int nx) : rho(nx, 0.0), mom(nx, 0.0), energy(nx, 0.0) {}

  int size() const { return static_cast<int>(rho.size()); }
  bool valid(int i) const { return rho[i] > 0.0; }
  double u(int i) const { return mom[i] / rho[i]; }
  double temperature(int i) const {
    const double ui = u(i);
    return 2.0 * energy[i] / rho[i] - ui * ui;
  }
  double pressure(int i) const { return rho[i] * temperature(i); }
};

struct CollisionParams {
  double kappa;  // Knudsen number

  explicit CollisionParams(double kappa_) : kappa(kappa_) {
    if (!(kappa > 0.0)) throw ConfigError("collision params: kappa must be > 0");
  }
};

}  // namespace bgk

#endif  // BGK_GRID_HPP_
