//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file maxwellian.hpp
//  \brief continuous Maxwellian evaluation and discrete-Maxwellian Newton projection
//
// The discrete Maxwellian on a velocity grid is the exponential-family row
//    dM_j = exp(a . phi(v_j)),   phi = (1, v, v^2/2),
// whose midpoint-rule moments match a prescribed conserved triple exactly (to a small
// residual tolerance). Matching discrete moments instead of sampling the continuous
// Maxwellian is what makes the relaxation step conserve mass, momentum and energy at
// the level of the quadrature instead of the quadrature's truncation error.

#ifndef BGK_MAXWELLIAN_HPP_
#define BGK_MAXWELLIAN_HPP_

#include <array>

#include "bgk/grid.hpp"

namespace bgk {

enum class MaxwellianMode { Continuous, Discrete };

struct NewtonConfig {
  double tol = 1e-14;   // max-norm residual tolerance on the moment mismatch
  int max_iter = 50;
  int max_halvings = 8;  // step-halving line search cap
};

//! \struct NewtonStats
//  \brief per-run accounting of the per-cell Newton solves
struct NewtonStats {
  long long solves = 0;
  long long total_iterations = 0;
  int max_iterations = 0;

  void record(int iters) {
    ++solves;
    total_iterations += iters;
    if (iters > max_iterations) max_iterations = iters;
  }
  void merge(const NewtonStats &o) {
    solves += o.solves;
    total_iterations += o.total_iterations;
    if (o.max_iterations > max_iterations) max_iterations = o.max_iterations;
  }
};

// rho/sqrt(2 pi T) * exp(-(v_j - U)^2 / (2T)) on every node. Throws NonpositiveState
// if rho <= 0 or T <= 0.
void continuous_maxwellian(double rho, double u, double temperature, const PhaseGrid &g,
                           double *out);

// Log-parameters of the continuous Maxwellian; the Newton seed.
std::array<double, 3> continuous_log_params(double rho, double u, double temperature);

// Row exp(a . phi(v_j)) for given coefficients.
void exp_family_row(const std::array<double, 3> &a, const PhaseGrid &g, double *out);

// Analytic Jacobian J_lm = sum_j phi_l(v_j) phi_m(v_j) exp(a . phi(v_j)) dv.
// Symmetric positive definite whenever the row decays inside the grid.
std::array<std::array<double, 3>, 3> newton_jacobian(const std::array<double, 3> &a,
                                                     const PhaseGrid &g);

// Solve the moment-matching problem: find a with moments(exp(a . phi)) = target.
// Returns the coefficients and fills the row; iters_out (optional) receives the
// iteration count. Throws NewtonDiverged / SingularJacobian / RankDeficientGrid /
// NonpositiveState.
std::array<double, 3> discrete_maxwellian(const std::array<double, 3> &target,
                                          const PhaseGrid &g, const NewtonConfig &cfg,
                                          double *out_row, int *iters_out = nullptr);

// Collision Maxwellian of a conserved triple in either mode. In Continuous mode the
// triple is converted to (rho, U, T) and sampled; in Discrete mode the Newton solve
// runs. context is prepended to error messages (typically "cell i, step n").
// Returns the Newton iteration count (0 in Continuous mode) so callers running one
// solve per cell in parallel can aggregate NewtonStats without sharing state.
int collision_maxwellian(const std::array<double, 3> &target, const PhaseGrid &g,
                         MaxwellianMode mode, const NewtonConfig &cfg, double *out_row,
                         const char *context);

}  // namespace bgk

#endif  // BGK_MAXWELLIAN_HPP_
