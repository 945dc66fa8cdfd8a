//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file maxwellian.cpp
//  \brief Newton iteration on the 3-parameter exponential family

#include "bgk/maxwellian.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bgk {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Moments of exp(a . phi) by direct summation; returns +inf residual components on
// overflow so the line search can reject wild steps.
std::array<double, 3> exp_family_moments(const std::array<double, 3> &a,
                                         const PhaseGrid &g) {
  const double dv = g.dv();
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (int j = 0; j < g.num_vnodes(); ++j) {
    const double v = g.v_node(j);
    const double e = a[0] + a[1] * v + a[2] * 0.5 * v * v;
    const double w = std::exp(e);
    m0 += w;
    m1 += w * v;
    m2 += w * 0.5 * v * v;
  }
  return {m0 * dv, m1 * dv, m2 * dv};
}

double residual_norm(const std::array<double, 3> &m, const std::array<double, 3> &target) {
  double r = 0.0;
  for (int l = 0; l < 3; ++l) {
    const double d = std::fabs(m[l] - target[l]);
    if (!(d == d)) return std::numeric_limits<double>::infinity();  // NaN
    if (d > r) r = d;
  }
  return r;
}

// 3x3 direct elimination with partial pivoting. The pivot ratio doubles as a cheap
// condition estimate; a collapse of the smallest pivot signals a (numerically)
// rank-deficient moment system.
void solve3(std::array<std::array<double, 3>, 3> A, std::array<double, 3> &rhs,
            const char *context) {
  int perm[3] = {0, 1, 2};
  double pivot_max = 0.0, pivot_min = std::numeric_limits<double>::infinity();
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(A[perm[r]][col]) > std::fabs(A[perm[best]][col])) best = r;
    std::swap(perm[col], perm[best]);
    const double piv = A[perm[col]][col];
    const double apiv = std::fabs(piv);
    if (apiv > pivot_max) pivot_max = apiv;
    if (apiv < pivot_min) pivot_min = apiv;
    if (!(apiv > 0.0) || pivot_min < 1e-14 * pivot_max)
      throw SingularJacobianError(std::string(context) +
                                  ": Newton system singular (pivot ratio " +
                                  std::to_string(pivot_max / (pivot_min + 1e-300)) + ")");
    for (int r = col + 1; r < 3; ++r) {
      const double fac = A[perm[r]][col] / piv;
      for (int c = col; c < 3; ++c) A[perm[r]][c] -= fac * A[perm[col]][c];
      rhs[perm[r]] -= fac * rhs[perm[col]];
    }
  }
  std::array<double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    double s = rhs[perm[row]];
    for (int c = row + 1; c < 3; ++c) s -= A[perm[row]][c] * x[c];
    x[row] = s / A[perm[row]][row];
  }
  rhs = x;
}

}  // namespace

void continuous_maxwellian(double rho, double u, double temperature, const PhaseGrid &g,
                           double *out) {
  if (!(rho > 0.0) || !(temperature > 0.0))
    throw NonpositiveStateError("continuous Maxwellian needs rho > 0 and T > 0, got rho=" +
                                std::to_string(rho) + " T=" + std::to_string(temperature));
  const double norm = rho / std::sqrt(kTwoPi * temperature);
  const double inv2t = 1.0 / (2.0 * temperature);
  for (int j = 0; j < g.num_vnodes(); ++j) {
    const double dvj = g.v_node(j) - u;
    out[j] = norm * std::exp(-dvj * dvj * inv2t);
  }
}

std::array<double, 3> continuous_log_params(double rho, double u, double temperature) {
  return {std::log(rho / std::sqrt(kTwoPi * temperature)) - u * u / (2.0 * temperature),
          u / temperature, -1.0 / temperature};
}

void exp_family_row(const std::array<double, 3> &a, const PhaseGrid &g, double *out) {
  for (int j = 0; j < g.num_vnodes(); ++j) {
    const double v = g.v_node(j);
    out[j] = std::exp(a[0] + a[1] * v + a[2] * 0.5 * v * v);
  }
}

std::array<std::array<double, 3>, 3> newton_jacobian(const std::array<double, 3> &a,
                                                     const PhaseGrid &g) {
  const double dv = g.dv();
  std::array<std::array<double, 3>, 3> J{};
  for (int j = 0; j < g.num_vnodes(); ++j) {
    const double v = g.v_node(j);
    const double phi[3] = {1.0, v, 0.5 * v * v};
    const double w = std::exp(a[0] + a[1] * v + a[2] * 0.5 * v * v) * dv;
    for (int l = 0; l < 3; ++l)
      for (int m = l; m < 3; ++m) J[l][m] += phi[l] * phi[m] * w;
  }
  J[1][0] = J[0][1];
  J[2][0] = J[0][2];
  J[2][1] = J[1][2];
  return J;
}

std::array<double, 3> discrete_maxwellian(const std::array<double, 3> &target,
                                          const PhaseGrid &g, const NewtonConfig &cfg,
                                          double *out_row, int *iters_out) {
  if (g.num_vnodes() < 3)
    throw RankDeficientGridError("discrete Maxwellian needs at least 3 velocity nodes");
  const double rho = target[0];
  if (!(rho > 0.0))
    throw NonpositiveStateError("discrete Maxwellian: rho=" + std::to_string(rho));
  const double u = target[1] / rho;
  const double temperature = 2.0 * target[2] / rho - u * u;
  if (!(temperature > 0.0))
    throw NonpositiveStateError("discrete Maxwellian: T=" + std::to_string(temperature));

  std::array<double, 3> a = continuous_log_params(rho, u, temperature);
  std::array<double, 3> m = exp_family_moments(a, g);
  double res = residual_norm(m, target);

  int iter = 0;
  for (; iter < cfg.max_iter && res >= cfg.tol; ++iter) {
    auto J = newton_jacobian(a, g);
    std::array<double, 3> step = {target[0] - m[0], target[1] - m[1], target[2] - m[2]};
    solve3(J, step, "discrete Maxwellian");

    // Step-halving line search on the residual norm; far-from-equilibrium targets
    // (strongly bimodal data) occasionally need damping on the first iterations.
    double lambda = 1.0;
    std::array<double, 3> a_best = a;
    std::array<double, 3> m_best = m;
    double res_best = res;
    bool improved = false;
    for (int h = 0; h <= cfg.max_halvings; ++h) {
      const std::array<double, 3> a_try = {a[0] + lambda * step[0],
                                           a[1] + lambda * step[1],
                                           a[2] + lambda * step[2]};
      const auto m_try = exp_family_moments(a_try, g);
      const double res_try = residual_norm(m_try, target);
      if (res_try < res_best) {
        a_best = a_try;
        m_best = m_try;
        res_best = res_try;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved)
      throw NewtonDivergedError("discrete Maxwellian: no descent after " +
                                std::to_string(cfg.max_halvings) +
                                " halvings at residual " + std::to_string(res));
    a = a_best;
    m = m_best;
    res = res_best;
  }

  if (res >= cfg.tol)
    throw NewtonDivergedError("discrete Maxwellian: residual " + std::to_string(res) +
                              " after " + std::to_string(iter) + " iterations");
  if (!(a[2] < 0.0))
    throw NewtonDivergedError(
        "discrete Maxwellian: converged to non-decaying coefficients (a[2] = " +
        std::to_string(a[2]) + ")");

  exp_family_row(a, g, out_row);
  if (iters_out) *iters_out = iter;
  return a;
}

int collision_maxwellian(const std::array<double, 3> &target, const PhaseGrid &g,
                         MaxwellianMode mode, const NewtonConfig &cfg, double *out_row,
                         const char *context) {
  int iters = 0;
  try {
    if (mode == MaxwellianMode::Continuous) {
      const double rho = target[0];
      if (!(rho > 0.0))
        throw NonpositiveStateError("rho=" + std::to_string(rho));
      const double u = target[1] / rho;
      const double temperature = 2.0 * target[2] / rho - u * u;
      continuous_maxwellian(rho, u, temperature, g, out_row);
    } else {
      discrete_maxwellian(target, g, cfg, out_row, &iters);
    }
  } catch (const NewtonDivergedError &e) {
    throw NewtonDivergedError(std::string(context) + ": " + e.what());
  } catch (const SingularJacobianError &e) {
    throw SingularJacobianError(std::string(context) + ": " + e.what());
  } catch (const NumericalError &e) {
    throw NumericalError(std::string(context) + ": " + e.what());
  }
  return iters;
}

}  // namespace bgk
