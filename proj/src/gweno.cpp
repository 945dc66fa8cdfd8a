//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file gweno.cpp
//  \brief G-WENO kernels: linear weights, Lagrange bases and smoothness indicators

#include "bgk/gweno.hpp"

#include <cassert>

namespace bgk {

namespace {

// Lagrange basis of the cubic through integer nodes {a, a+1, a+2, a+3}, at theta.
void cubic_basis(int a, double theta, double *basis) {
  for (int m = 0; m < 4; ++m) {
    double num = 1.0, den = 1.0;
    for (int k = 0; k < 4; ++k) {
      if (k == m) continue;
      num *= theta - (a + k);
      den *= m - k;
    }
    basis[m] = num / den;
  }
}

// Same for the quadratic through {a, a+1, a+2}.
void quadratic_basis(int a, double theta, double *basis) {
  for (int m = 0; m < 3; ++m) {
    double num = 1.0, den = 1.0;
    for (int k = 0; k < 3; ++k) {
      if (k == m) continue;
      num *= theta - (a + k);
      den *= m - k;
    }
    basis[m] = num / den;
  }
}

// beta = int_0^1 (P')^2 + (P'')^2 ds for the quadratic through (w0,w1,w2) at
// nodes {a, a+1, a+2} with a = -1 (left) or 0 (right).
inline double beta_quadratic_left(double w0, double w1, double w2) {
  return (13.0 / 12.0) * w0 * w0 + (16.0 / 3.0) * w1 * w1 + (25.0 / 12.0) * w2 * w2 -
         (13.0 / 3.0) * w0 * w1 + (13.0 / 6.0) * w0 * w2 - (19.0 / 3.0) * w1 * w2;
}

inline double beta_quadratic_right(double w0, double w1, double w2) {
  return (25.0 / 12.0) * w0 * w0 + (16.0 / 3.0) * w1 * w1 + (13.0 / 12.0) * w2 * w2 -
         (19.0 / 3.0) * w0 * w1 + (13.0 / 6.0) * w0 * w2 - (13.0 / 3.0) * w1 * w2;
}

// beta = sum_{l=1..3} int_0^1 (d^l P/ds^l)^2 ds for the cubics through 4 points.
// The three quadratic forms below are the expansions for substencil anchors
// a = -2 (left), -1 (centered), 0 (right); on linear data each evaluates to
// (slope)^2 exactly, so all three agree and the nonlinear weights reduce to the
// linear ones.
inline double beta_cubic_left(double w0, double w1, double w2, double w3) {
  return (61.0 / 45.0) * w0 * w0 - (553.0 / 60.0) * w0 * w1 + (103.0 / 10.0) * w0 * w2 -
         (683.0 / 180.0) * w0 * w3 + (248.0 / 15.0) * w1 * w1 -
         (2309.0 / 60.0) * w1 * w2 + (439.0 / 30.0) * w1 * w3 +
         (721.0 / 30.0) * w2 * w2 - (1193.0 / 60.0) * w2 * w3 + (407.0 / 90.0) * w3 * w3;
}

inline double beta_cubic_center(double w0, double w1, double w2, double w3) {
  return (61.0 / 45.0) * w0 * w0 - (141.0 / 20.0) * w0 * w1 + (179.0 / 30.0) * w0 * w2 -
         (293.0 / 180.0) * w0 * w3 + (331.0 / 30.0) * w1 * w1 -
         (1259.0 / 60.0) * w1 * w2 + (179.0 / 30.0) * w1 * w3 +
         (331.0 / 30.0) * w2 * w2 - (141.0 / 20.0) * w2 * w3 + (61.0 / 45.0) * w3 * w3;
}

inline double beta_cubic_right(double w0, double w1, double w2, double w3) {
  return (407.0 / 90.0) * w0 * w0 - (1193.0 / 60.0) * w0 * w1 + (439.0 / 30.0) * w0 * w2 -
         (683.0 / 180.0) * w0 * w3 + (721.0 / 30.0) * w1 * w1 -
         (2309.0 / 60.0) * w1 * w2 + (103.0 / 10.0) * w1 * w3 +
         (248.0 / 15.0) * w2 * w2 - (553.0 / 60.0) * w2 * w3 + (61.0 / 45.0) * w3 * w3;
}

}  // namespace

GwenoKernel::GwenoKernel(GwenoOrder order, double theta, const WenoParams &params)
    : order_(order), theta_(theta), eps_(params.epsilon) {
  assert(theta >= 0.0 && theta < 1.0);
  switch (order) {
    case GwenoOrder::Linear:
      clin_[0] = 1.0 - theta;
      clin_[1] = theta;
      break;
    case GwenoOrder::W23:
      // C_L + C_R = 1 for every theta; both stay positive on [0,1).
      clin_[0] = (2.0 - theta) / 3.0;
      clin_[1] = (1.0 + theta) / 3.0;
      quadratic_basis(-1, theta, basis_[0]);
      quadratic_basis(0, theta, basis_[1]);
      break;
    case GwenoOrder::W35:
      // Quintic-reproducing weights; all three are positive on [0,1).
      clin_[0] = (theta - 2.0) * (theta - 3.0) / 20.0;
      clin_[1] = -(theta + 2.0) * (theta - 3.0) / 10.0;
      clin_[2] = (theta + 2.0) * (theta + 1.0) / 20.0;
      cubic_basis(-2, theta, basis_[0]);
      cubic_basis(-1, theta, basis_[1]);
      cubic_basis(0, theta, basis_[2]);
      break;
  }
}

double GwenoKernel::operator()(const double *u) const {
  switch (order_) {
    case GwenoOrder::Linear:
      return clin_[0] * u[0] + clin_[1] * u[1];

    case GwenoOrder::W23: {
      const double pl = basis_[0][0] * u[-1] + basis_[0][1] * u[0] + basis_[0][2] * u[1];
      const double pr = basis_[1][0] * u[0] + basis_[1][1] * u[1] + basis_[1][2] * u[2];
      const double bl = beta_quadratic_left(u[-1], u[0], u[1]);
      const double br = beta_quadratic_right(u[0], u[1], u[2]);
      const double al = clin_[0] / ((eps_ + bl) * (eps_ + bl));
      const double ar = clin_[1] / ((eps_ + br) * (eps_ + br));
      return (al * pl + ar * pr) / (al + ar);
    }

    case GwenoOrder::W35: {
      const double p0 = basis_[0][0] * u[-2] + basis_[0][1] * u[-1] +
                        basis_[0][2] * u[0] + basis_[0][3] * u[1];
      const double p1 = basis_[1][0] * u[-1] + basis_[1][1] * u[0] +
                        basis_[1][2] * u[1] + basis_[1][3] * u[2];
      const double p2 = basis_[2][0] * u[0] + basis_[2][1] * u[1] +
                        basis_[2][2] * u[2] + basis_[2][3] * u[3];
      const double b0 = beta_cubic_left(u[-2], u[-1], u[0], u[1]);
      const double b1 = beta_cubic_center(u[-1], u[0], u[1], u[2]);
      const double b2 = beta_cubic_right(u[0], u[1], u[2], u[3]);
      const double a0 = clin_[0] / ((eps_ + b0) * (eps_ + b0));
      const double a1 = clin_[1] / ((eps_ + b1) * (eps_ + b1));
      const double a2 = clin_[2] / ((eps_ + b2) * (eps_ + b2));
      return (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2);
    }
  }
  return 0.0;  // unreachable
}

double gweno_interpolate(const double *u, int j, double theta, GwenoOrder order,
                         const WenoParams &params) {
  return GwenoKernel(order, theta, params)(u + j);
}

}  // namespace bgk
