//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file gweno.hpp
//  \brief non-oscillatory point-value interpolation at characteristic feet
//
// Interpolates grid data at x_j + theta*dx, theta in [0,1), by blending the candidate
// Lagrange polynomials of overlapping substencils. The linear blend weights C_k(theta)
// reproduce the full-stencil interpolant exactly; near discontinuities the nonlinear
// weights  w_k = a_k / sum(a),  a_k = C_k / (eps + beta_k)^2  suppress the crossing
// substencils. Orders: Linear (2-point), W23 (two quadratics, 4-point full stencil),
// W35 (three cubics, 6-point full stencil).
//
// The smoothness indicators are the standard Sobolev-seminorm quadratic forms
// beta = sum_l int_0^1 (d^l P/ds^l)^2 ds over the interpolation interval, expanded to
// rational coefficients (see the W35 tables in gweno.cpp).

#ifndef BGK_GWENO_HPP_
#define BGK_GWENO_HPP_

#include "bgk/grid.hpp"

namespace bgk {

enum class GwenoOrder { Linear, W23, W35 };

struct WenoParams {
  double epsilon = 1e-6;
};

// Stencil extent relative to the base index j: reads u[j - left .. j + right].
inline int gweno_left_width(GwenoOrder o) {
  return o == GwenoOrder::W35 ? 2 : (o == GwenoOrder::W23 ? 1 : 0);
}
inline int gweno_right_width(GwenoOrder o) {
  return o == GwenoOrder::W35 ? 3 : (o == GwenoOrder::W23 ? 2 : 1);
}

//----------------------------------------------------------------------------------------
//! \class GwenoKernel
//  \brief interpolation weights frozen for one offset theta
//
// On a uniform grid every cell of a velocity row shares the same theta, so the Lagrange
// basis values and linear weights are computed once per row and reused across cells.

class GwenoKernel {
 public:
  GwenoKernel(GwenoOrder order, double theta, const WenoParams &params);

  // Evaluate at u[0] + theta*dx, with u pointing at the base element; the caller
  // guarantees u[-left..right] are addressable.
  double operator()(const double *u) const;

  GwenoOrder order() const { return order_; }
  double theta() const { return theta_; }

 private:
  GwenoOrder order_;
  double theta_;
  double eps_;
  double clin_[3];      // linear weights C_k(theta)
  double basis_[3][4];  // Lagrange basis values of each substencil at theta
};

// One-off convenience wrapper: interpolate at u[j] + theta*dx on a padded sequence.
double gweno_interpolate(const double *u, int j, double theta, GwenoOrder order,
                         const WenoParams &params = WenoParams{});

}  // namespace bgk

#endif  // BGK_GWENO_HPP_
