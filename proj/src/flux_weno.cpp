//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file flux_weno.cpp
//  \brief WENO3/WENO5 upwind-biased face reconstruction

#include "bgk/flux_weno.hpp"

#include <stdexcept>

namespace bgk {

namespace {

// 5th-order left-biased value at the face right of the "c" sample, from samples
// (a, b, c, d, e) = (F_{i-2}, ..., F_{i+2}).
inline double weno5_face(double a, double b, double c, double d, double e, double eps) {
  const double q0 = (2.0 * a - 7.0 * b + 11.0 * c) / 6.0;
  const double q1 = (-b + 5.0 * c + 2.0 * d) / 6.0;
  const double q2 = (2.0 * c + 5.0 * d - e) / 6.0;

  const double b0 = (13.0 / 12.0) * (a - 2.0 * b + c) * (a - 2.0 * b + c) +
                    0.25 * (a - 4.0 * b + 3.0 * c) * (a - 4.0 * b + 3.0 * c);
  const double b1 = (13.0 / 12.0) * (b - 2.0 * c + d) * (b - 2.0 * c + d) +
                    0.25 * (b - d) * (b - d);
  const double b2 = (13.0 / 12.0) * (c - 2.0 * d + e) * (c - 2.0 * d + e) +
                    0.25 * (3.0 * c - 4.0 * d + e) * (3.0 * c - 4.0 * d + e);

  const double a0 = 0.1 / ((eps + b0) * (eps + b0));
  const double a1 = 0.6 / ((eps + b1) * (eps + b1));
  const double a2 = 0.3 / ((eps + b2) * (eps + b2));
  return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

// 3rd-order counterpart from (b, c, d) = (F_{i-1}, F_i, F_{i+1}).
inline double weno3_face(double b, double c, double d, double eps) {
  const double q0 = (-b + 3.0 * c) / 2.0;
  const double q1 = (c + d) / 2.0;
  const double b0 = (c - b) * (c - b);
  const double b1 = (d - c) * (d - c);
  const double a0 = (1.0 / 3.0) / ((eps + b0) * (eps + b0));
  const double a1 = (2.0 / 3.0) / ((eps + b1) * (eps + b1));
  return (a0 * q0 + a1 * q1) / (a0 + a1);
}

inline int wrap_index(int t, int nx) {
  t %= nx;
  return t < 0 ? t + nx : t;
}

inline int clamp_index(int t, int nx) { return t < 0 ? 0 : (t >= nx ? nx - 1 : t); }

}  // namespace

void weno_flux_faces(const std::vector<double> &fp, const std::vector<double> &fm, Bc bc,
                     FluxOrder order, const WenoParams &params, std::vector<double> &out) {
  const int nx = static_cast<int>(fp.size());
  const int halo = 3;
  if (order == FluxOrder::Fifth && nx < 5)
    throw std::invalid_argument("5th-order face reconstruction needs at least 5 cells");

  // Padded copies; ghost values by periodic wrap or constant extrapolation.
  std::vector<double> p(nx + 2 * halo), m(nx + 2 * halo);
  for (int t = -halo; t < nx + halo; ++t) {
    const int s = (bc == Bc::Periodic) ? wrap_index(t, nx) : clamp_index(t, nx);
    p[t + halo] = fp[s];
    m[t + halo] = fm[s];
  }

  out.assign(nx + 1, 0.0);
  const double eps = params.epsilon;
  for (int k = 0; k <= nx; ++k) {
    // Face k has cell k-1 on its left and cell k on its right (padded index k+halo-1
    // and k+halo).
    const int c = k + halo - 1;
    switch (order) {
      case FluxOrder::First:
        out[k] = p[c] + m[c + 1];
        break;
      case FluxOrder::Third:
        out[k] = weno3_face(p[c - 1], p[c], p[c + 1], eps) +
                 weno3_face(m[c + 2], m[c + 1], m[c], eps);
        break;
      case FluxOrder::Fifth:
        out[k] = weno5_face(p[c - 2], p[c - 1], p[c], p[c + 1], p[c + 2], eps) +
                 weno5_face(m[c + 3], m[c + 2], m[c + 1], m[c], m[c - 1], eps);
        break;
    }
  }
}

}  // namespace bgk
