//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
#ifndef BGK_STABILITY_HPP_
#define BGK_STABILITY_HPP_
//! \file stability.hpp
//  \brief von Neumann analysis of the conservative schemes on u_t + u_x = 0
//
// With exact (spectral) interpolation the conservative update of a single
// Fourier mode multiplies it by
//   rho(xi) = 1 - i xi a sum_l b_l exp(-i c_l a xi),    y := a xi,
// and |rho|^2 - 1 = -2y F_s(y) with F_s(y) = S_s(y) - (y/2)(C_s^2 + S_s^2),
// C_s(y) = sum b_l cos(c_l y), S_s(y) = sum b_l sin(c_l y). The scheme is
// stable for CFL numbers a up to a* = y*/pi where y* is the first positive
// zero of F_s. The BDF variants instead lead to a degree-s characteristic
// polynomial per mode whose roots we take from the companion matrix.

#include <complex>
#include <utility>
#include <vector>

#include "bgk/tableau.hpp"

namespace bgk {

//! \struct StabilityScan
//  \brief resolution knobs for the CFL and wavenumber sweeps
struct StabilityScan {
  int xi_samples = 2001;  // odd sample count across xi in [-pi, pi], so 0 and pi land on grid
  double a_step = 1e-3;   // CFL (and gamma) scan increment
  double a_max = 4.0;     // CFL scan ceiling; F_s is examined on (0, pi*a_max]

  void validate() const;  // throws ConfigError on violated invariants
};

// Amplification factor rho(xi) of the conservative Runge-Kutta scheme at CFL
// number a. rho(0) = 1 and rho = R(-i a xi) for R below.
std::complex<double> rk_amp(const std::vector<double> &b, const std::vector<double> &c,
                            double a, double xi);

// Stability function R(z) = 1 + z sum_l b_l exp(c_l z) of the semi-Lagrangian
// update (the exponentials replace the usual rational stage resolvents).
std::complex<double> stab_r(const std::vector<double> &b, const std::vector<double> &c,
                            std::complex<double> z);

// F_s(y) = S_s(y) - (y/2)(C_s(y)^2 + S_s(y)^2); nonnegative on (0, y*] exactly
// where |rho| <= 1.
double fs_function(const std::vector<double> &b, const std::vector<double> &c, double y);

// First positive zero y* of F_s located by a coarse sweep plus bisection to
// 1e-9. Returns 0 when F_s is already negative at the start of the sweep
// (unconditionally unstable weights) and pi*a_max when no sign change occurs.
double rk_first_zero(const std::vector<double> &b, const std::vector<double> &c,
                     const StabilityScan &scan);

// Maximal stable CFL number a* = y*/pi.
double rk_max_cfl(const std::vector<double> &b, const std::vector<double> &c,
                  const StabilityScan &scan);

// Largest root modulus of the BDF characteristic polynomial
//   z^s - sum_k a_k (1 - i beta y e^{-i k y}) z^{s-k},   y = a xi,
// from the eigenvalues of its companion matrix.
double bdf_max_root(const BdfCoeffs &coeffs, double a, double xi);

// Worst root modulus over the xi grid of `scan` (half range [0, pi]; moduli
/// are even in xi). The endpoint xi = pi is always sampled: the instability of
// the third-order formula peaks there and a grid missing it can look stable.
double bdf_worst_root(const BdfCoeffs &coeffs, double a, const StabilityScan &scan);

// Largest a on the scan grid such that every smaller grid value keeps all
// roots inside the closed unit disk (up to 1e-9 slack for the principal root).
double bdf_max_cfl(const BdfCoeffs &coeffs, const StabilityScan &scan);

// (a, worst root modulus) pairs across the CFL scan grid, for CSV emission.
std::vector<std::pair<double, double>> bdf_cfl_table(const BdfCoeffs &coeffs,
                                                     const StabilityScan &scan);

//! \struct IStability
//  \brief A-stability report for a three-stage stiffly accurate tableau
//
// The E-polynomial of the scheme's rational stability function has leading
// nontrivial coefficient E4 = 8 q1 - 12 q2 - 3 where q1 and q2 are the first
// two elementary symmetric functions of the diagonal; E4 >= 0 together with
// the branch condition c1 <= 1/3, c2 >= 1 (the other branch forces b3 < 0)
// makes the member A-stable.
struct IStability {
  double e4 = 0.0;
  bool region_ok = false;
  bool a_stable = false;
};

IStability istability_check(const Tableau &tab);

//! \struct GammaScanPoint
//  \brief one gamma sample of the third-order family with its stability bound
struct GammaScanPoint {
  double gamma = 0.0;
  double ystar = 0.0;
};

//! \struct GammaOpt
//  \brief argmax of y*(gamma) over a scan of the third-order family
struct GammaOpt {
  double gamma = 0.0;
  double ystar = 0.0;
  std::vector<GammaScanPoint> table;  // full scan, for CSV emission
};

// Scan gamma over (lo, hi) in steps of scan.a_step, keeping only A-stable
// members, and return the one maximizing y*. The interesting interval is
// ]1 - sqrt(2)/2, 1/3[ whose left endpoint is a pole of the coefficients, so
// lo must sit strictly inside.
GammaOpt optimize_gamma(double lo, double hi, const StabilityScan &scan);

}  // namespace bgk

#endif  // BGK_STABILITY_HPP_
