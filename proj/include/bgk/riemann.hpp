//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
#ifndef BGK_RIEMANN_HPP_
#define BGK_RIEMANN_HPP_
//! \file riemann.hpp
//  \brief exact Riemann solver for the gamma-law Euler equations
//
// Reference curves for the shock test come from the classical two-wave exact
// solution (see Toro, Riemann Solvers and Numerical Methods for Fluid
// Dynamics, ch. 4): Newton iteration on the star-region pressure function
// with shock (Rankine-Hugoniot) and rarefaction (isentrope) branches, then
// self-similar sampling in xi = x/t.

namespace bgk {

//! \struct EulerState
//  \brief primitive gamma-law gas state (density, velocity, pressure)
struct EulerState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;

  double sound_speed(double gamma) const;
  void validate(const char *where) const;  // rho > 0 and p > 0, else NonpositiveState
};

//! \struct RiemannWaves
//  \brief star state and wave speeds of the two-wave solution
//
// For a shock the head and tail speeds coincide; for a rarefaction they
// bracket the fan. The contact moves at ustar.
struct RiemannWaves {
  double pstar = 0.0;
  double ustar = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  bool left_shock = false;
  bool right_shock = false;
  double left_head = 0.0;
  double left_tail = 0.0;
  double right_head = 0.0;
  double right_tail = 0.0;
};

// Star pressure by Newton from the two-rarefaction guess, falling back to
// bisection when Newton stalls; 1e-14 relative tolerance. Throws VacuumFormed
// when the states separate faster than the escape velocity.
double star_pressure(const EulerState &left, const EulerState &right, double gamma);

// Star pressure by plain bisection on the same pressure function; slower but
// assumption-free, kept as an independent cross-check of star_pressure.
double star_pressure_bisection(const EulerState &left, const EulerState &right,
                               double gamma, double tol);

// Full wave fan of the exact solution.
RiemannWaves riemann_waves(const EulerState &left, const EulerState &right, double gamma);

// Sample the self-similar exact solution at xi = x/t.
EulerState exact_euler_riemann(const EulerState &left, const EulerState &right,
                               double gamma, double xi);

// Upstream state of a Mach-M shock travelling into `right`; the Riemann
// problem (image, right) then consists of that single shock, moving at
// M * sound_speed(right).
EulerState rankine_hugoniot_image(const EulerState &right, double mach, double gamma);

}  // namespace bgk

#endif  // BGK_RIEMANN_HPP_
