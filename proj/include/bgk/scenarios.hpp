//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
#ifndef BGK_SCENARIOS_HPP_
#define BGK_SCENARIOS_HPP_
//! \file scenarios.hpp
//  \brief the four benchmark problems: parameter sets and initial data
//
// Each scenario carries its canonical domain, boundary condition, final time,
// Knudsen number and baseline resolution; run configs start from these and
// override individual fields. Initial data is Maxwellian in v except for the
// relaxation test, which starts from a symmetric two-stream mixture.

#include <string>

#include "bgk/grid.hpp"
#include "bgk/riemann.hpp"

namespace bgk {

// Monoatomic gas in one degree of freedom: p = rho T, E = rho T / 2 + rho u^2 / 2,
// giving polytropic exponent (d + 2)/d = 3 in the fluid limit.
constexpr double kGasGamma = 3.0;

enum class ScenarioId { SingleShock, SmoothAccuracy, APRelaxation, Riemann };

//! \struct Scenario
//  \brief canonical parameter set of one benchmark
struct Scenario {
  ScenarioId id = ScenarioId::SingleShock;
  double x_min = 0.0, x_max = 1.0;
  double v_min = -10.0, v_max = 10.0;
  Bc bc = Bc::FreeFlow;
  double t_final = 0.0;
  double kappa = 1e-6;
  int nx = 100, nv = 30;  // baseline resolution
  double cfl = 2.0;       // baseline CFL
  double mach = 0.0;      // single-shock only

  PhaseGrid make_grid() const { return make_grid(nx, nv); }
  PhaseGrid make_grid(int nx_, int nv_) const {
    return PhaseGrid(x_min, x_max, nx_, v_min, v_max, nv_, bc);
  }
};

Scenario scenario_defaults(ScenarioId id);
const char *scenario_name(ScenarioId id);
ScenarioId scenario_from_name(const std::string &name);  // throws ConfigError

// Maxwellian initial field of a Mach-`mach` shock: the upstream image state
// left of x = 0.5, the reference state (1, 0, 1) right of it.
Distribution init_single_shock(const PhaseGrid &g, double mach, double gamma);

// rho = 1, T = 1, u(x) = 0.1 exp(-(10x-1)^2) - 2 exp(-(10x+3)^2), periodic.
Distribution init_smooth(const PhaseGrid &g);

// Non-equilibrium mixture (M(rho0,u0,T0) + M(rho0,-u0,T0))/2 with
// rho0 = (2 + sin 2 pi x)/3, u0 = cos(2 pi x)/5, T0 = (3 + cos 2 pi x)/4.
Distribution init_ap(const PhaseGrid &g);

// Maxwellian field of the Riemann data (2.25, 0, 1.125) | (3/7, 0, 1/6).
Distribution init_riemann(const PhaseGrid &g);

// Initial data for the scenario's id on the supplied grid.
Distribution scenario_initial(const Scenario &sc, const PhaseGrid &g);

// Euler endpoint states of the shock-capturing test, for reference curves.
EulerState riemann_left_state();
EulerState riemann_right_state();

}  // namespace bgk

#endif  // BGK_SCENARIOS_HPP_
