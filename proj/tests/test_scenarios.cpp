//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file test_scenarios.cpp
//  \brief benchmark scenario defaults and their kinetic initial data

#include <cmath>
#include <string>

#include "bgk/moments.hpp"
#include "bgk/riemann.hpp"
#include "bgk/scenarios.hpp"

#include "doctest.h"

using namespace bgk;

TEST_CASE("scenario defaults pin the benchmark configurations") {
  const Scenario shock = scenario_defaults(ScenarioId::SingleShock);
  CHECK(shock.x_min == 0.0);
  CHECK(shock.x_max == 5.0);
  CHECK(shock.v_min == -20.0);
  CHECK(shock.v_max == 20.0);
  CHECK(shock.bc == Bc::FreeFlow);
  CHECK(shock.t_final == 0.4);
  CHECK(shock.kappa == 1e-6);
  CHECK(shock.nx == 100);
  CHECK(shock.nv == 30);
  CHECK(shock.cfl == 2.0);
  CHECK(shock.mach == 2.0);

  const Scenario smooth = scenario_defaults(ScenarioId::SmoothAccuracy);
  CHECK(smooth.x_min == -1.0);
  CHECK(smooth.x_max == 1.0);
  CHECK(smooth.v_min == -10.0);
  CHECK(smooth.v_max == 10.0);
  CHECK(smooth.bc == Bc::Periodic);
  CHECK(smooth.t_final == 0.32);
  CHECK(smooth.nx == 160);
  CHECK(smooth.nv == 20);

  const Scenario ap = scenario_defaults(ScenarioId::APRelaxation);
  CHECK(ap.x_min == -1.0);
  CHECK(ap.x_max == 1.0);
  CHECK(ap.v_min == -8.0);
  CHECK(ap.v_max == 8.0);
  CHECK(ap.bc == Bc::Periodic);
  CHECK(ap.t_final == 0.02);
  CHECK(ap.kappa == 1e-4);
  CHECK(ap.cfl == 1.0);
  CHECK(ap.nx == 100);
  CHECK(ap.nv == 20);

  const Scenario rie = scenario_defaults(ScenarioId::Riemann);
  CHECK(rie.x_min == 0.0);
  CHECK(rie.x_max == 1.0);
  CHECK(rie.bc == Bc::FreeFlow);
  CHECK(rie.t_final == 0.16);
  CHECK(rie.nx == 200);
  CHECK(rie.nv == 30);
  CHECK(rie.cfl == 2.0);
}

TEST_CASE("scenario names and aliases resolve") {
  CHECK(scenario_from_name("single-shock") == ScenarioId::SingleShock);
  CHECK(scenario_from_name("smooth") == ScenarioId::SmoothAccuracy);
  CHECK(scenario_from_name("ap-relaxation") == ScenarioId::APRelaxation);
  CHECK(scenario_from_name("riemann") == ScenarioId::Riemann);
  CHECK(scenario_from_name("test1") == ScenarioId::SingleShock);
  CHECK(scenario_from_name("test2") == ScenarioId::SmoothAccuracy);
  CHECK(scenario_from_name("test3") == ScenarioId::APRelaxation);
  CHECK(scenario_from_name("test4") == ScenarioId::Riemann);
  CHECK_THROWS_AS(scenario_from_name("sod"), ConfigError);
  CHECK(std::string(scenario_name(ScenarioId::APRelaxation)) == "ap-relaxation");
  for (ScenarioId id : {ScenarioId::SingleShock, ScenarioId::SmoothAccuracy,
                        ScenarioId::APRelaxation, ScenarioId::Riemann})
    CHECK(scenario_from_name(scenario_name(id)) == id);
}

TEST_CASE("shock scenario starts from the jump-condition image of the right state") {
  Scenario sc = scenario_defaults(ScenarioId::SingleShock);
  sc.nv = 120;  // resolve the quadrature so moments identify the states
  PhaseGrid g = sc.make_grid();
  const Distribution f = scenario_initial(sc, g);
  const MomentField m = compute_moments(f, g);
  const EulerState left = rankine_hugoniot_image(EulerState{1.0, 0.0, 1.0}, sc.mach,
                                                 kGasGamma);
  // Upstream of x = 0.5 sits the image state, downstream the unit state.
  const int il = 0, ir = g.nx - 1;
  CHECK(m.rho[il] == doctest::Approx(left.rho).epsilon(1e-10));
  CHECK(m.u(il) == doctest::Approx(left.u).epsilon(1e-10));
  CHECK(m.pressure(il) == doctest::Approx(left.p).epsilon(1e-9));
  CHECK(m.rho[ir] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(m.u(ir) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  CHECK(m.pressure(ir) == doctest::Approx(1.0).epsilon(1e-9));
  // The interface sits at x = 0.5, one tenth into the domain.
  bool found_jump = false;
  for (int i = 1; i < g.nx; ++i) {
    if (std::fabs(m.rho[i] - m.rho[i - 1]) > 0.1) {
      CHECK(g.x_center(i - 1) < 0.5);
      CHECK(g.x_center(i) > 0.5);
      found_jump = true;
    }
  }
  CHECK(found_jump);
}

TEST_CASE("smooth scenario carries two weak counter-propagating pulses") {
  Scenario sc = scenario_defaults(ScenarioId::SmoothAccuracy);
  sc.nv = 80;
  PhaseGrid g = sc.make_grid();
  const Distribution f = scenario_initial(sc, g);
  const MomentField m = compute_moments(f, g);
  auto u0 = [](double x) {
    return 0.1 * (std::exp(-(10.0 * x - 1.0) * (10.0 * x - 1.0)) -
                  2.0 * std::exp(-(10.0 * x + 3.0) * (10.0 * x + 3.0)));
  };
  for (int i = 0; i < g.nx; i += 7) {
    const double x = g.x_center(i);
    CHECK(m.rho[i] == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(m.u(i) == doctest::Approx(u0(x)).scale(1.0).epsilon(1e-10));
    CHECK(m.temperature(i) == doctest::Approx(1.0).epsilon(1e-10));
  }
  // The deeper pulse bottoms out near -0.2; a unit-amplitude trough would
  // steepen into a shock long before the benchmark's final time.
  double umin = 0.0;
  for (int i = 0; i < g.nx; ++i) umin = std::min(umin, m.u(i));
  CHECK(umin >= -0.21);
  CHECK(umin <= -0.19);
}

TEST_CASE("relaxation scenario is a zero-momentum two-stream mixture") {
  Scenario sc = scenario_defaults(ScenarioId::APRelaxation);
  sc.nv = 96;
  PhaseGrid g = sc.make_grid();
  const Distribution f = scenario_initial(sc, g);
  const MomentField m = compute_moments(f, g);
  for (int i = 0; i < g.nx; i += 11) {
    const double x = g.x_center(i);
    const double rho0 = (2.0 + std::sin(2.0 * M_PI * x)) / 3.0;
    const double u0 = 0.2 * std::cos(2.0 * M_PI * x);
    const double t0 = (3.0 + std::cos(2.0 * M_PI * x)) / 4.0;
    CHECK(m.rho[i] == doctest::Approx(rho0).epsilon(1e-10));
    // Streams at +-u0 cancel in the mean; the energy holds both contributions.
    CHECK(std::fabs(m.mom[i]) <= 1e-12);
    CHECK(m.energy[i] ==
          doctest::Approx(0.5 * rho0 * t0 + 0.5 * rho0 * u0 * u0).epsilon(1e-10));
  }
  // The mixture is wider than either stream: its kinetic temperature exceeds
  // the per-stream value by u0^2 wherever the streams move.
  const int i0 = 0;  // x = x_min + dx/2, near the cos peak
  const double x0 = g.x_center(i0);
  const double t_stream = (3.0 + std::cos(2.0 * M_PI * x0)) / 4.0;
  const double u0 = 0.2 * std::cos(2.0 * M_PI * x0);
  CHECK(m.temperature(i0) ==
        doctest::Approx(t_stream + u0 * u0).epsilon(1e-9));
}

TEST_CASE("riemann scenario matches its published left and right states") {
  const EulerState L = riemann_left_state();
  const EulerState R = riemann_right_state();
  CHECK(L.rho == 2.25);
  CHECK(L.u == 0.0);
  CHECK(L.p == 1.125);
  CHECK(R.rho == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
  CHECK(R.u == 0.0);
  CHECK(R.p == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  Scenario sc = scenario_defaults(ScenarioId::Riemann);
  sc.nv = 120;
  PhaseGrid g = sc.make_grid();
  const MomentField m = compute_moments(scenario_initial(sc, g), g);
  CHECK(m.rho[0] == doctest::Approx(L.rho).epsilon(1e-10));
  CHECK(m.pressure(0) == doctest::Approx(L.p).epsilon(1e-9));
  CHECK(m.rho[g.nx - 1] == doctest::Approx(R.rho).epsilon(1e-10));
  CHECK(m.pressure(g.nx - 1) == doctest::Approx(R.p).epsilon(1e-9));
}
