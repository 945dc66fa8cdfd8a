//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file test_diagnostics.cpp
//  \brief grid restriction, drift reports, equilibrium distance, convergence tables

#include <array>
#include <cmath>
#include <vector>

#include "bgk/diagnostics.hpp"
#include "bgk/errors.hpp"
#include "bgk/grid.hpp"
#include "bgk/maxwellian.hpp"
#include "bgk/moments.hpp"

#include "doctest.h"

using namespace bgk;

namespace {

// Cell-centered samples of a polynomial on [0, 1) with n cells.
std::vector<double> sampled(int n, double (*fn)(double)) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = fn((i + 0.5) / n);
  return out;
}

double quintic(double x) {
  // Degree five, all coefficients active: the highest degree the six-point
  // restriction stencil reproduces exactly.
  return 1.0 + x * (-2.0 + x * (3.0 + x * (-1.0 + x * (0.5 + x * 2.0))));
}

double wave(double x) { return std::sin(2.0 * M_PI * x); }

}  // namespace

TEST_CASE("coarse restriction is exact on quintics away from clamped edges") {
  const int nc = 16;
  const std::vector<double> fine = sampled(2 * nc, quintic);
  const std::vector<double> coarse = restrict_to_coarse(fine, Bc::FreeFlow);
  REQUIRE(static_cast<int>(coarse.size()) == nc);
  // The first and last coarse cells clamp their stencils; skip them.
  for (int i = 1; i < nc - 1; ++i) {
    CHECK(coarse[i] == doctest::Approx(quintic((i + 0.5) / nc)).epsilon(1e-13));
  }
}

TEST_CASE("coarse restriction wraps periodically at sixth order") {
  const int nc = 32;
  const std::vector<double> fine = sampled(2 * nc, wave);
  const std::vector<double> coarse = restrict_to_coarse(fine, Bc::Periodic);
  double worst = 0.0;
  for (int i = 0; i < nc; ++i)
    worst = std::max(worst, std::fabs(coarse[i] - wave((i + 0.5) / nc)));
  CHECK(worst < 1e-6);  // (2 pi h)^6-sized interpolation defect, edges included
  CHECK_THROWS_AS(restrict_to_coarse(std::vector<double>(7, 0.0), Bc::Periodic),
                  ConfigError);
}

TEST_CASE("density convergence recovers a synthetic second-order family") {
  // Level k carries a contrived defect C 4^{-k} cos(2 pi x); consecutive
  // restricted differences then shrink by 4, i.e. rate 2, up to the
  // restriction's own much smaller error.
  const std::vector<int> nx_list = {32, 64, 128};
  std::vector<std::vector<double>> rho;
  for (std::size_t k = 0; k < nx_list.size(); ++k) {
    const int n = nx_list[k];
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) / n;
      r[i] = 2.0 + std::sin(2.0 * M_PI * x) +
             1e-2 * std::pow(4.0, -static_cast<double>(k)) * std::cos(2.0 * M_PI * x);
    }
    rho.push_back(std::move(r));
  }
  const ConvergenceTable table = density_convergence(nx_list, rho, Bc::Periodic);
  REQUIRE(table.error.size() == 2);
  CHECK(table.nx_coarse[0] == 32);
  CHECK(table.nx_fine[0] == 64);
  CHECK(table.nx_coarse[1] == 64);
  CHECK(table.nx_fine[1] == 128);
  CHECK(std::isnan(table.rate[0]));
  CHECK(table.error[0] > 0.0);
  CHECK(table.rate[1] == doctest::Approx(2.0).epsilon(0.02));

  SUBCASE("resolution lists must double and match the profiles") {
    CHECK_THROWS_AS(density_convergence({32}, {rho[0]}, Bc::Periodic), ConfigError);
    CHECK_THROWS_AS(density_convergence({32, 48}, {rho[0], rho[0]}, Bc::Periodic),
                    ConfigError);
    CHECK_THROWS_AS(density_convergence({32, 64}, {rho[0]}, Bc::Periodic), ConfigError);
    CHECK_THROWS_AS(density_convergence({32, 64}, {rho[0], rho[0]}, Bc::Periodic),
                    ConfigError);
  }
}

TEST_CASE("drift reports are relative unless the initial total vanishes") {
  const std::array<double, 3> initial = {2.0, 0.0, 3.0};
  const std::array<double, 3> final_totals = {2.0 + 4e-14, 5e-15, 3.0 - 6e-14};
  const DriftReport report = conservation_error(initial, final_totals);
  CHECK(report.drift[0] == doctest::Approx(2e-14).epsilon(1e-10));
  CHECK_FALSE(report.absolute[0]);
  // Momentum starts at zero: relative drift is meaningless, absolute is kept.
  CHECK(report.drift[1] == doctest::Approx(5e-15).epsilon(1e-10));
  CHECK(report.absolute[1]);
  CHECK(report.drift[2] == doctest::Approx(2e-14).epsilon(1e-10));
  CHECK_FALSE(report.absolute[2]);
}

TEST_CASE("equilibrium distance vanishes on Maxwellian data and sees defects") {
  PhaseGrid g(0.0, 1.0, 12, -8.0, 8.0, 32, Bc::Periodic);
  const NewtonConfig newton;
  Distribution f(g);
  for (int i = 0; i < g.nx; ++i) {
    const std::array<double, 3> target = {1.0 + 0.05 * i, 0.02 * i,
                                          0.6 + 0.4 * (i % 3) + 0.02 * i * i};
    discrete_maxwellian(target, g, newton, f.row(i));
  }
  const double d0 = distance_to_equilibrium(f, g, MaxwellianMode::Discrete, newton);
  CHECK(d0 < 1e-13);

  // An alternating-sign perturbation is nearly moment-free, so the matched
  // Maxwellian barely moves and the defect shows up at full strength.
  const double eps = 1e-3;
  Distribution fp = f;
  for (int i = 0; i < g.nx; ++i) {
    double *row = fp.row(i);
    for (int j = 0; j < g.num_vnodes(); ++j) row[j] += (j % 2 == 0 ? eps : -eps);
  }
  const double d1 = distance_to_equilibrium(fp, g, MaxwellianMode::Discrete, newton);
  // L1 mass of the perturbation is eps * (v extent) * (x extent) = 16 eps.
  CHECK(d1 > 0.5 * 16.0 * eps);
  CHECK(d1 < 2.0 * 16.0 * eps);
}

TEST_CASE("scenario convergence tables wire runs, restriction and rates together") {
  SchemeSpec spec = SchemeSpec::parse("RK2-W23-DM");
  const std::vector<int> nx_list = {16, 32, 64};
  const ConvergenceTable table = convergence_table(
      spec, ScenarioId::SmoothAccuracy, nx_list, 8, 2.0, 1.0, NewtonConfig{}, WenoParams{});
  REQUIRE(table.error.size() == 2);
  CHECK(table.nx_coarse[0] == 16);
  CHECK(table.nx_fine[1] == 64);
  CHECK(std::isnan(table.rate[0]));
  CHECK(table.error[0] > table.error[1]);  // refinement reduces the difference
  CHECK(std::isfinite(table.rate[1]));
  CHECK_THROWS_AS(convergence_table(spec, ScenarioId::SmoothAccuracy, {16}, 8, 2.0, 1.0,
                                    NewtonConfig{}, WenoParams{}),
                  ConfigError);
}
