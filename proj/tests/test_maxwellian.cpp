//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file test_maxwellian.cpp
//  \brief continuous and discrete Maxwellian construction and the Newton solve

#include <array>
#include <cmath>
#include <vector>

#include "bgk/grid.hpp"
#include "bgk/maxwellian.hpp"
#include "bgk/moments.hpp"

#include "doctest.h"

using namespace bgk;

namespace {

std::array<double, 3> row_moments(const std::vector<double> &row, const PhaseGrid &g) {
  return moments_of_row(row.data(), g);
}

}  // namespace

TEST_CASE("continuous Maxwellian is the exponential family at its log parameters") {
  PhaseGrid g(0.0, 1.0, 1, -8.0, 8.0, 32, Bc::Periodic);
  std::vector<double> direct(g.num_vnodes()), via_params(g.num_vnodes());
  const double rho = 0.7, u = -0.4, temp = 1.3;
  continuous_maxwellian(rho, u, temp, g, direct.data());
  exp_family_row(continuous_log_params(rho, u, temp), g, via_params.data());
  for (int j = 0; j < g.num_vnodes(); ++j)
    CHECK(direct[j] == doctest::Approx(via_params[j]).epsilon(1e-14));
}

TEST_CASE("nonpositive density or temperature is rejected") {
  PhaseGrid g(0.0, 1.0, 1, -8.0, 8.0, 16, Bc::Periodic);
  std::vector<double> row(g.num_vnodes());
  CHECK_THROWS_AS(continuous_maxwellian(0.0, 0.0, 1.0, g, row.data()),
                  NonpositiveStateError);
  CHECK_THROWS_AS(continuous_maxwellian(1.0, 0.0, -0.5, g, row.data()),
                  NonpositiveStateError);
  // The same guards protect the Newton entry point; a target whose kinetic
  // temperature 2E/rho - u^2 is nonpositive cannot seed the iteration.
  CHECK_THROWS_AS(discrete_maxwellian({1.0, 0.0, 0.0}, g, NewtonConfig{}, row.data()),
                  NonpositiveStateError);
  CHECK_THROWS_AS(discrete_maxwellian({-1.0, 0.0, 0.5}, g, NewtonConfig{}, row.data()),
                  NonpositiveStateError);
}

TEST_CASE("analytic Jacobian matches central finite differences") {
  PhaseGrid g(0.0, 1.0, 1, -7.0, 7.0, 24, Bc::Periodic);
  const std::array<double, 3> a = continuous_log_params(1.2, 0.3, 0.9);
  const std::array<std::array<double, 3>, 3> jac = newton_jacobian(a, g);
  const double h = 1e-7;
  std::vector<double> row(g.num_vnodes());
  for (int k = 0; k < 3; ++k) {
    std::array<double, 3> ap = a, am = a;
    ap[k] += h;
    am[k] -= h;
    exp_family_row(ap, g, row.data());
    const std::array<double, 3> mp = row_moments(row, g);
    exp_family_row(am, g, row.data());
    const std::array<double, 3> mm = row_moments(row, g);
    for (int l = 0; l < 3; ++l) {
      const double fd = (mp[l] - mm[l]) / (2.0 * h);
      const double scale = std::max(1.0, std::fabs(jac[l][k]));
      CHECK(std::fabs(jac[l][k] - fd) / scale <= 1e-6);
    }
  }
}

TEST_CASE("Newton matches moments to 1e-14 in a few iterations") {
  PhaseGrid g(0.0, 1.0, 1, -20.0, 20.0, 30, Bc::Periodic);
  // States spanning the shock problem: upstream, downstream, and a cold cell.
  const std::array<double, 3> states[] = {
      {1.0, 0.0, 0.5}, {1.6, 1.6 * 1.3, 0.5 * 1.6 * 3.44 + 0.5 * 1.6 * 1.69},
      {0.4, -0.1, 0.5 * 0.4 * 0.5 + 0.5 * 0.025}};
  std::vector<double> row(g.num_vnodes());
  for (const std::array<double, 3> &target : states) {
    int iters = 0;
    discrete_maxwellian(target, g, NewtonConfig{}, row.data(), &iters);
    CHECK(iters <= 15);
    const std::array<double, 3> m = row_moments(row, g);
    for (int l = 0; l < 3; ++l) CHECK(std::fabs(m[l] - target[l]) < 1e-14);
    for (int j = 0; j < g.num_vnodes(); ++j) CHECK(row[j] >= 0.0);
  }
}

TEST_CASE("a heavily truncated hot state still converges") {
  // T = 100 on [-10, 10] keeps barely a third of the Gaussian mass inside the
  // grid, so the discrete moments sit far from the continuous seed. The target
  // is taken from an actual sampled row, hence realizable by construction.
  PhaseGrid g(0.0, 1.0, 1, -10.0, 10.0, 40, Bc::Periodic);
  std::vector<double> sample(g.num_vnodes()), row(g.num_vnodes());
  continuous_maxwellian(1.0, 0.0, 100.0, g, sample.data());
  const std::array<double, 3> target = row_moments(sample, g);
  int iters = 0;
  discrete_maxwellian(target, g, NewtonConfig{}, row.data(), &iters);
  const std::array<double, 3> m = row_moments(row, g);
  for (int l = 0; l < 3; ++l) CHECK(std::fabs(m[l] - target[l]) < 1e-13);
}

TEST_CASE("an unreachable target diverges with a diagnosable error") {
  // E = 500 exceeds the largest energy any distribution on [-10, 10] with unit
  // mass can carry (v^2/2 <= 50), so no exponential fit exists.
  PhaseGrid g(0.0, 1.0, 1, -10.0, 10.0, 40, Bc::Periodic);
  std::vector<double> row(g.num_vnodes());
  CHECK_THROWS_AS(discrete_maxwellian({1.0, 0.0, 500.0}, g, NewtonConfig{}, row.data()),
                  NewtonDivergedError);
}

TEST_CASE("collision Maxwellian modes agree on a resolved equilibrium") {
  PhaseGrid g(0.0, 1.0, 1, -12.0, 12.0, 48, Bc::Periodic);
  std::vector<double> sample(g.num_vnodes());
  continuous_maxwellian(1.1, 0.2, 0.9, g, sample.data());
  const std::array<double, 3> target = row_moments(sample, g);

  std::vector<double> via_discrete(g.num_vnodes()), via_continuous(g.num_vnodes());
  collision_maxwellian(target, g, MaxwellianMode::Discrete, NewtonConfig{},
                       via_discrete.data(), "unit test");
  collision_maxwellian(target, g, MaxwellianMode::Continuous, NewtonConfig{},
                       via_continuous.data(), "unit test");
  // Discrete mode must hit the target moments exactly; on this well-resolved
  // grid the continuous sample differs only by quadrature noise.
  const std::array<double, 3> md = row_moments(via_discrete, g);
  for (int l = 0; l < 3; ++l) CHECK(std::fabs(md[l] - target[l]) < 1e-14);
  for (int j = 0; j < g.num_vnodes(); ++j)
    CHECK(via_discrete[j] == doctest::Approx(via_continuous[j]).epsilon(1e-11));
}

TEST_CASE("newton statistics record and merge") {
  NewtonStats a, b;
  a.record(3);
  a.record(7);
  b.record(5);
  b.merge(a);
  CHECK(b.solves == 3);
  CHECK(b.total_iterations == 15);
  CHECK(b.max_iterations == 7);
}
