//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file test_stability.cpp
//  \brief von Neumann analysis of the one-step and multistep schemes

#include <cmath>
#include <complex>
#include <vector>

#include "bgk/stability.hpp"
#include "bgk/tableau.hpp"

#include "doctest.h"

using namespace bgk;

TEST_CASE("amplification factor is the stability function on the imaginary axis") {
  const Tableau t = dirk3_tableau();
  for (double a : {0.5, 1.0, 1.4}) {
    for (double xi : {0.3, 1.0, 2.2, 3.1}) {
      const std::complex<double> rho = rk_amp(t.b, t.c, a, xi);
      const std::complex<double> r = stab_r(t.b, t.c, std::complex<double>(0.0, -a * xi));
      CHECK(std::abs(rho - r) <= 1e-13);
    }
  }
}

TEST_CASE("the gain function controls the unit-circle excess") {
  // |rho(xi)|^2 - 1 = -2 y F_s(y) with y = a xi; the stable range of the
  // scheme is exactly where F_s stays nonnegative.
  for (const Tableau &t : {dirk2_tableau(), dirk3_tableau()}) {
    for (double y : {0.1, 0.7, 1.9, 3.4, 4.9}) {
      const std::complex<double> r = stab_r(t.b, t.c, std::complex<double>(0.0, -y));
      const double lhs = std::norm(r) - 1.0;
      const double rhs = -2.0 * y * fs_function(t.b, t.c, y);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("first positive gain zeros sit at the published locations") {
  const StabilityScan scan;
  const double y2 = rk_first_zero(dirk2_tableau().b, dirk2_tableau().c, scan);
  CHECK(std::fabs(y2 - 4.586275880) <= 1e-3);
  const double y3 = rk_first_zero(dirk3_tableau().b, dirk3_tableau().c, scan);
  CHECK(std::fabs(y3 - 4.715426442) <= 1e-3);
  // The stable CFL ceiling is y* / pi, comfortably above 1 for both schemes.
  CHECK(rk_max_cfl(dirk2_tableau().b, dirk2_tableau().c, scan) ==
        doctest::Approx(y2 / M_PI).epsilon(1e-12));
}

TEST_CASE("the classical singly-diagonal third-order scheme has no gain range") {
  // gamma is the root of x^3 - 3x^2 + 3x/2 - 1/6; its F_s dips negative
  // immediately, so the sweep reports a zero stable range.
  const double gamma = 0.43586652150845900;
  const std::vector<double> b = {-1.5 * gamma * gamma + 4.0 * gamma - 0.25,
                                 1.5 * gamma * gamma - 5.0 * gamma + 1.25, gamma};
  const std::vector<double> c = {gamma, 0.5 * (1.0 + gamma), 1.0};
  for (int i = 1; i <= 1000; ++i) {
    const double y = 0.01 * i;
    CHECK(fs_function(b, c, y) < 0.0);
  }
  CHECK(rk_first_zero(b, c, StabilityScan{}) == 0.0);
}

TEST_CASE("second-order multistep scheme loses stability near a = 0.567") {
  const StabilityScan scan;
  const double astar = bdf_max_cfl(bdf2_coeffs(), scan);
  CHECK(std::fabs(astar - 0.5678) <= 0.005);
  // Just below the edge every root modulus hugs the unit circle; just above,
  // some wavenumber escapes it.
  CHECK(bdf_worst_root(bdf2_coeffs(), astar - 0.01, scan) <= 1.0 + 1e-12);
  CHECK(bdf_worst_root(bdf2_coeffs(), astar + 0.01, scan) > 1.0 + 1e-12);
}

TEST_CASE("third-order multistep scheme is unstable at every tested CFL") {
  const StabilityScan scan;
  for (int k = 1; k <= 50; ++k) {
    const double a = 0.01 * k;
    INFO("a = ", a);
    CHECK(bdf_worst_root(bdf3_coeffs(), a, scan) > 1.0);
  }
}

TEST_CASE("characteristic roots match the growth of the scalar recurrence") {
  // Iterating u^{n+1} = sum_k q_k u^{n+1-k} amplifies the dominant root; the
  // ratio of late iterates must agree with the companion-matrix modulus.
  const BdfCoeffs coeffs = bdf2_coeffs();
  const double a = 0.8, xi = 2.0;
  const double y = a * xi;
  std::vector<std::complex<double>> q(coeffs.s);
  for (int k = 1; k <= coeffs.s; ++k) {
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -k * y));
    q[k - 1] = coeffs.a[k - 1] *
               (1.0 - std::complex<double>(0.0, coeffs.beta * y) * phase);
  }
  std::complex<double> u0(1.0, 0.0), u1(1.0, 0.0);
  double g200 = 0.0, g400 = 0.0;
  for (int n = 0; n < 400; ++n) {
    const std::complex<double> u2 = q[0] * u1 + q[1] * u0;
    u0 = u1;
    u1 = u2;
    if (n == 199) g200 = std::abs(u1);
    if (n == 399) g400 = std::abs(u1);
  }
  const double growth = std::pow(g400 / g200, 1.0 / 200.0);
  const double root = bdf_max_root(coeffs, a, xi);
  CHECK(growth == doctest::Approx(root).epsilon(1e-6));
}

TEST_CASE("A-stability certificate of the third-order family") {
  const IStability r = istability_check(dirk3_tableau());
  // E4 = 8 q1 - 12 q2 - 3 with q1, q2 the symmetric functions of the diagonal
  // (0.3, 13/3, 0.3): q1 = 74/15, q2 = 269/100.
  CHECK(r.e4 == doctest::Approx(8.0 * (0.6 + 13.0 / 3.0) -
                                12.0 * (0.09 + 2.0 * 0.3 * 13.0 / 3.0) - 3.0)
                    .epsilon(1e-13));
  CHECK(r.e4 > 0.0);
  CHECK(r.region_ok);
  CHECK(r.a_stable);
  // The certificate is specific to three stages.
  CHECK_THROWS_AS(istability_check(dirk2_tableau()), ConfigError);
}

TEST_CASE("gamma sweep selects the published optimum") {
  StabilityScan scan;
  scan.a_step = 1e-3;
  const GammaOpt opt = optimize_gamma(0.294, 0.333, scan);
  CHECK(std::fabs(opt.gamma - 0.300) <= 0.005);
  CHECK(std::fabs(opt.ystar - 4.715426442) <= 1e-3);
  REQUIRE_FALSE(opt.table.empty());
  double best = 0.0;
  for (const GammaScanPoint &p : opt.table) best = std::max(best, p.ystar);
  CHECK(opt.ystar == best);
}

TEST_CASE("scan parameters are validated") {
  StabilityScan scan;
  scan.xi_samples = 2000;  // even
  CHECK_THROWS_AS(scan.validate(), ConfigError);
  scan.xi_samples = 2001;
  scan.a_step = 0.0;
  CHECK_THROWS_AS(scan.validate(), ConfigError);
  scan.a_step = 1e-3;
  scan.a_max = -1.0;
  CHECK_THROWS_AS(scan.validate(), ConfigError);
}
