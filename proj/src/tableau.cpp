//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file tableau.cpp
//  \brief tableau construction and invariant checks

#include "bgk/tableau.hpp"

#include <cmath>
#include <string>

namespace bgk {

void Tableau::validate() const {
  const double tol = 1e-12;
  if (s < 1 || static_cast<int>(A.size()) != s || static_cast<int>(b.size()) != s ||
      static_cast<int>(c.size()) != s)
    throw ConfigError("tableau: inconsistent sizes");
  for (int i = 0; i < s; ++i) {
    double row = 0.0;
    for (int j = 0; j < s; ++j) {
      if (j > i && A[i][j] != 0.0) throw ConfigError("tableau: A not lower triangular");
      row += A[i][j];
    }
    if (std::fabs(row - c[i]) > tol)
      throw ConfigError("tableau: row sum of stage " + std::to_string(i) +
                        " does not match c");
  }
  for (int j = 0; j < s; ++j)
    if (std::fabs(A[s - 1][j] - b[j]) > tol)
      throw ConfigError("tableau: not stiffly accurate (last row of A != b)");
  if (!(A[s - 1][s - 1] > 0.0))
    throw ConfigError("tableau: last diagonal entry must be positive");
}

std::array<double, 4> Tableau::order3_residuals() const {
  double r1 = -1.0, r2 = -0.5, r3 = -1.0 / 3.0, r4 = -1.0 / 6.0;
  for (int i = 0; i < s; ++i) {
    r1 += b[i];
    r2 += b[i] * c[i];
    r3 += b[i] * c[i] * c[i];
    double ac = 0.0;
    for (int j = 0; j <= i; ++j) ac += A[i][j] * c[j];
    r4 += b[i] * ac;
  }
  return {r1, r2, r3, r4};
}

Tableau dirk2_tableau() {
  const double alpha = 1.0 - std::sqrt(2.0) / 2.0;
  Tableau t;
  t.s = 2;
  t.A = {{alpha, 0.0}, {1.0 - alpha, alpha}};
  t.b = {1.0 - alpha, alpha};
  t.c = {alpha, 1.0};
  t.validate();
  return t;
}

Tableau dirk3_from_gamma(double gamma) {
  const double den1d = 2.0 * gamma * gamma - 4.0 * gamma + 1.0;
  const double den2d = 3.0 * gamma * gamma * gamma - 9.0 * gamma * gamma + 6.0 * gamma - 1.0;
  if (std::fabs(den1d) < 1e-10 || std::fabs(den2d) < 1e-10)
    throw DegenerateGammaError("gamma = " + std::to_string(gamma) +
                               " sits on a pole of the tableau coefficients");
  double b2, c2, g2;
  if (gamma == 0.3) {
    // Canonical member. The coefficient map is badly conditioned this close to
    // the pole at 1 - sqrt(2)/2 (the quantization of the double 0.3 alone moves
    // b2 by ~1e1 ulp), so the production tableau comes from the simplified
    // rationals rather than from the formulas.
    g2 = 13.0 / 3.0;
    b2 = -3.0 / 710.0;
    c2 = 8.0 / 3.0;
  } else {
    // Extended precision keeps the arithmetic rounding below the level already
    // contributed by the quantization of gamma itself.
    const long double g = gamma;
    const long double den1 = 2.0L * g * g - 4.0L * g + 1.0L;
    const long double den2 = 3.0L * g * g * g - 9.0L * g * g + 6.0L * g - 1.0L;
    b2 = static_cast<double>(-0.75L * den1 * den1 / den2);
    c2 = static_cast<double>((6.0L * g * g - 9.0L * g + 2.0L) / (3.0L * den1));
    g2 = static_cast<double>((6.0L * g * g - 6.0L * g + 1.0L) / (3.0L * den1));
  }

  Tableau t;
  t.s = 3;
  t.A = {{gamma, 0.0, 0.0},
         {c2 - g2, g2, 0.0},
         {1.0 - b2 - gamma, b2, gamma}};
  t.b = {1.0 - b2 - gamma, b2, gamma};
  t.c = {gamma, c2, 1.0};
  t.validate();
  return t;
}

Tableau dirk3_tableau() { return dirk3_from_gamma(0.3); }

BdfCoeffs bdf2_coeffs() {
  BdfCoeffs c;
  c.s = 2;
  c.a = {4.0 / 3.0, -1.0 / 3.0};
  c.beta = 2.0 / 3.0;
  return c;
}

BdfCoeffs bdf3_coeffs() {
  BdfCoeffs c;
  c.s = 3;
  c.a = {18.0 / 11.0, -9.0 / 11.0, 2.0 / 11.0};
  c.beta = 6.0 / 11.0;
  return c;
}

}  // namespace bgk
