//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file tableau.hpp
//  \brief diagonally implicit Runge-Kutta tableaus and BDF coefficient sets
//
// All tableaus are stiffly accurate (last row of A equals b) and satisfy the row-sum
// simplification condition sum_j a_ij = c_i; both are enforced on construction. The
// third-order family is parameterized by the diagonal entry gamma of stages 1 and 3,
// with the remaining coefficients fixed by the order conditions.

#ifndef BGK_TABLEAU_HPP_
#define BGK_TABLEAU_HPP_

#include <array>
#include <vector>

#include "bgk/errors.hpp"

namespace bgk {

//----------------------------------------------------------------------------------------
//! \struct Tableau

struct Tableau {
  int s = 0;
  std::vector<std::vector<double>> A;  // lower triangular
  std::vector<double> b, c;

  void validate() const;  // row sums, stiff accuracy, positive diagonal

  // Residuals of the four order-3 conditions:
  // sum b - 1, sum b c - 1/2, sum b c^2 - 1/3, sum_i b_i sum_j a_ij c_j - 1/6.
  std::array<double, 4> order3_residuals() const;
};

//----------------------------------------------------------------------------------------
//! \struct BdfCoeffs
//  \brief f^{n+1} = sum_k a_k f^{n+1-k} + beta dt (df/dt)^{n+1}

struct BdfCoeffs {
  int s = 0;
  std::vector<double> a;
  double beta = 0.0;
};

// Second-order two-stage scheme with diagonal alpha = 1 - sqrt(2)/2 (L-stable).
Tableau dirk2_tableau();

// Third-order three-stage scheme from the one-parameter family; gamma = 0.3 is the
// stability-optimal member (see the stability module's gamma scan).
Tableau dirk3_tableau();

// Family member at a given gamma:
//   b2 = -(3/4)(2g^2-4g+1)^2 / (3g^3-9g^2+6g-1)
//   c2 = (6g^2-9g+2) / (3(2g^2-4g+1))
//   g2 = (6g^2-6g+1) / (3(2g^2-4g+1))
// Throws DegenerateGamma near the denominator roots.
Tableau dirk3_from_gamma(double gamma);

BdfCoeffs bdf2_coeffs();  // (4/3, -1/3), beta = 2/3
BdfCoeffs bdf3_coeffs();  // (18/11, -9/11, 2/11), beta = 6/11

}  // namespace bgk

#endif  // BGK_TABLEAU_HPP_
