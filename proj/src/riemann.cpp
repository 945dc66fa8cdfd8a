//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file riemann.cpp
//  \brief exact gamma-law Riemann solver (star-pressure Newton plus sampling)

#include "bgk/riemann.hpp"

#include <cmath>
#include <string>

#include "bgk/errors.hpp"

namespace bgk {

namespace {

// Pressure function of one side and its derivative: the velocity jump the
// left or right wave produces when the star pressure is p (Rankine-Hugoniot
// branch above p_K, isentrope branch below).
struct SideFn {
  double f;
  double df;
};

SideFn side_function(double p, const EulerState &s, double gamma) {
  const double a = s.sound_speed(gamma);
  SideFn r;
  if (p > s.p) {
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(A / (p + B));
    r.f = (p - s.p) * root;
    r.df = root * (1.0 - 0.5 * (p - s.p) / (B + p));
  } else {
    const double z = (gamma - 1.0) / (2.0 * gamma);
    r.f = 2.0 * a / (gamma - 1.0) * (std::pow(p / s.p, z) - 1.0);
    r.df = std::pow(p / s.p, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * a);
  }
  return r;
}

double pressure_function(double p, const EulerState &l, const EulerState &r,
                         double gamma) {
  return side_function(p, l, gamma).f + side_function(p, r, gamma).f + (r.u - l.u);
}

void check_inputs(const EulerState &l, const EulerState &r, double gamma) {
  l.validate("riemann left state");
  r.validate("riemann right state");
  if (!(gamma > 1.0))
    throw ConfigError("riemann: gamma must exceed 1, got " + std::to_string(gamma));
  // Positivity of the star region: the rarefactions must not exhaust the
  // available escape velocity.
  const double escape = 2.0 * (l.sound_speed(gamma) + r.sound_speed(gamma)) / (gamma - 1.0);
  if (r.u - l.u >= escape)
    throw VacuumFormedError("riemann: states separate at or beyond the escape velocity "
                            "(vacuum forms between the waves)");
}

// Initial bracket [lo, hi] with F(lo) < 0 < F(hi). F is monotone increasing,
// negative at p -> 0 whenever vacuum is excluded, and grows like sqrt(p).
void initial_bracket(const EulerState &l, const EulerState &r, double gamma, double *lo,
                     double *hi) {
  *lo = 1e-12 * std::min(l.p, r.p);
  *hi = std::max(l.p, r.p);
  int guard = 0;
  while (pressure_function(*hi, l, r, gamma) < 0.0) {
    *hi *= 2.0;
    if (++guard > 200)
      throw NumericalError("riemann: failed to bracket the star pressure");
  }
}

}  // namespace

double EulerState::sound_speed(double gamma) const { return std::sqrt(gamma * p / rho); }

void EulerState::validate(const char *where) const {
  if (!(rho > 0.0) || !(p > 0.0))
    throw NonpositiveStateError(std::string(where) + ": needs rho > 0 and p > 0, got rho = " +
                                std::to_string(rho) + ", p = " + std::to_string(p));
}

double star_pressure_bisection(const EulerState &left, const EulerState &right,
                               double gamma, double tol) {
  check_inputs(left, right, gamma);
  double lo, hi;
  initial_bracket(left, right, gamma, &lo, &hi);
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    (pressure_function(mid, left, right, gamma) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double star_pressure(const EulerState &left, const EulerState &right, double gamma) {
  check_inputs(left, right, gamma);

  // Two-rarefaction guess: exact when both waves are rarefactions, an
  // excellent starting point otherwise.
  const double al = left.sound_speed(gamma);
  const double ar = right.sound_speed(gamma);
  const double z = (gamma - 1.0) / (2.0 * gamma);
  const double num = al + ar - 0.5 * (gamma - 1.0) * (right.u - left.u);
  const double den = al / std::pow(left.p, z) + ar / std::pow(right.p, z);
  double p = std::pow(std::max(num / den, 1e-12), 1.0 / z);

  for (int it = 0; it < 60; ++it) {
    const SideFn fl = side_function(p, left, gamma);
    const SideFn fr = side_function(p, right, gamma);
    const double f = fl.f + fr.f + (right.u - left.u);
    const double df = fl.df + fr.df;
    if (!(df > 0.0)) break;  // stalled; bisection below is assumption-free
    double pnew = p - f / df;
    if (pnew <= 0.0) pnew = 0.5 * p;
    if (!std::isfinite(pnew)) break;
    const double change = std::fabs(pnew - p) / (0.5 * (pnew + p));
    p = pnew;
    if (change < 1e-14) return p;
  }
  return star_pressure_bisection(left, right, gamma, 1e-14);
}

RiemannWaves riemann_waves(const EulerState &left, const EulerState &right, double gamma) {
  RiemannWaves w;
  w.pstar = star_pressure(left, right, gamma);
  const SideFn fl = side_function(w.pstar, left, gamma);
  const SideFn fr = side_function(w.pstar, right, gamma);
  w.ustar = 0.5 * (left.u + right.u) + 0.5 * (fr.f - fl.f);

  const double beta = (gamma - 1.0) / (gamma + 1.0);
  const double al = left.sound_speed(gamma);
  const double ar = right.sound_speed(gamma);

  w.left_shock = w.pstar > left.p;
  if (w.left_shock) {
    const double ratio = w.pstar / left.p;
    w.rho_star_left = left.rho * (ratio + beta) / (beta * ratio + 1.0);
    const double s =
        left.u - al * std::sqrt((gamma + 1.0) / (2.0 * gamma) * ratio +
                                (gamma - 1.0) / (2.0 * gamma));
    w.left_head = w.left_tail = s;
  } else {
    w.rho_star_left = left.rho * std::pow(w.pstar / left.p, 1.0 / gamma);
    const double astar = al * std::pow(w.pstar / left.p, (gamma - 1.0) / (2.0 * gamma));
    w.left_head = left.u - al;
    w.left_tail = w.ustar - astar;
  }

  w.right_shock = w.pstar > right.p;
  if (w.right_shock) {
    const double ratio = w.pstar / right.p;
    w.rho_star_right = right.rho * (ratio + beta) / (beta * ratio + 1.0);
    const double s =
        right.u + ar * std::sqrt((gamma + 1.0) / (2.0 * gamma) * ratio +
                                 (gamma - 1.0) / (2.0 * gamma));
    w.right_head = w.right_tail = s;
  } else {
    w.rho_star_right = right.rho * std::pow(w.pstar / right.p, 1.0 / gamma);
    const double astar = ar * std::pow(w.pstar / right.p, (gamma - 1.0) / (2.0 * gamma));
    w.right_head = right.u + ar;
    w.right_tail = w.ustar + astar;
  }
  return w;
}

EulerState exact_euler_riemann(const EulerState &left, const EulerState &right,
                               double gamma, double xi) {
  const RiemannWaves w = riemann_waves(left, right, gamma);
  const double gp = gamma + 1.0;
  const double gm = gamma - 1.0;

  if (xi <= w.ustar) {
    const double al = left.sound_speed(gamma);
    if (w.left_shock)
      return xi < w.left_head ? left
                              : EulerState{w.rho_star_left, w.ustar, w.pstar};
    if (xi < w.left_head) return left;
    if (xi > w.left_tail) return EulerState{w.rho_star_left, w.ustar, w.pstar};
    // Inside the left fan: characteristics u - a = xi with constant left
    // Riemann invariant u + 2a/(gm).
    const double a = 2.0 / gp * (al + 0.5 * gm * (left.u - xi));
    EulerState s;
    s.u = 2.0 / gp * (al + 0.5 * gm * left.u + xi);
    s.rho = left.rho * std::pow(a / al, 2.0 / gm);
    s.p = left.p * std::pow(a / al, 2.0 * gamma / gm);
    return s;
  }

  const double ar = right.sound_speed(gamma);
  if (w.right_shock)
    return xi > w.right_head ? right : EulerState{w.rho_star_right, w.ustar, w.pstar};
  if (xi > w.right_head) return right;
  if (xi < w.right_tail) return EulerState{w.rho_star_right, w.ustar, w.pstar};
  const double a = 2.0 / gp * (ar - 0.5 * gm * (right.u - xi));
  EulerState s;
  s.u = 2.0 / gp * (-ar + 0.5 * gm * right.u + xi);
  s.rho = right.rho * std::pow(a / ar, 2.0 / gm);
  s.p = right.p * std::pow(a / ar, 2.0 * gamma / gm);
  return s;
}

EulerState rankine_hugoniot_image(const EulerState &right, double mach, double gamma) {
  right.validate("rankine_hugoniot_image downstream state");
  if (!(mach > 1.0))
    throw ConfigError("rankine_hugoniot_image: Mach number must exceed 1");
  const double m2 = mach * mach;
  EulerState l;
  l.rho = right.rho * (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0);
  l.u = right.u + 2.0 * right.sound_speed(gamma) / (gamma + 1.0) * (m2 - 1.0) / mach;
  l.p = right.p * (1.0 + 2.0 * gamma * (m2 - 1.0) / (gamma + 1.0));
  return l;
}

}  // namespace bgk
