//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
#ifndef BGK_CONFIG_HPP_
#define BGK_CONFIG_HPP_
//! \file config.hpp
//  \brief flat key = value run configuration
//
// A run config is a plain-text file of `key = value` lines ('#' starts a
// comment, blank lines ignored, later duplicates win). The scenario key is
// mandatory and fills every numeric default; other keys override it.
// Recognized keys:
//   scenario      single-shock | smooth | ap-relaxation | riemann (or test1..test4)
//   scheme        scheme name, e.g. RK3-W35-DM (default RK3-W35-DM)
//   conservative  true | false, overrides the convention encoded in the name
//   nx, nv        resolution overrides (positive integers)
//   cfl, kappa    positive reals
//   t_final       positive real
//   newton_tol    positive real, discrete-Maxwellian Newton tolerance
//   out_dir       output directory for CSV artifacts
//   snapshots     comma-separated times, moments dumped when first reached
//   exact         true | false, also sample the exact Euler solution at t_final

#include <string>
#include <vector>

#include "bgk/integrator.hpp"
#include "bgk/maxwellian.hpp"
#include "bgk/scenarios.hpp"

namespace bgk {

//! \struct RunConfig
//  \brief fully resolved run configuration (scenario defaults plus overrides)
struct RunConfig {
  Scenario scenario;  // numeric overrides are applied onto these fields
  SchemeSpec spec;
  double newton_tol = 1e-14;
  std::string out_dir = "out";
  std::vector<double> snapshot_times;
  bool exact = false;
  bool cfl_overridden = false;  // true when the file carried an explicit cfl key

  NewtonConfig newton() const {
    NewtonConfig n;
    n.tol = newton_tol;
    return n;
  }
};

// Parse config text. Throws UnknownKeyError, TypeMismatchError, ConfigError
// (missing scenario, malformed lines) or PairingViolationError via the scheme.
RunConfig parse_config(const std::string &text);

// Read and parse a config file; IoError when unreadable.
RunConfig load_config(const std::string &path);

}  // namespace bgk

#endif  // BGK_CONFIG_HPP_
