//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file integrator.hpp
//  \brief time steppers: implicit-Euler SL, stiffly accurate DIRK, BDF multistep
//
// All steppers share the same building blocks: characteristic-foot interpolation
// (transport.hpp), an implicit relaxation against the cell Maxwellian, and an
// optional flux-difference corrector that restores exact conservation of the
// discrete moments. The run() driver advances a scenario to a final time and
// keeps a ledger of expected moment totals so that conservation drift can be
// reported on open (free-flow) domains as well as periodic ones.

#ifndef BGK_INTEGRATOR_HPP_
#define BGK_INTEGRATOR_HPP_

#include <array>
#include <deque>
#include <string>
#include <vector>

#include "bgk/grid.hpp"
#include "bgk/gweno.hpp"
#include "bgk/maxwellian.hpp"
#include "bgk/tableau.hpp"

namespace bgk {

//----------------------------------------------------------------------------------------
//! \enum TimeScheme
enum class TimeScheme { IE, DIRK2, DIRK3, BDF2, BDF3 };

// Formal temporal order (1, 2 or 3).
int time_scheme_order(TimeScheme t);

// True for the multistep (BDF) family.
bool is_bdf(TimeScheme t);

const char *time_scheme_name(TimeScheme t);

//----------------------------------------------------------------------------------------
//! \struct SchemeSpec
//  \brief full scheme selection: time integrator, space interpolation, closure
//
// Scheme names follow the TIME-SPACE-MAXWELLIAN convention: "RK3-W35-DM",
// "BDF2-W23-CM", "IE-SL". A trailing CM/DM token selects the Maxwellian and,
// for the RK/BDF families, turns the conservative corrector on; a bare name
// such as "RK3-W35" is the classical (non-conservative) scheme with the
// continuous Maxwellian. The first-order scheme never defaults to the
// corrector since the discrete Maxwellian alone already conserves for it.
struct SchemeSpec {
  TimeScheme time = TimeScheme::IE;
  GwenoOrder space = GwenoOrder::Linear;
  MaxwellianMode maxwellian = MaxwellianMode::Continuous;
  bool conservative = false;

  // Parse a scheme name. Throws ConfigError on unknown tokens.
  static SchemeSpec parse(const std::string &name);

  // Enforce the order pairings (IE+Linear, RK2/BDF2+W23, RK3/BDF3+W35).
  // Throws PairingViolationError otherwise.
  void validate() const;

  std::string name() const;
};

//----------------------------------------------------------------------------------------
// Single steps.
//
// All steppers return f^{n+1}. When `boundary_delta` is non-null it receives
// the change of the moment totals (mass, momentum, energy; in the units of
// moment_totals) that the step's transport exchanged through the domain
// boundaries: identically zero on periodic grids. Under free flow it is the
// exact balance of the reconstructed edge-face fluxes for the conservative
// schemes, the exact totals change of the transport assembly for the linear
// interpolant (which preserves interior sums, so that change is pure boundary
// exchange), and a two-endpoint boundary flux estimate for the classical
// nonlinear interpolants, whose interior losses the drift report must keep
// visible. Callers accumulate it into the expected-totals ledger so that the
// conservation drift measures the scheme's own losses, not the open ends.
// `stats` (optional) collects the Newton iteration counts of the
// discrete-Maxwellian solves.

// One step of a stiffly accurate DIRK scheme (covers IE as the 1-stage tableau).
Distribution step_dirk(const Distribution &fn, const Tableau &tab, const PhaseGrid &g,
                       const CollisionParams &coll, double dt, const SchemeSpec &spec,
                       const NewtonConfig &newton, const WenoParams &weno,
                       NewtonStats *stats = nullptr,
                       std::array<double, 3> *boundary_delta = nullptr);

// First-order implicit-Euler semi-Lagrangian step with linear interpolation:
// f^{n+1} = (kappa f~ + dt M(f~)) / (kappa + dt), f~ the foot value of f^n.
Distribution step_ie(const Distribution &fn, const PhaseGrid &g,
                     const CollisionParams &coll, double dt, MaxwellianMode mode,
                     const NewtonConfig &newton, NewtonStats *stats = nullptr,
                     std::array<double, 3> *boundary_delta = nullptr);

// One BDF step. `history` holds f^n at the front, then f^{n-1}, ..., at least
// coeffs.s levels, all spaced by the same dt.
Distribution step_bdf(const std::deque<Distribution> &history, const BdfCoeffs &coeffs,
                      const PhaseGrid &g, const CollisionParams &coll, double dt,
                      const SchemeSpec &spec, const NewtonConfig &newton,
                      const WenoParams &weno, NewtonStats *stats = nullptr,
                      std::array<double, 3> *boundary_delta = nullptr);

// The 1-stage tableau (A=[1], b=c=(1)) that turns step_dirk into step_ie.
Tableau ie_tableau();

// Tableau / BDF coefficients used by a time scheme, plus the DIRK scheme that
// bootstraps a BDF history (same order, space and conservative setting).
Tableau startup_tableau(TimeScheme t);

// Largest |shift|/dt factor any interpolation of one step can request; used to
// size the free-flow stencil validation. For DIRK this scans stage abscissae
// and their differences, for BDF it is the step count s.
double max_shift_factor(const SchemeSpec &spec);

//----------------------------------------------------------------------------------------
//! \struct RunOptions / RunResult
//  \brief driver inputs and the per-run record it produces

struct RunOptions {
  SchemeSpec spec;
  double cfl = 2.0;
  double t_final = 0.0;
  NewtonConfig newton;
  WenoParams weno;
  std::vector<double> snapshot_times;  // moments recorded when t first reaches each
};

struct ConservationRecord {
  long long step = 0;
  double t = 0.0;
  // Per-moment drift |totals - expected|, relative to the initial total unless
  // that total is (numerically) zero, in which case the absolute value is kept.
  std::array<double, 3> drift{};
};

struct Snapshot {
  double t = 0.0;
  MomentField moments;
};

struct RunResult {
  Distribution f_final;
  MomentField moments_final;
  double t_final = 0.0;
  long long steps = 0;
  double dt_nominal = 0.0;

  std::array<double, 3> initial_totals{};
  std::array<double, 3> final_totals{};
  std::array<double, 3> expected_totals{};
  // Final drift, same scaling convention as ConservationRecord.
  std::array<double, 3> conservation_error{};
  std::array<bool, 3> conservation_absolute{};  // true where the absolute value is reported

  std::vector<ConservationRecord> history;
  std::vector<Snapshot> snapshots;
  NewtonStats newton;
  double wall_seconds = 0.0;
};

// Advance f0 to opt.t_final with dt = cfl * dx / max|v|. The last step shrinks
// to land on t_final exactly; a BDF scheme takes that step (and its startup
// steps) with the matching-order DIRK scheme since its history requires a
// uniform dt. Step errors carry "step n, cell i" context.
RunResult run(const Distribution &f0, const PhaseGrid &g, const CollisionParams &coll,
              const RunOptions &opt);

}  // namespace bgk

#endif  // BGK_INTEGRATOR_HPP_
