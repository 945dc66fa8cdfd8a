//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file bgk1d.cpp
//  \brief command line driver: run / converge / stability / riemann-exact
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure, 4 I/O
// error. Worker threads are capped by the BGK_THREADS environment variable.

#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "bgk/config.hpp"
#include "bgk/csv.hpp"
#include "bgk/diagnostics.hpp"
#include "bgk/errors.hpp"
#include "bgk/integrator.hpp"
#include "bgk/scenarios.hpp"
#include "bgk/stability.hpp"

namespace {

using namespace bgk;

std::vector<double> parse_time_csv(const std::string &list) {
  std::vector<double> times;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    times.push_back(std::stod(item));
  }
  return times;
}

std::vector<int> parse_int_csv(const std::string &list) {
  std::vector<int> values;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stoi(item));
  }
  return values;
}

// Exact Euler reference at t_final on the scenario's cell centers. Only the
// two scenarios whose initial data is a Riemann problem have one.
std::vector<EulerState> sample_exact(const Scenario &sc, const PhaseGrid &g) {
  EulerState left, right;
  if (sc.id == ScenarioId::Riemann) {
    left = riemann_left_state();
    right = riemann_right_state();
  } else if (sc.id == ScenarioId::SingleShock) {
    right = EulerState{1.0, 0.0, 1.0};
    left = rankine_hugoniot_image(right, sc.mach, kGasGamma);
  } else {
    throw ConfigError("exact reference curves exist only for the single-shock and "
                      "riemann scenarios");
  }
  std::vector<EulerState> states;
  states.reserve(g.nx);
  for (int i = 0; i < g.nx; ++i) {
    const double xi = (g.x_center(i) - 0.5) / sc.t_final;
    states.push_back(exact_euler_riemann(left, right, kGasGamma, xi));
  }
  return states;
}

void write_summary(const std::string &path, const RunConfig &cfg, const RunResult &res) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  char buf[128];
  out << "scenario = " << scenario_name(cfg.scenario.id) << '\n';
  out << "scheme = " << cfg.spec.name() << '\n';
  out << "nx = " << cfg.scenario.nx << '\n';
  out << "nv = " << cfg.scenario.nv << '\n';
  std::snprintf(buf, sizeof buf, "cfl = %.17g\n", cfg.scenario.cfl);
  out << buf;
  std::snprintf(buf, sizeof buf, "kappa = %.17g\n", cfg.scenario.kappa);
  out << buf;
  std::snprintf(buf, sizeof buf, "t_final = %.17g\n", res.t_final);
  out << buf;
  out << "steps = " << res.steps << '\n';
  std::snprintf(buf, sizeof buf, "dt_nominal = %.17g\n", res.dt_nominal);
  out << buf;
  static const char *names[3] = {"mass", "momentum", "energy"};
  for (int m = 0; m < 3; ++m) {
    std::snprintf(buf, sizeof buf, "%s_drift = %.17g (%s)\n", names[m],
                  res.conservation_error[m],
                  res.conservation_absolute[m] ? "absolute" : "relative");
    out << buf;
  }
  out << "newton_solves = " << res.newton.solves << '\n';
  out << "newton_max_iterations = " << res.newton.max_iterations << '\n';
  const double mean = res.newton.solves > 0
                          ? static_cast<double>(res.newton.total_iterations) /
                                static_cast<double>(res.newton.solves)
                          : 0.0;
  std::snprintf(buf, sizeof buf, "newton_mean_iterations = %.3f\n", mean);
  out << buf;
  std::snprintf(buf, sizeof buf, "wall_seconds = %.3f\n", res.wall_seconds);
  out << buf;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

int cmd_run(const std::string &config_path, const std::string &out_override,
            const std::string &snapshot_override, bool exact_flag) {
  RunConfig cfg = load_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (!snapshot_override.empty()) cfg.snapshot_times = parse_time_csv(snapshot_override);
  if (exact_flag) cfg.exact = true;

  const Scenario &sc = cfg.scenario;
  const PhaseGrid g = sc.make_grid();
  RunOptions opt;
  opt.spec = cfg.spec;
  opt.cfl = sc.cfl;
  opt.t_final = sc.t_final;
  opt.newton = cfg.newton();
  opt.snapshot_times = cfg.snapshot_times;
  const RunResult res = run(scenario_initial(sc, g), g, CollisionParams(sc.kappa), opt);

  ensure_directory(cfg.out_dir);
  const std::string dir = cfg.out_dir + "/";
  write_history_csv(dir + "history.csv", res.history);
  write_snapshot_csv(dir + "final.csv", g, res.moments_final);
  for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
    char name[48];
    std::snprintf(name, sizeof name, "snapshot_%03zu.csv", k);
    write_snapshot_csv(dir + name, g, res.snapshots[k].moments);
  }
  if (cfg.exact) {
    std::vector<double> x(g.nx);
    for (int i = 0; i < g.nx; ++i) x[i] = g.x_center(i);
    write_exact_csv(dir + "exact.csv", x, sample_exact(sc, g));
  }
  write_summary(dir + "summary.txt", cfg, res);

  std::printf("%s on %s: %lld steps to t = %g, drift (%.3e, %.3e, %.3e)\n",
              cfg.spec.name().c_str(), scenario_name(sc.id), res.steps, res.t_final,
              res.conservation_error[0], res.conservation_error[1],
              res.conservation_error[2]);
  return 0;
}

int cmd_converge(const std::string &config_path, const std::string &resolution_list,
                 const std::string &out_override) {
  RunConfig cfg = load_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  const std::vector<int> nx_list = parse_int_csv(resolution_list);
  // The benchmark pairs second order time integrators with CFL 2 but the
  // multistep family needs the smaller window; respect an explicit cfl key.
  double cfl = cfg.scenario.cfl;
  if (is_bdf(cfg.spec.time) && !cfg.cfl_overridden) cfl = 0.5;

  const ConvergenceTable table =
      convergence_table(cfg.spec, cfg.scenario.id, nx_list, cfg.scenario.nv, cfl,
                        cfg.scenario.kappa, cfg.newton(), WenoParams{});
  ensure_directory(cfg.out_dir);
  write_rate_csv(cfg.out_dir + "/rates.csv", table);
  std::printf("nx_coarse nx_fine       error    rate\n");
  for (std::size_t k = 0; k < table.error.size(); ++k)
    std::printf("%9d %7d %11.4e %7.3f\n", table.nx_coarse[k], table.nx_fine[k],
                table.error[k], table.rate[k]);
  return 0;
}

int cmd_stability(const std::string &scheme, bool scan_gamma,
                  const std::string &out_dir) {
  StabilityScan scan;
  const std::string base = out_dir.empty() ? "out" : out_dir;
  ensure_directory(base);
  const std::string dir = base + "/";

  if (scheme == "dirk2" || scheme == "dirk3") {
    const Tableau tab = scheme == "dirk2" ? dirk2_tableau() : dirk3_tableau();
    const double ystar = rk_first_zero(tab.b, tab.c, scan);
    std::printf("%s: y* = %.9f, a* = %.4f\n", scheme.c_str(), ystar,
                rk_max_cfl(tab.b, tab.c, scan));
    std::vector<std::pair<double, double>> fs_rows;
    for (double y = 0.01; y <= 3.14159265358979324 * scan.a_max; y += 0.01)
      fs_rows.emplace_back(y, fs_function(tab.b, tab.c, y));
    write_xy_csv(dir + scheme + "_fs.csv", "y", "fs", fs_rows);
    if (scan_gamma) {
      if (scheme != "dirk3")
        throw ConfigError("--scan-gamma applies to the third order family only");
      // Stay strictly inside ]1 - sqrt(2)/2, 1/3[; the left endpoint is a pole.
      const GammaOpt opt = optimize_gamma(0.294, 0.333, scan);
      std::vector<std::pair<double, double>> rows;
      rows.reserve(opt.table.size());
      for (const GammaScanPoint &p : opt.table) rows.emplace_back(p.gamma, p.ystar);
      write_xy_csv(dir + "gamma_scan.csv", "gamma", "ystar", rows);
      std::printf("gamma scan: optimum gamma = %.3f with y* = %.6f\n", opt.gamma,
                  opt.ystar);
    }
    return 0;
  }
  if (scheme == "bdf2" || scheme == "bdf3") {
    if (scan_gamma) throw ConfigError("--scan-gamma applies to the third order family only");
    const BdfCoeffs coeffs = scheme == "bdf2" ? bdf2_coeffs() : bdf3_coeffs();
    write_xy_csv(dir + scheme + "_roots.csv", "a", "max_root",
                 bdf_cfl_table(coeffs, scan));
    const double astar = bdf_max_cfl(coeffs, scan);
    if (astar > 0.0)
      std::printf("%s: a* = %.4f\n", scheme.c_str(), astar);
    else
      std::printf("%s: unstable for every scanned CFL\n", scheme.c_str());
    return 0;
  }
  throw ConfigError("unknown stability scheme '" + scheme +
                    "' (expected dirk2, dirk3, bdf2 or bdf3)");
}

int cmd_riemann_exact(const std::string &config_path, const std::string &out_dir) {
  Scenario sc = scenario_defaults(ScenarioId::Riemann);
  std::string dir = out_dir;
  if (!config_path.empty()) {
    const RunConfig cfg = load_config(config_path);
    sc = cfg.scenario;
    if (dir.empty()) dir = cfg.out_dir;
  }
  if (dir.empty()) dir = "out";
  const PhaseGrid g = sc.make_grid();
  std::vector<double> x(g.nx);
  for (int i = 0; i < g.nx; ++i) x[i] = g.x_center(i);
  ensure_directory(dir);
  write_exact_csv(dir + "/exact.csv", x, sample_exact(sc, g));
  std::printf("wrote %s/exact.csv (%d cells at t = %g)\n", dir.c_str(), g.nx,
              sc.t_final);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"semi-Lagrangian BGK solver"};
  app.require_subcommand(1);

  std::string config_path, out_dir, snapshots, scheme, resolutions;
  bool exact = false, scan_gamma = false;

  CLI::App *run_cmd = app.add_subcommand("run", "advance a scenario and write CSVs");
  run_cmd->add_option("--config", config_path, "run config file")->required();
  run_cmd->add_option("--out", out_dir, "output directory (overrides config)");
  run_cmd->add_option("--snapshots", snapshots, "comma separated snapshot times");
  run_cmd->add_flag("--exact", exact, "also write the exact Euler reference");

  CLI::App *conv_cmd = app.add_subcommand("converge", "self-convergence study");
  conv_cmd->add_option("--config", config_path, "run config file")->required();
  conv_cmd->add_option("--resolutions", resolutions, "comma separated doubling nx list")
      ->required();
  conv_cmd->add_option("--out", out_dir, "output directory (overrides config)");

  CLI::App *stab_cmd = app.add_subcommand("stability", "CFL bounds and scans");
  stab_cmd->add_option("scheme", scheme, "dirk2 | dirk3 | bdf2 | bdf3")->required();
  stab_cmd->add_flag("--scan-gamma", scan_gamma, "gamma optimization scan (dirk3)");
  stab_cmd->add_option("--out", out_dir, "output directory");

  CLI::App *exact_cmd =
      app.add_subcommand("riemann-exact", "sample the exact Euler solution");
  exact_cmd->add_option("--config", config_path, "run config file (riemann scenario)");
  exact_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, out_dir, snapshots, exact);
    if (conv_cmd->parsed()) return cmd_converge(config_path, resolutions, out_dir);
    if (stab_cmd->parsed()) return cmd_stability(scheme, scan_gamma, out_dir);
    if (exact_cmd->parsed()) return cmd_riemann_exact(config_path, out_dir);
  } catch (const ConfigError &e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const NumericalError &e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const IoError &e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 4;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
