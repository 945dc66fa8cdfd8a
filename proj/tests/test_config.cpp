//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file test_config.cpp
//  \brief key = value run configuration parsing and validation

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "bgk/config.hpp"
#include "bgk/errors.hpp"

#include "doctest.h"

using namespace bgk;

TEST_CASE("scenario key alone yields the full benchmark defaults") {
  const RunConfig cfg = parse_config("scenario = riemann\n");
  CHECK(cfg.scenario.id == ScenarioId::Riemann);
  CHECK(cfg.scenario.nx == 200);
  CHECK(cfg.scenario.nv == 30);
  CHECK(cfg.scenario.cfl == 2.0);
  CHECK(cfg.scenario.kappa == 1e-6);
  CHECK(cfg.scenario.t_final == 0.16);
  // Unset keys keep their documented defaults.
  CHECK(cfg.spec.name() == "RK3-W35-DM");
  CHECK(cfg.spec.conservative);
  CHECK(cfg.newton_tol == 1e-14);
  CHECK(cfg.out_dir == "out");
  CHECK(cfg.snapshot_times.empty());
  CHECK_FALSE(cfg.exact);
  CHECK_FALSE(cfg.cfl_overridden);
}

TEST_CASE("overrides apply on top of the scenario and later duplicates win") {
  const std::string text =
      "# relaxation study\n"
      "scenario = ap-relaxation   # trailing comment\n"
      "scheme = BDF3-W35-DM\n"
      "nx = 50\n"
      "nx = 80\n"
      "nv = 24\n"
      "cfl = 1.5\n"
      "kappa = 1e-5\n"
      "t_final = 0.01\n"
      "newton_tol = 1e-12\n"
      "out_dir = scratch/run1\n"
      "snapshots = 0.002, 0.004,0.008\n"
      "exact = false\n";
  const RunConfig cfg = parse_config(text);
  CHECK(cfg.scenario.id == ScenarioId::APRelaxation);
  CHECK(cfg.spec.name() == "BDF3-W35-DM");
  CHECK(cfg.scenario.nx == 80);
  CHECK(cfg.scenario.nv == 24);
  CHECK(cfg.scenario.cfl == 1.5);
  CHECK(cfg.cfl_overridden);
  CHECK(cfg.scenario.kappa == 1e-5);
  CHECK(cfg.scenario.t_final == 0.01);
  CHECK(cfg.newton_tol == 1e-12);
  CHECK(cfg.out_dir == "scratch/run1");
  REQUIRE(cfg.snapshot_times.size() == 3);
  CHECK(cfg.snapshot_times[0] == 0.002);
  CHECK(cfg.snapshot_times[1] == 0.004);
  CHECK(cfg.snapshot_times[2] == 0.008);
  CHECK_FALSE(cfg.exact);
}

TEST_CASE("conservative key overrides the convention encoded in the name") {
  // Bare RK2-W23 is the classical variant; the key flips it without renaming.
  RunConfig cfg = parse_config("scenario = smooth\nscheme = RK2-W23\n");
  CHECK_FALSE(cfg.spec.conservative);
  cfg = parse_config("scenario = smooth\nscheme = RK2-W23\nconservative = true\n");
  CHECK(cfg.spec.conservative);
  CHECK(cfg.spec.name() == "RK2-W23-CM");
  cfg = parse_config("scenario = smooth\nscheme = RK2-W23-DM\nconservative = false\n");
  CHECK_FALSE(cfg.spec.conservative);
  CHECK(cfg.spec.name() == "RK2-W23-DM-classical");
}

TEST_CASE("configuration errors carry usable messages") {
  SUBCASE("missing scenario") {
    CHECK_THROWS_AS(parse_config("scheme = RK3-W35-DM\n"), ConfigError);
  }
  SUBCASE("unknown key names the offender") {
    CHECK_THROWS_WITH_AS(parse_config("scenario = smooth\nfrobnicate = 1\n"),
                         "unknown config key: frobnicate", UnknownKeyError);
  }
  SUBCASE("malformed line reports its number") {
    try {
      parse_config("scenario = smooth\njust words\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("nonpositive reals are rejected") {
    CHECK_THROWS_AS(parse_config("scenario = smooth\ncfl = -1\n"), TypeMismatchError);
    CHECK_THROWS_AS(parse_config("scenario = smooth\nkappa = 0\n"), TypeMismatchError);
    CHECK_THROWS_AS(parse_config("scenario = smooth\nt_final = -0.1\n"),
                    TypeMismatchError);
  }
  SUBCASE("non-integer resolutions are rejected") {
    CHECK_THROWS_AS(parse_config("scenario = smooth\nnx = 2.5\n"), TypeMismatchError);
    CHECK_THROWS_AS(parse_config("scenario = smooth\nnv = banana\n"), TypeMismatchError);
  }
  SUBCASE("booleans accept only true or false") {
    CHECK_THROWS_AS(parse_config("scenario = smooth\nexact = yes\n"), TypeMismatchError);
  }
  SUBCASE("negative snapshot times are rejected") {
    CHECK_THROWS_AS(parse_config("scenario = smooth\nsnapshots = 0.1,-0.2\n"),
                    TypeMismatchError);
  }
  SUBCASE("mispaired scheme fails scheme validation") {
    CHECK_THROWS_AS(parse_config("scenario = smooth\nscheme = RK3-W23-DM\n"),
                    PairingViolationError);
  }
}

TEST_CASE("config files load from disk and unreadable paths raise IoError") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bgk1d_test_config";
  fs::create_directories(dir);
  const fs::path path = dir / "run.cfg";
  {
    std::ofstream out(path);
    out << "scenario = test4\nnx = 64\n";
  }
  const RunConfig cfg = load_config(path.string());
  CHECK(cfg.scenario.id == ScenarioId::Riemann);  // test4 is an alias
  CHECK(cfg.scenario.nx == 64);
  CHECK_THROWS_AS(load_config((dir / "absent.cfg").string()), IoError);
  fs::remove_all(dir);
}
