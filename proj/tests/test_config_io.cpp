#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "emwh/config.hpp"
#include "emwh/io.hpp"
#include "emwh/krylov.hpp"

using namespace emwh;

namespace {

const char* kBasic = R"({
  "dim": 2,
  "domain": {"lo": [-1, -1], "hi": [1, 1], "cells": [16, 16]},
  "frequencies": [5.5],
  "periods": 2,
  "boundaries": {"all": "pec"},
  "sources": [{"type": "gaussian", "center": [0, 0], "sigma": 36}]
})";

std::string tmpfile(const std::string& name) {
    return std::string("/tmp/emwh_test_") + name;
}

}  // namespace

TEST_CASE("config parsing: happy path") {
    const RunConfig cfg = parse_run_config(kBasic);
    CHECK(cfg.dim == 2);
    CHECK(cfg.cells[0] == 16);
    CHECK(cfg.frequencies == std::vector<double>{5.5});
    CHECK(cfg.periods == 2);
    CHECK(cfg.forcing == Forcing::Sin);
    CHECK(cfg.profile == SourceTime::SinRecursive);
    CHECK(cfg.boundary.energy_conserving(2));
    CHECK(cfg.sources.size() == 1);
    CHECK(cfg.sources[0].scale_by_omega);
}

TEST_CASE("config parsing: errors name the offending key") {
    auto message_of = [](const std::string& text) {
        try {
            parse_run_config(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };

    CHECK(message_of("{") .find("config") != std::string::npos);
    CHECK(message_of(R"({"dim": 2})").find("frequencies") != std::string::npos);
    CHECK(message_of(R"({"frequencies": [-3], "sources": []})").find("frequencies") !=
          std::string::npos);
    CHECK(message_of(R"({"frequencies": [1.0, 1.4142135623730951],
                         "domain": {"lo": [0,0], "hi": [1,1], "cells": [4,4]},
                         "sources": [{"type": "gaussian"}]})")
              .find("frequencies") != std::string::npos);
    CHECK(message_of(R"({"frequencies": [2], "boundaries": {"all": "open"},
                         "sources": [{"type": "gaussian"}]})")
              .find("boundaries.all") != std::string::npos);
    CHECK(message_of(R"({"frequencies": [2], "sources": []})").find("sources") !=
          std::string::npos);
    CHECK(message_of(R"({"frequencies": [2],
                         "domain": {"lo": [0,0], "hi": [1,1], "cells": [4,4]},
                         "sources": [{"type": "gaussian", "omega_index": 3}]})")
              .find("omega_index") != std::string::npos);
    CHECK(message_of(R"({"frequencies": [2], "solver": {"tol": 0},
                         "domain": {"lo": [0,0], "hi": [1,1], "cells": [4,4]},
                         "sources": [{"type": "gaussian"}]})")
              .find("tol") != std::string::npos);
    CHECK(message_of(R"({"dim": 2, "frequencies": [2],
                         "sources": [{"type": "gaussian"}]})")
              .find("cells") != std::string::npos);
}

TEST_CASE("resolution from frequency") {
    RunConfig cfg = parse_run_config(R"({
      "dim": 2,
      "domain": {"lo": [0, 0], "hi": [1, 2], "points_per_omega": 4},
      "frequencies": [20.5],
      "sources": [{"type": "gaussian"}]
    })");
    auto problem = build_problem(cfg);
    const auto& p = std::get<Problem2D>(problem);
    CHECK(p.grid.nx == 4 * 21);       // 4 * ceil(20.5) per unit length
    CHECK(p.grid.ny == 2 * 4 * 21);
    CHECK(p.time.dt <= 0.9 * cfl_time_step(p.grid) + 1e-15);
    CHECK(p.time.T == doctest::Approx(p.filter.window()));
}

TEST_CASE("built problem carries the configured source and dirichlet data") {
    RunConfig cfg = parse_run_config(kBasic);
    auto problem = build_problem(cfg);
    auto& p = std::get<Problem2D>(problem);
    REQUIRE(p.source.terms.size() == 1);
    const Grid2D& g = p.grid;
    const double mid = p.source.terms[0].jz[g.iez(8, 8)];
    CHECK(mid == doctest::Approx(5.5).epsilon(1e-12));  // amplitude scaled by omega
    CHECK(p.source.terms[0].jz[g.iez(0, 0)] < 1e-20 * mid + 1e-30);

    RunConfig dcfg = parse_run_config(R"({
      "dim": 2,
      "domain": {"lo": [0, 0], "hi": [1, 1], "cells": [8, 8]},
      "frequencies": [10.5],
      "quadrature": "trapezoid-modified",
      "boundaries": {"all": "dirichlet"},
      "dirichlet": {"type": "affine", "modified": true},
      "sources": [{"type": "manufactured-affine"}]
    })");
    auto dp = build_problem(dcfg);
    const auto& q = std::get<Problem2D>(dp);
    REQUIRE(q.source.dirichlet.has_value());
    CHECK(q.source.dirichlet->modified);
    CHECK(q.source.dirichlet->values[q.grid.iez(8, 8)] == doctest::Approx(2.0));
    CHECK(q.source.terms[0].time == SourceTime::SinRecursiveModified);
    CHECK(q.filter.mode == StateMode::EnergyConserving);
}

TEST_CASE("config snapshot records derived quantities") {
    RunConfig cfg = parse_run_config(R"({
      "dim": 2,
      "domain": {"lo": [0, 0], "hi": [1, 1], "points_per_omega": 3},
      "frequencies": [4.5],
      "sources": [{"type": "gaussian"}]
    })");
    const std::string snap = config_snapshot(cfg);
    CHECK(snap.find("\"cells\"") != std::string::npos);
    CHECK(snap.find("15") != std::string::npos);  // 3 * ceil(4.5)
    CHECK(snap.find("energy-conserving") != std::string::npos);
    CHECK(snap.find("\"window\"") != std::string::npos);
}

TEST_CASE("waveguide metric integrates the field strength") {
    Domain d;
    d.dim = 2;
    d.lo = {0.0, 0.0, 0.0};
    d.hi = {1.0, 1.0, 0.0};
    d.cells = {20, 20, 1};
    Grid2D g = build_grid_2d(d, {}, {}, BoundarySpec{});
    std::vector<double> ez(g.n_ez(), 2.0);
    CHECK(waveguide_metric(g, ez, {0.0, 0.0}, {1.0, 1.0}) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(waveguide_metric(g, ez, {0.0, 0.0}, {0.5, 1.0}) ==
          doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-12));
    ez.pop_back();
    CHECK_THROWS_AS(waveguide_metric(g, ez, {0.0, 0.0}, {1.0, 1.0}), std::length_error);
}

TEST_CASE("writers produce well-formed files") {
    const std::vector<double> data{1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    const std::string vtk = tmpfile("f.vtk");
    write_vtk_scalar(vtk, "ez", data, {3, 2, 1}, {0, 0, 0}, {0.5, 0.5, 1.0});
    std::ifstream fv(vtk);
    std::string line;
    std::getline(fv, line);
    CHECK(line == "# vtk DataFile Version 3.0");
    int lines = 1;
    while (std::getline(fv, line)) ++lines;
    CHECK(lines == 10 + 6);

    const std::string raw = tmpfile("f.raw");
    write_raw_scalar(raw, "ez", data, {3, 2, 1}, {0, 0, 0}, {0.5, 0.5, 1.0});
    std::ifstream fr(raw, std::ios::binary | std::ios::ate);
    CHECK(fr.tellg() == std::streampos(6 * sizeof(double)));
    std::ifstream fs(raw + ".txt");
    std::getline(fs, line);
    CHECK(line == "field ez");

    CHECK_THROWS_AS(write_vtk_scalar(vtk, "ez", data, {4, 2, 1}, {0, 0, 0}, {1, 1, 1}),
                    std::length_error);

    SolveReport rep;
    rep.method = "cg";
    rep.converged = true;
    rep.residual_history = {0.5, 0.1, 0.01};
    rep.wave_solves = 4;
    const std::string csv = tmpfile("res.csv");
    write_residual_csv(csv, rep);
    std::ifstream fc(csv);
    lines = 0;
    while (std::getline(fc, line)) ++lines;
    CHECK(lines == 4);

    CHECK_THROWS_AS(write_table_csv(tmpfile("t.csv"), {"a", "b"}, {{1.0}}),
                    std::length_error);

    std::remove(vtk.c_str());
    std::remove(raw.c_str());
    std::remove((raw + ".txt").c_str());
    std::remove(csv.c_str());
}

TEST_CASE("end-to-end determinism: identical runs produce identical states") {
    const RunConfig cfg = parse_run_config(kBasic);
    auto solve_once = [&]() {
        auto problem = build_problem(cfg);
        const auto& p = std::get<Problem2D>(problem);
        WaveHoltzOperator op(p);
        KrylovOptions opts;
        opts.tol = 1e-9;
        opts.max_iters = 300;
        return cg_solve(op, opts).nu;
    };
    const auto a = solve_once();
    const auto b = solve_once();
    CHECK(a == b);  // bitwise
}
