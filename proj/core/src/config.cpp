#include "emwh/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emwh/manufactured.hpp"
#include "json.hpp"

namespace emwh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config: " + key + ": " + what);
}

template <class T>
T get_or(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(key, e.what());
    }
}

template <class T, std::size_t N>
std::array<T, N> get_array(const json& j, const std::string& key, std::array<T, N> fallback,
                           int needed) {
    if (!j.contains(key)) return fallback;
    const auto& a = j.at(key);
    if (!a.is_array() || static_cast<int>(a.size()) < needed)
        fail(key, "expected an array of length " + std::to_string(needed));
    std::array<T, N> out = fallback;
    for (std::size_t i = 0; i < std::min<std::size_t>(N, a.size()); ++i)
        out[i] = a[i].get<T>();
    return out;
}

Condition parse_condition(const std::string& s, const std::string& key) {
    if (s == "pec") return Condition::Pec;
    if (s == "mur1") return Condition::Mur1;
    if (s == "dirichlet") return Condition::Dirichlet;
    fail(key, "unknown boundary condition '" + s + "' (pec | mur1 | dirichlet)");
}

Region parse_region(const json& j, const std::string& key) {
    const std::string shape = get_or<std::string>(j, "shape", "box");
    if (shape == "box")
        return Region::box(get_array<double, 3>(j, "lo", {0, 0, 0}, 2),
                           get_array<double, 3>(j, "hi", {0, 0, 0}, 2));
    if (shape == "circle" || shape == "sphere")
        return Region::circle(get_array<double, 3>(j, "center", {0, 0, 0}, 2),
                              get_or<double>(j, "radius", 0.0));
    fail(key + ".shape", "unknown shape '" + shape + "'");
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::Pec: return "pec";
        case Condition::Mur1: return "mur1";
        default: return "dirichlet";
    }
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }

    RunConfig cfg;
    cfg.dim = get_or<int>(j, "dim", 2);
    if (cfg.dim != 2 && cfg.dim != 3) fail("dim", "must be 2 or 3");

    if (j.contains("domain")) {
        const auto& d = j.at("domain");
        cfg.lo = get_array<double, 3>(d, "lo", cfg.lo, cfg.dim);
        cfg.hi = get_array<double, 3>(d, "hi", cfg.hi, cfg.dim);
        cfg.cells = get_array<int, 3>(d, "cells", cfg.cells, 0);
        cfg.points_per_omega = get_or<int>(d, "points_per_omega", 0);
    }
    if (!j.contains("frequencies") || !j.at("frequencies").is_array() ||
        j.at("frequencies").empty())
        fail("frequencies", "a non-empty array of positive frequencies is required");
    for (const auto& w : j.at("frequencies")) {
        if (!w.is_number() || !(w.get<double>() > 0.0))
            fail("frequencies", "entries must be positive numbers");
        cfg.frequencies.push_back(w.get<double>());
    }

    cfg.periods = get_or<int>(j, "periods", 10);
    if (cfg.periods < 1) fail("periods", "must be a positive integer");

    const std::string forcing = get_or<std::string>(j, "forcing", "sin");
    if (forcing == "sin")
        cfg.forcing = Forcing::Sin;
    else if (forcing == "cos")
        cfg.forcing = Forcing::Cos;
    else
        fail("forcing", "must be 'sin' or 'cos'");

    const std::string quad = get_or<std::string>(j, "quadrature", "trapezoid");
    if (quad == "trapezoid")
        cfg.quadrature = Quadrature::Trapezoid;
    else if (quad == "trapezoid-modified")
        cfg.quadrature = Quadrature::TrapezoidModified;
    else
        fail("quadrature", "must be 'trapezoid' or 'trapezoid-modified'");

    std::string profile = get_or<std::string>(
        j, "source_profile",
        cfg.quadrature == Quadrature::TrapezoidModified ? "recursive-modified" : "recursive");
    if (cfg.forcing == Forcing::Cos) {
        cfg.profile = SourceTime::CosExact;
    } else if (profile == "recursive") {
        cfg.profile = SourceTime::SinRecursive;
    } else if (profile == "recursive-modified") {
        cfg.profile = SourceTime::SinRecursiveModified;
    } else if (profile == "exact") {
        cfg.profile = SourceTime::SinExact;
    } else {
        fail("source_profile", "must be 'recursive', 'recursive-modified' or 'exact'");
    }

    if (j.contains("boundaries")) {
        const auto& b = j.at("boundaries");
        if (b.contains("all"))
            cfg.boundary =
                BoundarySpec::all(parse_condition(b.at("all").get<std::string>(), "boundaries.all"));
        const std::array<std::string, 6> names{"x_lo", "x_hi", "y_lo", "y_hi", "z_lo", "z_hi"};
        for (int f = 0; f < 6; ++f)
            if (b.contains(names[f]))
                cfg.boundary.set(static_cast<Face>(f),
                                 parse_condition(b.at(names[f]).get<std::string>(),
                                                 "boundaries." + names[f]));
    }

    if (j.contains("dirichlet")) {
        const auto& d = j.at("dirichlet");
        const std::string type = get_or<std::string>(d, "type", "affine");
        if (type != "affine") fail("dirichlet.type", "only 'affine' data is available");
        cfg.dirichlet_affine = true;
        cfg.dirichlet_modified = get_or<bool>(d, "modified", false);
    }

    if (j.contains("materials")) {
        const auto& m = j.at("materials");
        cfg.material.eps = get_or<double>(m, "eps", 1.0);
        cfg.material.mu = get_or<double>(m, "mu", 1.0);
        if (m.contains("regions"))
            for (const auto& r : m.at("regions")) {
                MaterialRegion mr;
                mr.region = parse_region(r, "materials.regions");
                mr.eps = get_or<double>(r, "eps", cfg.material.eps);
                mr.mu = get_or<double>(r, "mu", cfg.material.mu);
                cfg.material.regions.push_back(mr);
            }
    }
    if (j.contains("pec_regions"))
        for (const auto& r : j.at("pec_regions"))
            cfg.pec_regions.push_back(parse_region(r, "pec_regions"));

    if (j.contains("sources"))
        for (const auto& s : j.at("sources")) {
            SourceConfig sc;
            sc.type = get_or<std::string>(s, "type", "gaussian");
            sc.center = get_array<double, 3>(s, "center", sc.center, 0);
            sc.sigma = get_or<double>(s, "sigma", sc.sigma);
            sc.amplitude = get_or<double>(s, "amplitude", sc.amplitude);
            sc.scale_by_omega = get_or<bool>(s, "scale_by_omega", true);
            sc.component = get_or<std::string>(s, "component", "ez");
            sc.omega_index = get_or<int>(s, "omega_index", 0);
            if (sc.omega_index < 0 ||
                sc.omega_index >= static_cast<int>(cfg.frequencies.size()))
                fail("sources.omega_index", "out of range");
            if (sc.type != "gaussian" && sc.type != "point" &&
                sc.type != "manufactured-poly" && sc.type != "manufactured-affine")
                fail("sources.type", "unknown source type '" + sc.type + "'");
            cfg.sources.push_back(sc);
        }
    if (cfg.sources.empty() && !cfg.dirichlet_affine)
        fail("sources", "at least one source (or dirichlet data) is required");

    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        cfg.method = get_or<std::string>(s, "method", "auto");
        if (cfg.method != "auto" && cfg.method != "cg" && cfg.method != "gmres" &&
            cfg.method != "fixed-point")
            fail("solver.method", "must be auto | cg | gmres | fixed-point");
        cfg.tol = get_or<double>(s, "tol", cfg.tol);
        cfg.max_iters = get_or<int>(s, "max_iters", cfg.max_iters);
        cfg.restart = get_or<int>(s, "restart", cfg.restart);
        cfg.cfl_safety = get_or<double>(s, "cfl_safety", cfg.cfl_safety);
        if (!(cfg.tol > 0.0)) fail("solver.tol", "must be positive");
        if (cfg.max_iters < 1) fail("solver.max_iters", "must be positive");
        if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0)
            fail("solver.cfl_safety", "must lie in (0, 1]");
    }

    if (j.contains("output")) {
        const auto& o = j.at("output");
        cfg.output_prefix = get_or<std::string>(o, "prefix", "");
        cfg.output_vtk = get_or<bool>(o, "vtk", false);
        cfg.output_residuals = get_or<bool>(o, "residuals", true);
    }

    if (cfg.points_per_omega <= 0) {
        for (int a = 0; a < cfg.dim; ++a)
            if (cfg.cells[a] < 2) fail("domain.cells", "need at least 2 cells per axis");
    }

    // Commensurability is part of validation, before any compute starts.
    FilterSpec fs;
    fs.omegas = cfg.frequencies;
    fs.periods = cfg.periods;
    fs.quadrature = cfg.quadrature;
    fs.forcing = cfg.forcing;
    try {
        fs.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("config: frequencies: ") + e.what());
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("config: cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_run_config(ss.str());
}

namespace {

std::array<int, 3> resolve_cells(const RunConfig& cfg) {
    if (cfg.points_per_omega <= 0) return cfg.cells;
    double wmax = 0.0;
    for (double w : cfg.frequencies) wmax = std::max(wmax, w);
    const double per_unit = cfg.points_per_omega * std::ceil(wmax);
    std::array<int, 3> cells{1, 1, 1};
    for (int a = 0; a < cfg.dim; ++a)
        cells[a] = std::max(2, static_cast<int>(std::lround(per_unit * (cfg.hi[a] - cfg.lo[a]))));
    return cells;
}

FilterSpec make_filter(const RunConfig& cfg) {
    FilterSpec fs;
    fs.omegas = cfg.frequencies;
    fs.periods = cfg.periods;
    fs.quadrature = cfg.quadrature;
    fs.forcing = cfg.forcing;
    fs.mode = infer_state_mode(cfg.boundary, cfg.forcing, cfg.dim);
    return fs;
}

}  // namespace

std::variant<Problem2D, Problem3D> build_problem(const RunConfig& cfg) {
    Domain d;
    d.dim = cfg.dim;
    d.lo = cfg.lo;
    d.hi = cfg.hi;
    d.cells = resolve_cells(cfg);

    if (cfg.dim == 2) {
        Problem2D p;
        p.grid = build_grid_2d(d, cfg.material, cfg.pec_regions, cfg.boundary);
        p.boundary = cfg.boundary;
        p.filter = make_filter(cfg);
        p.time = make_problem_time_grid(p.grid, p.filter, cfg.cfl_safety);

        for (const auto& s : cfg.sources) {
            SourceTerm2D term;
            term.omega = cfg.frequencies[s.omega_index];
            term.time = cfg.profile;
            term.jz.assign(p.grid.n_ez(), 0.0);
            const double amp = s.amplitude * (s.scale_by_omega ? term.omega : 1.0);
            if (s.type == "point") {
                const int i = static_cast<int>(
                    std::lround((s.center[0] - cfg.lo[0]) / p.grid.dx));
                const int jj = static_cast<int>(
                    std::lround((s.center[1] - cfg.lo[1]) / p.grid.dy));
                term.jz[p.grid.iez(i, jj)] = amp / (p.grid.dx * p.grid.dy);
            } else {
                for (int jj = 0; jj <= p.grid.ny; ++jj)
                    for (int i = 0; i <= p.grid.nx; ++i) {
                        const double x = p.grid.x(i), y = p.grid.y(jj);
                        double v = 0.0;
                        if (s.type == "gaussian") {
                            const double r2 = (x - s.center[0]) * (x - s.center[0]) +
                                              (y - s.center[1]) * (y - s.center[1]);
                            v = amp * std::exp(-s.sigma * r2);
                        } else if (s.type == "manufactured-poly") {
                            v = s.amplitude * manufactured_poly_current(term.omega, x, y);
                        } else {
                            v = s.amplitude * manufactured_affine_current(term.omega, x, y);
                        }
                        term.jz[p.grid.iez(i, jj)] = v;
                    }
            }
            p.source.terms.push_back(std::move(term));
        }

        if (cfg.dirichlet_affine) {
            DirichletData2D d2;
            d2.omega = cfg.frequencies[0];
            d2.modified = cfg.dirichlet_modified;
            d2.values.assign(p.grid.n_ez(), 0.0);
            for (int jj = 0; jj <= p.grid.ny; ++jj)
                for (int i = 0; i <= p.grid.nx; ++i)
                    d2.values[p.grid.iez(i, jj)] =
                        manufactured_affine(p.grid.x(i), p.grid.y(jj));
            p.source.dirichlet = std::move(d2);
        }
        p.validate();
        return p;
    }

    Problem3D p;
    p.grid = build_grid_3d(d, cfg.material, cfg.pec_regions, cfg.boundary);
    p.boundary = cfg.boundary;
    p.filter = make_filter(cfg);
    p.time = make_problem_time_grid(p.grid, p.filter, cfg.cfl_safety);

    for (const auto& s : cfg.sources) {
        if (s.type != "gaussian" && s.type != "point")
            throw std::invalid_argument("config: sources.type: '" + s.type + "' is 2D only");
        SourceTerm3D term;
        term.omega = cfg.frequencies[s.omega_index];
        term.time = cfg.profile;
        const double amp = s.amplitude * (s.scale_by_omega ? term.omega : 1.0);
        auto fill = [&](std::vector<double>& field, int n0, int n1, int n2, double ox,
                        double oy, double oz, auto idx) {
            field.assign(static_cast<std::size_t>(n0) * n1 * n2, 0.0);
            for (int k = 0; k < n2; ++k)
                for (int jj = 0; jj < n1; ++jj)
                    for (int i = 0; i < n0; ++i) {
                        const double x = p.grid.x(i + ox), y = p.grid.y(jj + oy),
                                     z = p.grid.z(k + oz);
                        const double r2 = (x - s.center[0]) * (x - s.center[0]) +
                                          (y - s.center[1]) * (y - s.center[1]) +
                                          (z - s.center[2]) * (z - s.center[2]);
                        field[idx(i, jj, k)] = amp * std::exp(-s.sigma * r2);
                    }
        };
        const Grid3D& g = p.grid;
        if (s.component == "ex")
            fill(term.jx, g.nex_x(), g.nex_y(), g.nex_z(), 0.5, 0, 0,
                 [&](int i, int jj, int k) { return g.iex(i, jj, k); });
        else if (s.component == "ey")
            fill(term.jy, g.ney_x(), g.ney_y(), g.ney_z(), 0, 0.5, 0,
                 [&](int i, int jj, int k) { return g.iey(i, jj, k); });
        else if (s.component == "ez")
            fill(term.jz, g.nez_x(), g.nez_y(), g.nez_z(), 0, 0, 0.5,
                 [&](int i, int jj, int k) { return g.iez(i, jj, k); });
        else
            throw std::invalid_argument("config: sources.component: must be ex | ey | ez");
        p.source.terms.push_back(std::move(term));
    }
    p.validate();
    return p;
}

std::string config_snapshot(const RunConfig& cfg) {
    json j;
    j["dim"] = cfg.dim;
    j["domain"]["lo"] = std::vector<double>(cfg.lo.begin(), cfg.lo.begin() + cfg.dim);
    j["domain"]["hi"] = std::vector<double>(cfg.hi.begin(), cfg.hi.begin() + cfg.dim);
    const auto cells = resolve_cells(cfg);
    j["domain"]["cells"] = std::vector<int>(cells.begin(), cells.begin() + cfg.dim);
    j["frequencies"] = cfg.frequencies;
    j["periods"] = cfg.periods;
    j["forcing"] = cfg.forcing == Forcing::Sin ? "sin" : "cos";
    j["quadrature"] =
        cfg.quadrature == Quadrature::Trapezoid ? "trapezoid" : "trapezoid-modified";
    for (int f = 0; f < (cfg.dim == 2 ? 4 : 6); ++f)
        j["boundaries"][std::array<const char*, 6>{"x_lo", "x_hi", "y_lo", "y_hi", "z_lo",
                                                   "z_hi"}[f]] =
            condition_name(cfg.boundary.faces[f]);
    j["solver"]["method"] = cfg.method;
    j["solver"]["tol"] = cfg.tol;
    j["solver"]["max_iters"] = cfg.max_iters;
    j["solver"]["restart"] = cfg.restart;
    j["solver"]["cfl_safety"] = cfg.cfl_safety;

    FilterSpec fs = make_filter(cfg);
    j["derived"]["window"] = fs.window();
    j["derived"]["state_mode"] =
        fs.mode == StateMode::EnergyConserving ? "energy-conserving" : "full";
    return j.dump(2);
}

SolveReport run_solver(const WaveHoltzOperator& op, const RunConfig& cfg) {
    KrylovOptions opts;
    opts.tol = cfg.tol;
    opts.max_iters = cfg.max_iters;
    opts.restart = cfg.restart;
    if (cfg.method == "cg") return cg_solve(op, opts);
    if (cfg.method == "gmres") return gmres_solve(op, opts);
    if (cfg.method == "fixed-point") return fixed_point_solve(op, opts);
    return waveholtz_solve(op, opts);
}

double waveguide_metric(const Grid2D& g, const std::vector<double>& ez,
                        std::array<double, 2> lo, std::array<double, 2> hi) {
    if (ez.size() != g.n_ez())
        throw std::length_error("waveguide_metric: field length mismatch");
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double xc = g.x(i + 0.5), yc = g.y(j + 0.5);
            if (xc < lo[0] || xc > hi[0] || yc < lo[1] || yc > hi[1]) continue;
            const double v = 0.25 * (ez[g.iez(i, j)] + ez[g.iez(i + 1, j)] +
                                     ez[g.iez(i, j + 1)] + ez[g.iez(i + 1, j + 1)]);
            s += v * v * g.dx * g.dy;
        }
    return std::sqrt(s);
}

}  // namespace emwh
