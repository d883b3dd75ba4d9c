// Command-line driver: frequency-domain Maxwell solves via filtered
// time-domain evolution. Verbs: run, sweep, multifreq, verify, convergence.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "emwh/analysis.hpp"
#include "emwh/config.hpp"
#include "emwh/io.hpp"
#include "emwh/krylov.hpp"
#include "emwh/manufactured.hpp"
#include "emwh/multifreq.hpp"
#include "emwh/recover.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_prefix;
    std::optional<double> tol;
    std::optional<int> max_iters;
    std::optional<int> periods;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration")->required();
    cmd->add_option("--out", o.out_prefix, "output file prefix (overrides config)");
    cmd->add_option("--tol", o.tol, "relative residual target");
    cmd->add_option("--max-iters", o.max_iters, "iteration cap");
    cmd->add_option("--periods", o.periods, "filter window length in periods");
}

emwh::RunConfig load(const CommonOpts& o) {
    emwh::RunConfig cfg = emwh::load_run_config(o.config_path);
    if (!o.out_prefix.empty()) cfg.output_prefix = o.out_prefix;
    if (o.tol) cfg.tol = *o.tol;
    if (o.max_iters) cfg.max_iters = *o.max_iters;
    if (o.periods) cfg.periods = *o.periods;
    return cfg;
}

void write_outputs(const emwh::RunConfig& cfg, const emwh::Problem2D& p,
                   const emwh::SolveReport& rep) {
    if (cfg.output_prefix.empty()) return;
    if (cfg.output_residuals)
        emwh::write_residual_csv(cfg.output_prefix + "_residuals.csv", rep);
    {
        std::ofstream f(cfg.output_prefix + "_config.json");
        f << emwh::config_snapshot(cfg) << '\n';
    }
    const auto ez = emwh::ez_field(p.grid, rep.nu, p.filter.mode);
    const std::array<int, 3> n{p.grid.nx + 1, p.grid.ny + 1, 1};
    const std::array<double, 3> origin{p.grid.domain.lo[0], p.grid.domain.lo[1], 0.0};
    const std::array<double, 3> spacing{p.grid.dx, p.grid.dy, 1.0};
    emwh::write_raw_scalar(cfg.output_prefix + "_ez_im.raw", "ez_im", ez, n, origin, spacing);
    if (cfg.output_vtk)
        emwh::write_vtk_scalar(cfg.output_prefix + "_ez_im.vtk", "ez_im", ez, n, origin,
                               spacing);
}

void print_report(const emwh::SolveReport& rep) {
    std::cout << "method " << rep.method << ", iterations " << rep.iterations
              << ", wave solves " << rep.wave_solves << ", residual "
              << (rep.residual_history.empty() ? 0.0 : rep.residual_history.back())
              << ", true residual " << rep.true_residual << ", wall "
              << rep.wall_seconds << " s\n";
}

int cmd_run(const CommonOpts& o) {
    const emwh::RunConfig cfg = load(o);
    auto problem = emwh::build_problem(cfg);
    emwh::SolveReport rep;
    if (std::holds_alternative<emwh::Problem2D>(problem)) {
        const auto& p = std::get<emwh::Problem2D>(problem);
        emwh::WaveHoltzOperator op(p);
        rep = emwh::run_solver(op, cfg);
        print_report(rep);
        if (rep.converged) write_outputs(cfg, p, rep);
    } else {
        const auto& p = std::get<emwh::Problem3D>(problem);
        emwh::WaveHoltzOperator op(p);
        rep = emwh::run_solver(op, cfg);
        print_report(rep);
        if (!cfg.output_prefix.empty() && cfg.output_residuals)
            emwh::write_residual_csv(cfg.output_prefix + "_residuals.csv", rep);
    }
    return rep.converged ? 0 : 3;
}

int cmd_sweep(const CommonOpts& o, const std::vector<double>& omegas, int threads) {
    const emwh::RunConfig base = load(o);
    if (omegas.empty())
        throw std::invalid_argument("sweep: provide at least one frequency via --omegas");

    struct Row {
        double omega = 0.0;
        int iterations = 0;
        long wave_solves = 0;
        bool ok = false;
        std::string error;
    };
    std::vector<Row> rows(omegas.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= omegas.size()) return;
            Row& row = rows[i];
            row.omega = omegas[i];
            try {
                emwh::RunConfig cfg = base;
                cfg.frequencies = {omegas[i]};
                auto problem = emwh::build_problem(cfg);
                auto solve = [&](const auto& p) {
                    emwh::WaveHoltzOperator op(p);
                    return emwh::run_solver(op, cfg);
                };
                const emwh::SolveReport rep = std::visit(solve, problem);
                row.iterations = rep.iterations;
                row.wave_solves = rep.wave_solves;
                row.ok = rep.converged;
                if (!rep.converged) row.error = "did not converge";
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::max(1, threads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<double> fit_w, fit_it;
    bool all_ok = true;
    for (const auto& r : rows) {
        std::cout << "omega " << r.omega;
        if (r.ok) {
            std::cout << ": iterations " << r.iterations << ", wave solves "
                      << r.wave_solves << '\n';
            fit_w.push_back(r.omega);
            fit_it.push_back(static_cast<double>(r.iterations));
        } else {
            std::cout << ": FAILED (" << r.error << ")\n";
            all_ok = false;
        }
    }
    if (fit_w.size() >= 2) {
        const double p = emwh::fit_order(fit_w, fit_it);
        std::cout << "iteration growth exponent " << p << '\n';
    }
    if (!base.output_prefix.empty()) {
        std::vector<std::vector<double>> table;
        for (const auto& r : rows)
            table.push_back({r.omega, double(r.iterations), double(r.wave_solves),
                             r.ok ? 1.0 : 0.0});
        emwh::write_table_csv(base.output_prefix + "_sweep.csv",
                              {"omega", "iterations", "wave_solves", "converged"}, table);
    }
    return all_ok ? 0 : 3;
}

int cmd_multifreq(const CommonOpts& o) {
    const emwh::RunConfig cfg = load(o);
    auto problem = emwh::build_problem(cfg);
    if (!std::holds_alternative<emwh::Problem2D>(problem))
        throw std::invalid_argument("multifreq: only the 2D model is supported");
    const auto& p = std::get<emwh::Problem2D>(problem);
    emwh::KrylovOptions opts{cfg.tol, cfg.max_iters, cfg.restart};
    const emwh::MultiFrequencyResult res = emwh::solve_multi_frequency(p, opts);
    print_report(res.report);
    const std::array<int, 3> n{p.grid.nx + 1, p.grid.ny + 1, 1};
    const std::array<double, 3> origin{p.grid.domain.lo[0], p.grid.domain.lo[1], 0.0};
    const std::array<double, 3> spacing{p.grid.dx, p.grid.dy, 1.0};
    for (const auto& s : res.solutions) {
        std::cout << "omega " << s.omega << ": |im|_max "
                  << *std::max_element(s.im.begin(), s.im.end(),
                                       [](double a, double b) {
                                           return std::abs(a) < std::abs(b);
                                       })
                  << '\n';
        if (!cfg.output_prefix.empty()) {
            char wtag[32];
            std::snprintf(wtag, sizeof(wtag), "_w%g", s.omega);
            const std::string tag = cfg.output_prefix + wtag;
            emwh::write_raw_scalar(tag + "_im.raw", "ez_im", s.im, n, origin, spacing);
            emwh::write_raw_scalar(tag + "_re.raw", "ez_re", s.re, n, origin, spacing);
        }
    }
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    const emwh::RunConfig cfg = load(o);
    auto problem = emwh::build_problem(cfg);
    if (!std::holds_alternative<emwh::Problem2D>(problem))
        throw std::invalid_argument("verify: only the 2D model is supported");
    const auto& p = std::get<emwh::Problem2D>(problem);
    emwh::WaveHoltzOperator op(p);
    const Eigen::MatrixXd A = emwh::assemble_dense(op, 20000);
    const emwh::SpectrumReport rep = emwh::spectrum_report(A);
    std::cout << "dofs " << op.size() << "\nsymmetry deviation " << rep.symmetry_deviation
              << (rep.symmetric ? " (symmetric)" : " (nonsymmetric)") << "\neigenvalues in ["
              << rep.min_eigenvalue << ", " << rep.max_eigenvalue << "]\ncondition "
              << rep.condition << '\n';
    if (!cfg.output_prefix.empty()) {
        std::vector<std::vector<double>> table;
        for (double e : rep.eigenvalues) table.push_back({e});
        emwh::write_table_csv(cfg.output_prefix + "_eigenvalues.csv", {"eigenvalue"}, table);
    }
    return rep.min_eigenvalue > 0.0 ? 0 : 3;
}

int cmd_convergence(const CommonOpts& o, std::vector<int> resolutions) {
    emwh::RunConfig base = load(o);
    if (resolutions.empty()) resolutions = {20, 40, 80};
    const double omega = base.frequencies.at(0);
    // The study always runs against the built-in polynomial solution, so the
    // configured sources are replaced with its forcing.
    base.sources.clear();
    emwh::SourceConfig src;
    src.type = "manufactured-poly";
    src.scale_by_omega = false;
    base.sources.push_back(src);
    std::vector<double> hs, errs;
    for (int ncells : resolutions) {
        emwh::RunConfig cfg = base;
        cfg.points_per_omega = 0;
        cfg.cells = {ncells, ncells, ncells};
        auto problem = emwh::build_problem(cfg);
        if (!std::holds_alternative<emwh::Problem2D>(problem))
            throw std::invalid_argument("convergence: only the 2D model is supported");
        const auto& p = std::get<emwh::Problem2D>(problem);
        emwh::WaveHoltzOperator op(p);
        const emwh::SolveReport rep = emwh::run_solver(op, cfg);
        if (!rep.converged) {
            std::cout << "cells " << ncells << ": did not converge\n";
            return 3;
        }
        const auto ez = emwh::ez_field(p.grid, rep.nu, p.filter.mode);
        double err = 0.0;
        for (int j = 0; j <= p.grid.ny; ++j)
            for (int i = 0; i <= p.grid.nx; ++i)
                err = std::max(err, std::abs(ez[p.grid.iez(i, j)] -
                                             emwh::manufactured_poly(p.grid.x(i),
                                                                     p.grid.y(j))));
        hs.push_back(p.grid.dx);
        errs.push_back(err);
        std::cout << "cells " << ncells << ": max error " << err << " (omega " << omega
                  << ")\n";
    }
    const double order = emwh::fit_order(hs, errs);
    std::cout << "fitted order " << order << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-filtered frequency-domain Maxwell solver"};
    app.require_subcommand(1);

    CommonOpts run_o, sweep_o, multi_o, verify_o, conv_o;
    std::vector<double> sweep_omegas;
    int sweep_threads = 1;
    std::vector<int> conv_res;

    add_common(app.add_subcommand("run", "solve one configuration"), run_o);
    auto* sweep = app.add_subcommand("sweep", "solve a range of frequencies");
    add_common(sweep, sweep_o);
    sweep->add_option("--omegas", sweep_omegas, "frequencies to sweep")
        ->required()
        ->delimiter(',');
    sweep->add_option("--threads", sweep_threads, "worker threads");
    add_common(app.add_subcommand("multifreq", "combined multi-frequency solve"), multi_o);
    add_common(app.add_subcommand("verify", "dense operator check (small grids)"), verify_o);
    auto* conv = app.add_subcommand("convergence", "manufactured-solution study");
    add_common(conv, conv_o);
    conv->add_option("--resolutions", conv_res, "cell counts per axis");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("run")) return cmd_run(run_o);
        if (app.got_subcommand("sweep")) return cmd_sweep(sweep_o, sweep_omegas, sweep_threads);
        if (app.got_subcommand("multifreq")) return cmd_multifreq(multi_o);
        if (app.got_subcommand("verify")) return cmd_verify(verify_o);
        if (app.got_subcommand("convergence")) return cmd_convergence(conv_o, conv_res);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
