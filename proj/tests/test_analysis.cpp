#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "emwh/analysis.hpp"
#include "emwh/krylov.hpp"

using namespace emwh;

namespace {

Problem2D pec_problem(int n, double omega, std::vector<double> jz = {}) {
    Domain d;
    d.dim = 2;
    d.lo = {0.0, 0.0, 0.0};
    d.hi = {1.0, 1.0, 0.0};
    d.cells = {n, n, 1};
    Problem2D p;
    p.boundary = BoundarySpec::all(Condition::Pec);
    p.grid = build_grid_2d(d, {}, {}, p.boundary);
    p.filter.omegas = {omega};
    p.filter.periods = 1;
    p.filter.mode = StateMode::EnergyConserving;
    p.time = make_problem_time_grid(p.grid, p.filter);
    SourceTerm2D term;
    term.omega = omega;
    term.time = SourceTime::SinRecursive;
    if (jz.empty()) {
        jz.assign(p.grid.n_ez(), 0.0);
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i) {
                const double x = p.grid.x(i) - 0.4, y = p.grid.y(j) - 0.6;
                jz[p.grid.iez(i, j)] = omega * std::exp(-40.0 * (x * x + y * y));
            }
    }
    term.jz = std::move(jz);
    p.source.terms.push_back(std::move(term));
    return p;
}

}  // namespace

TEST_CASE("log-log slope fit") {
    std::vector<double> h{0.1, 0.05, 0.025, 0.0125};
    std::vector<double> e;
    for (double x : h) e.push_back(3.7 * std::pow(x, 2.37));
    CHECK(fit_order(h, e) == doctest::Approx(2.37).epsilon(1e-10));
    CHECK_THROWS_AS(fit_order({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_order({1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("cavity modes are discrete eigenpairs") {
    const int n = 10;
    Problem2D p = pec_problem(n, 4.5);
    const auto modes = cavity_modes(p.grid, p.time);
    REQUIRE(int(modes.size()) == (n - 1) * (n - 1));

    const double pi = std::numbers::pi;
    const Grid2D& g = p.grid;
    for (const auto& mode : modes) {
        // Apply the Yee double curl to the sine mode directly.
        std::vector<double> ez(g.n_ez(), 0.0), hx(g.n_hx()), hy(g.n_hy());
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i)
                ez[g.iez(i, j)] = std::sin(mode.m * pi * double(i) / n) *
                                  std::sin(mode.n * pi * double(j) / n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= n; ++i)
                hx[g.ihx(i, j)] = -(ez[g.iez(i, j + 1)] - ez[g.iez(i, j)]) / g.dy;
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < n; ++i)
                hy[g.ihy(i, j)] = (ez[g.iez(i + 1, j)] - ez[g.iez(i, j)]) / g.dx;
        for (int j = 1; j < n; ++j)
            for (int i = 1; i < n; ++i) {
                const double curl = (hy[g.ihy(i, j)] - hy[g.ihy(i - 1, j)]) / g.dx -
                                    (hx[g.ihx(i, j)] - hx[g.ihx(i, j - 1)]) / g.dy;
                // The double curl is the negative Laplacian on this mode.
                CHECK(curl == doctest::Approx(-mode.lambda * mode.lambda *
                                              ez[g.iez(i, j)])
                                  .epsilon(1e-10)
                                  .scale(mode.lambda * mode.lambda));
            }
        CHECK(std::sin(mode.lambda_tilde * p.time.dt / 2.0) ==
              doctest::Approx(mode.lambda * p.time.dt / 2.0).epsilon(1e-13));
        CHECK(mode.lambda_tilde >= mode.lambda);
    }

    // Non-uniform material or open boundaries are rejected.
    Problem2D bad = pec_problem(n, 4.5);
    bad.grid.eps[bad.grid.iez(3, 3)] = 2.0;
    CHECK_THROWS_AS(cavity_modes(bad.grid, bad.time), std::invalid_argument);
    Problem2D open = pec_problem(n, 4.5);
    open.grid.kind[open.grid.iez(0, 3)] = NodeKind::Free;
    CHECK_THROWS_AS(cavity_modes(open.grid, open.time), std::invalid_argument);

    CHECK(spectral_gap(modes[0].lambda, modes) == doctest::Approx(0.0).scale(1.0));
    CHECK(spectral_gap(1e6, modes) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("modal transfer functions predict the krylov solution exactly") {
    const int n = 12;
    const double omega = 4.5;
    Problem2D p = pec_problem(n, omega);
    const Grid2D& g = p.grid;
    const TimeGrid& tg = p.time;

    // Exact fixed point of the discrete iteration, mode by mode:
    //   nu = nu_inf (bhat - beta_h(lt)) / (1 - beta_h(lt)),
    // where bhat is the discrete filter response at the drive frequency.
    const auto weights = waveholtz_filter_weights(p.filter, tg);
    const double bhat = beta_discrete(omega, weights, tg);
    const std::vector<double> nu_inf_full = modal_fixed_point(g, tg, omega, p.source.terms[0].jz);

    // Re-expand nu_inf in modes to apply the per-mode correction.
    const double pi = std::numbers::pi;
    std::vector<double> nu_exact(g.n_ez(), 0.0);
    {
        std::vector<std::vector<double>> coef(n - 1, std::vector<double>(n - 1, 0.0));
        for (int m = 1; m < n; ++m)
            for (int q = 1; q < n; ++q) {
                double c = 0.0;
                for (int j = 1; j < n; ++j)
                    for (int i = 1; i < n; ++i)
                        c += nu_inf_full[g.iez(i, j)] * std::sin(m * pi * double(i) / n) *
                             std::sin(q * pi * double(j) / n);
                coef[m - 1][q - 1] = 4.0 * c / (n * n);
            }
        const auto modes = cavity_modes(g, tg);
        for (const auto& mode : modes) {
            const double bh = beta_discrete(mode.lambda_tilde, weights, tg);
            const double factor = (bhat - bh) / (1.0 - bh);
            const double c = coef[mode.m - 1][mode.n - 1] * factor;
            for (int j = 1; j < n; ++j)
                for (int i = 1; i < n; ++i)
                    nu_exact[g.iez(i, j)] += c * std::sin(mode.m * pi * double(i) / n) *
                                             std::sin(mode.n * pi * double(j) / n);
        }
    }

    WaveHoltzOperator op(p);
    KrylovOptions opts;
    opts.tol = 1e-12;
    opts.max_iters = 600;
    const SolveReport rep = cg_solve(op, opts);
    REQUIRE(rep.converged);

    double scale = 0.0;
    for (double x : nu_exact) scale = std::max(scale, std::abs(x));
    std::size_t q = 0;
    for (std::size_t idx = 0; idx < g.n_ez(); ++idx) {
        if (g.kind[idx] != NodeKind::Free) continue;
        CHECK(rep.nu[q] == doctest::Approx(nu_exact[idx]).epsilon(1e-8).scale(scale));
        ++q;
    }
}

TEST_CASE("single-mode iteration contracts at the transfer-function rate") {
    const int n = 14;
    const double omega = 5.5;
    Problem2D p = pec_problem(n, omega);
    const Grid2D& g = p.grid;

    // Source concentrated on one mode.
    const int m = 2, qq = 2;
    const double pi = std::numbers::pi;
    std::vector<double> jz(g.n_ez(), 0.0);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            jz[g.iez(i, j)] = std::sin(m * pi * double(i) / n) *
                              std::sin(qq * pi * double(j) / n);
    p = pec_problem(n, omega, jz);

    const RateCheck rc = fixed_point_rate(p, 25, 4);
    const auto weights = waveholtz_filter_weights(p.filter, p.time);
    const auto modes = cavity_modes(g, p.time);
    double lt = 0.0;
    for (const auto& mode : modes)
        if (mode.m == m && mode.n == qq) lt = mode.lambda_tilde;
    const double expected = std::abs(beta_discrete(lt, weights, p.time));
    CHECK(rc.measured_rate == doctest::Approx(expected).epsilon(1e-4));
    CHECK(rc.delta > 0.0);
    CHECK(rc.bound >= 0.63);
    CHECK(rc.errors.size() == 26);
}

TEST_CASE("spectrum report basics") {
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(3, 3);
    SpectrumReport rep = spectrum_report(I);
    CHECK(rep.symmetric);
    CHECK(rep.min_eigenvalue == doctest::Approx(1.0));
    CHECK(rep.max_eigenvalue == doctest::Approx(1.0));
    CHECK(rep.condition == doctest::Approx(1.0));

    Eigen::MatrixXd A(2, 2);
    A << 2, 1, 0, 3;
    rep = spectrum_report(A);
    CHECK(!rep.symmetric);
    CHECK(rep.min_eigenvalue == doctest::Approx(2.0));
    CHECK(rep.max_eigenvalue == doctest::Approx(3.0));
}
