#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "emwh/analysis.hpp"
#include "emwh/krylov.hpp"
#include "emwh/recover.hpp"
#include "emwh/waveholtz.hpp"

using namespace emwh;

namespace {

Problem2D pec_problem(int n, double omega, int periods = 1) {
    Domain d;
    d.dim = 2;
    d.lo = {0.0, 0.0, 0.0};
    d.hi = {1.0, 1.0, 0.0};
    d.cells = {n, n, 1};
    Problem2D p;
    p.boundary = BoundarySpec::all(Condition::Pec);
    p.grid = build_grid_2d(d, {}, {}, p.boundary);
    p.filter.omegas = {omega};
    p.filter.periods = periods;
    p.filter.mode = StateMode::EnergyConserving;
    p.time = make_problem_time_grid(p.grid, p.filter);
    SourceTerm2D term;
    term.omega = omega;
    term.time = SourceTime::SinRecursive;
    term.jz.assign(p.grid.n_ez(), 0.0);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            const double x = p.grid.x(i) - 0.5, y = p.grid.y(j) - 0.5;
            term.jz[p.grid.iez(i, j)] = omega * std::exp(-36.0 * (x * x + y * y));
        }
    p.source.terms.push_back(std::move(term));
    return p;
}

std::vector<double> random_vec(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

double nrm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("state mode inference") {
    BoundarySpec pec = BoundarySpec::all(Condition::Pec);
    CHECK(infer_state_mode(pec, Forcing::Sin, 2) == StateMode::EnergyConserving);
    CHECK(infer_state_mode(pec, Forcing::Cos, 2) == StateMode::Full);
    BoundarySpec dir = pec;
    dir.set(Face::XLo, Condition::Dirichlet);
    CHECK(infer_state_mode(dir, Forcing::Sin, 2) == StateMode::EnergyConserving);
    BoundarySpec mur = pec;
    mur.set(Face::YHi, Condition::Mur1);
    CHECK(infer_state_mode(mur, Forcing::Sin, 2) == StateMode::Full);
    // A z-face condition is irrelevant in 2D.
    BoundarySpec zmur = pec;
    zmur.set(Face::ZLo, Condition::Mur1);
    CHECK(infer_state_mode(zmur, Forcing::Sin, 2) == StateMode::EnergyConserving);
    CHECK(infer_state_mode(zmur, Forcing::Sin, 3) == StateMode::Full);
}

TEST_CASE("rhs is cached bit-identically and the map is affine") {
    WaveHoltzOperator op(pec_problem(10, 5.5));
    const std::vector<double> b1 = op.rhs();
    const std::vector<double> b2 = op.rhs();
    CHECK(b1 == b2);
    // Recomputing from scratch is deterministic too.
    CHECK(op.apply_pi(std::vector<double>(op.size(), 0.0)) == b1);

    const auto x = random_vec(op.size(), 1);
    const auto y = random_vec(op.size(), 2);
    std::vector<double> xy(op.size());
    for (std::size_t i = 0; i < xy.size(); ++i) xy[i] = x[i] + y[i];
    const auto sx = op.apply_pi(x);
    const auto sy = op.apply_pi(y);
    const auto sxy = op.apply_pi(xy);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < xy.size(); ++i) {
        err = std::max(err, std::abs(sxy[i] - (sx[i] + sy[i] - b1[i])));
        scale = std::max(scale, std::abs(sxy[i]));
    }
    CHECK(err < 1e-12 * std::max(1.0, scale));
}

TEST_CASE("closed problem: operator is symmetric positive definite on samples") {
    WaveHoltzOperator op(pec_problem(9, 4.5));
    REQUIRE(op.symmetric_positive_definite());
    for (unsigned s = 0; s < 4; ++s) {
        const auto x = random_vec(op.size(), 10 + s);
        const auto y = random_vec(op.size(), 20 + s);
        const auto Ax = op.apply_i_minus_s(x);
        const auto Ay = op.apply_i_minus_s(y);
        double xAy = 0.0, yAx = 0.0, xAx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            xAy += x[i] * Ay[i];
            yAx += y[i] * Ax[i];
            xAx += x[i] * Ax[i];
        }
        CHECK(xAy == doctest::Approx(yAx).epsilon(1e-10));
        CHECK(xAx > 0.0);
    }
}

TEST_CASE("krylov kernels on explicit matrices") {
    // Nonsymmetric 4x4 system for gmres.
    Eigen::MatrixXd A(4, 4);
    A << 4, 1, 0, 2, 0, 3, 1, 0, 1, 0, 5, 1, 0, 2, 0, 6;
    Eigen::VectorXd b(4);
    b << 1, -2, 3, 0.5;
    LinearOperator op = [&](const std::vector<double>& v) {
        Eigen::Map<const Eigen::VectorXd> x(v.data(), 4);
        Eigen::VectorXd y = A * x;
        return std::vector<double>(y.data(), y.data() + 4);
    };
    KrylovOptions opts;
    opts.tol = 1e-12;
    const SolveReport rep = gmres(op, {1, -2, 3, 0.5}, opts);
    CHECK(rep.converged);
    const Eigen::VectorXd exact = A.fullPivLu().solve(b);
    for (int i = 0; i < 4; ++i)
        CHECK(rep.nu[i] == doctest::Approx(exact[i]).epsilon(1e-10));
    CHECK(rep.true_residual < 1e-11);

    // cg on an spd matrix agrees; on an indefinite one it must refuse.
    Eigen::MatrixXd S = A * A.transpose();
    LinearOperator sop = [&](const std::vector<double>& v) {
        Eigen::Map<const Eigen::VectorXd> x(v.data(), 4);
        Eigen::VectorXd y = S * x;
        return std::vector<double>(y.data(), y.data() + 4);
    };
    const SolveReport crep = cg(sop, {1, -2, 3, 0.5}, opts);
    CHECK(crep.converged);
    const Eigen::VectorXd cexact = S.ldlt().solve(b);
    for (int i = 0; i < 4; ++i)
        CHECK(crep.nu[i] == doctest::Approx(cexact[i]).epsilon(1e-9));

    LinearOperator neg = [](const std::vector<double>& v) {
        std::vector<double> y(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) y[i] = -v[i];
        return y;
    };
    CHECK_THROWS_AS(cg(neg, {1, 1, 1, 1}, opts), std::runtime_error);
}

TEST_CASE("cg solution is the fixed point of the filtered evolution") {
    Problem2D p = pec_problem(12, 5.5);
    WaveHoltzOperator op(p);
    KrylovOptions opts;
    opts.tol = 1e-11;
    opts.max_iters = 400;
    const SolveReport rep = cg_solve(op, opts);
    REQUIRE(rep.converged);
    CHECK(rep.true_residual < 1e-10);

    const auto pi_nu = op.apply_pi(rep.nu);
    double diff = 0.0;
    for (std::size_t i = 0; i < pi_nu.size(); ++i)
        diff = std::max(diff, std::abs(pi_nu[i] - rep.nu[i]));
    CHECK(diff < 1e-9 * std::max(1.0, nrm(rep.nu)));

    // gmres and plain fixed-point agree with cg on this contractive problem.
    const SolveReport grep = gmres_solve(op, opts);
    REQUIRE(grep.converged);
    KrylovOptions fopts = opts;
    fopts.tol = 1e-10;
    fopts.max_iters = 2000;
    const SolveReport frep = fixed_point_solve(op, fopts);
    REQUIRE(frep.converged);
    for (std::size_t i = 0; i < rep.nu.size(); ++i) {
        CHECK(grep.nu[i] == doctest::Approx(rep.nu[i]).epsilon(1e-7).scale(1.0));
        CHECK(frep.nu[i] == doctest::Approx(rep.nu[i]).epsilon(1e-6).scale(1.0));
    }
    CHECK(rep.wave_solves >= rep.iterations);

    CHECK_THROWS_AS(
        cg_solve(WaveHoltzOperator([] {
            Problem2D q = pec_problem(6, 4.5);
            q.boundary.set(Face::XLo, Condition::Mur1);
            q.grid = build_grid_2d(q.grid.domain, {}, {}, q.boundary);
            q.filter.mode = StateMode::Full;
            q.time = make_problem_time_grid(q.grid, q.filter);
            return q;
        }())),
        std::invalid_argument);
}

TEST_CASE("dense assembly reproduces the matrix-free solve") {
    Problem2D p = pec_problem(8, 6.5);
    WaveHoltzOperator op(p);
    const Eigen::MatrixXd A = assemble_dense(op);
    REQUIRE(A.rows() == long(op.size()));

    // Dense columns agree with a matrix-free application on a random vector.
    const auto x = random_vec(op.size(), 33);
    const auto Ax = op.apply_i_minus_s(x);
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), x.size());
    const Eigen::VectorXd Axd = A * xv;
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(Ax[i] == doctest::Approx(Axd[i]).epsilon(1e-10).scale(1.0));

    Eigen::Map<const Eigen::VectorXd> bv(op.rhs().data(), op.size());
    const Eigen::VectorXd xd = A.fullPivLu().solve(bv);
    KrylovOptions opts;
    opts.tol = 1e-11;
    opts.max_iters = 500;
    const SolveReport rep = cg_solve(op, opts);
    REQUIRE(rep.converged);
    for (std::size_t i = 0; i < op.size(); ++i)
        CHECK(rep.nu[i] == doctest::Approx(xd[i]).epsilon(1e-8).scale(1.0));

    CHECK_THROWS_AS(assemble_dense(op, 10), std::invalid_argument);
}

TEST_CASE("companion fields match the sin-phase content of the cycle") {
    Problem2D p = pec_problem(16, 7.5);
    const double omega = 7.5;

    // Start the evolution on the exact discrete steady cycle (modal initial
    // data): the field is then a pure cos(w t) oscillation and the sin-phase
    // identities below hold to roundoff.
    const std::vector<double> nu_full =
        modal_fixed_point(p.grid, p.time, omega, p.source.terms[0].jz);
    Grid2D g = p.grid;
    StateVector v;
    v.mode = p.filter.mode;
    v.data.clear();
    for (std::size_t q = 0; q < nu_full.size(); ++q)
        if (g.kind[q] == NodeKind::Free) v.data.push_back(nu_full[q]);
    unflatten(v, g);
    const RealParts2D rp = recover_real(g, omega);

    // In the converged cycle H^{n+1/2} = D sin(w t^{n+1/2}) with
    // D = -(1/(mu wt)) curl nu, wt = sin(w dt/2)/(dt/2). The filter-time
    // averages (H^{n+1/2}+H^{n-1/2})/2 therefore project onto sin(w t^n) with
    // amplitude D cos(w dt/2), while recover_real returns the w-scaled field.
    const TimeGrid tg = make_time_grid(2.0 * std::numbers::pi / omega, cfl_time_step(g));
    const auto ws = harmonic_filter_weights(omega, tg, true);
    std::vector<double> hx_proj(g.n_hx(), 0.0), hy_proj(g.n_hy(), 0.0);
    evolve(v, g, p.source, tg, p.boundary, [&](int n, const Snapshot2D& s) {
        for (std::size_t q = 0; q < hx_proj.size(); ++q) hx_proj[q] += ws[n] * s.hx_avg[q];
        for (std::size_t q = 0; q < hy_proj.size(); ++q) hy_proj[q] += ws[n] * s.hy_avg[q];
    });

    const double wt = std::sin(omega * tg.dt / 2.0) / (tg.dt / 2.0);
    const double scale = (omega / wt) * std::cos(omega * tg.dt / 2.0);
    double ref = 0.0;
    for (double x : hx_proj) ref = std::max(ref, std::abs(x));
    for (std::size_t q = 0; q < hx_proj.size(); ++q)
        CHECK(scale * rp.re_hx[q] == doctest::Approx(hx_proj[q]).epsilon(1e-6).scale(ref));
    for (std::size_t q = 0; q < hy_proj.size(); ++q)
        CHECK(scale * rp.re_hy[q] == doctest::Approx(hy_proj[q]).epsilon(1e-6).scale(ref));

    // Closed problem: no cos-phase magnetic content, no sin-phase electric
    // content beyond discretization error.
    const auto wc = harmonic_filter_weights(omega, tg, false);
    std::vector<double> hx_cos(g.n_hx(), 0.0);
    std::vector<double> ez_sin(g.n_ez(), 0.0);
    evolve(v, g, p.source, tg, p.boundary, [&](int n, const Snapshot2D& s) {
        for (std::size_t q = 0; q < hx_cos.size(); ++q) hx_cos[q] += wc[n] * s.hx_avg[q];
        for (std::size_t q = 0; q < ez_sin.size(); ++q) ez_sin[q] += ws[n] * s.ez[q];
    });
    for (double x : hx_cos) CHECK(std::abs(x) < 1e-7 * std::max(1.0, ref));
    double ezref = 0.0;
    for (double x : g.ez) ezref = std::max(ezref, std::abs(x));
    for (double x : ez_sin) CHECK(std::abs(x) < 1e-7 * std::max(1.0, ezref));
}
