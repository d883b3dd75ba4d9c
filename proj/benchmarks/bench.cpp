#include <benchmark/benchmark.h>

#include "emwh/problem.hpp"
#include "emwh/waveholtz.hpp"

namespace {

emwh::Problem2D make_problem_2d(int n) {
    emwh::Domain d;
    d.dim = 2;
    d.lo = {-1.0, -1.0, 0.0};
    d.hi = {1.0, 1.0, 0.0};
    d.cells = {n, n, 1};
    emwh::Problem2D p;
    p.boundary = emwh::BoundarySpec::all(emwh::Condition::Pec);
    p.grid = emwh::build_grid_2d(d, {}, {}, p.boundary);
    p.filter.omegas = {10.5};
    p.filter.periods = 1;
    p.filter.mode = emwh::StateMode::EnergyConserving;
    p.time = emwh::make_problem_time_grid(p.grid, p.filter);
    emwh::SourceTerm2D term;
    term.omega = 10.5;
    term.jz.assign(p.grid.n_ez(), 0.0);
    for (int j = 0; j <= p.grid.ny; ++j)
        for (int i = 0; i <= p.grid.nx; ++i) {
            const double x = p.grid.x(i), y = p.grid.y(j);
            term.jz[p.grid.iez(i, j)] = 10.5 * std::exp(-36.0 * (x * x + y * y));
        }
    p.source.terms.push_back(std::move(term));
    return p;
}

emwh::Problem3D make_problem_3d(int n) {
    emwh::Domain d;
    d.dim = 3;
    d.lo = {-1.0, -1.0, -1.0};
    d.hi = {1.0, 1.0, 1.0};
    d.cells = {n, n, n};
    emwh::Problem3D p;
    p.boundary = emwh::BoundarySpec::all(emwh::Condition::Pec);
    p.grid = emwh::build_grid_3d(d, {}, {}, p.boundary);
    p.filter.omegas = {6.5};
    p.filter.periods = 1;
    p.filter.mode = emwh::StateMode::EnergyConserving;
    p.time = emwh::make_problem_time_grid(p.grid, p.filter);
    emwh::SourceTerm3D term;
    term.omega = 6.5;
    term.jz.assign(p.grid.ez.size(), 0.0);
    for (std::size_t q = 0; q < term.jz.size(); ++q) term.jz[q] = 1.0;
    p.source.terms.push_back(std::move(term));
    return p;
}

void BM_Step2D(benchmark::State& state) {
    auto p = make_problem_2d(static_cast<int>(state.range(0)));
    emwh::YeeStepper2D stepper(p.grid, p.source, p.boundary, p.time);
    emwh::StateVector nu;
    nu.mode = p.filter.mode;
    nu.data.assign(emwh::dof_count(p.grid, nu.mode), 0.0);
    stepper.start(nu);
    int n = 0;
    for (auto _ : state) {
        stepper.step(n % p.time.M);
        ++n;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(p.grid.n_ez()));
}
BENCHMARK(BM_Step2D)->Arg(64)->Arg(128)->Arg(256);

void BM_Step3D(benchmark::State& state) {
    auto p = make_problem_3d(static_cast<int>(state.range(0)));
    emwh::YeeStepper3D stepper(p.grid, p.source, p.boundary, p.time);
    emwh::StateVector nu;
    nu.mode = p.filter.mode;
    nu.data.assign(emwh::dof_count(p.grid, nu.mode), 0.0);
    stepper.start(nu);
    int n = 0;
    for (auto _ : state) {
        stepper.step(n % p.time.M);
        ++n;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(p.grid.ez.size()));
}
BENCHMARK(BM_Step3D)->Arg(16)->Arg(32);

void BM_OperatorApply2D(benchmark::State& state) {
    auto p = make_problem_2d(static_cast<int>(state.range(0)));
    emwh::WaveHoltzOperator op(p);
    std::vector<double> v(op.size(), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(op.apply_i_minus_s(v));
}
BENCHMARK(BM_OperatorApply2D)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
