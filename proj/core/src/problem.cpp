#include "emwh/problem.hpp"

#include <stdexcept>

namespace emwh {

namespace {

bool sin_like(SourceTime t) { return t != SourceTime::CosExact; }

void check_forcing(Forcing forcing, SourceTime t) {
    if ((forcing == Forcing::Sin) != sin_like(t))
        throw std::invalid_argument("problem: source profile disagrees with filter forcing");
}

// The full (E,H) state is always admissible; the reduced E-only state is
// valid only when the boundary/forcing combination conserves energy.
void check_mode(StateMode mode, const BoundarySpec& boundary, Forcing forcing, int dim) {
    if (mode == StateMode::EnergyConserving &&
        infer_state_mode(boundary, forcing, dim) != StateMode::EnergyConserving)
        throw std::invalid_argument("problem: state mode disagrees with boundary/forcing");
}

}  // namespace

void Problem2D::validate() const {
    filter.validate();
    for (const auto& t : source.terms) check_forcing(filter.forcing, t.time);
    check_mode(filter.mode, boundary, filter.forcing, 2);
    if (filter.quadrature == Quadrature::TrapezoidModified)
        for (const auto& t : source.terms)
            if (!t.jz.empty() && t.time != SourceTime::SinRecursiveModified)
                throw std::invalid_argument(
                    "problem: modified quadrature needs the modified source profile");
}

void Problem3D::validate() const {
    filter.validate();
    for (const auto& t : source.terms) check_forcing(filter.forcing, t.time);
    check_mode(filter.mode, boundary, filter.forcing, 3);
    if (filter.quadrature == Quadrature::TrapezoidModified)
        throw std::invalid_argument("problem: modified quadrature is 2D only");
}

StateMode infer_state_mode(const BoundarySpec& boundary, Forcing forcing, int dim) {
    if (boundary.energy_conserving(dim) && forcing == Forcing::Sin)
        return StateMode::EnergyConserving;
    return StateMode::Full;
}

TimeGrid make_problem_time_grid(const Grid2D& g, const FilterSpec& filter, double safety) {
    return make_time_grid(filter.window(), cfl_time_step(g), safety);
}

TimeGrid make_problem_time_grid(const Grid3D& g, const FilterSpec& filter, double safety) {
    return make_time_grid(filter.window(), cfl_time_step(g), safety);
}

namespace {

template <class Problem, class Snapshot>
std::vector<double> filtered_evolve(const Problem& p, const std::vector<double>& nu) {
    const auto weights = waveholtz_filter_weights(p.filter, p.time);
    const std::size_t ndof = dof_count(p.grid, p.filter.mode);
    if (nu.size() != ndof)
        throw std::length_error("filtered evolve: state length does not match problem");
    FilterAccumulator acc(weights, ndof);
    std::vector<double> scratch;
    scratch.reserve(ndof);
    StateVector v;
    v.mode = p.filter.mode;
    v.data = nu;
    evolve(v, p.grid, p.source, p.time, p.boundary,
           [&](int n, const Snapshot& s) {
               flatten_snapshot(p.grid, s, p.filter.mode, scratch);
               acc.accumulate(n, scratch);
           });
    return acc.result();
}

}  // namespace

std::vector<double> apply_filtered_evolve(const Problem2D& p, const std::vector<double>& nu) {
    return filtered_evolve<Problem2D, Snapshot2D>(p, nu);
}

std::vector<double> apply_filtered_evolve(const Problem3D& p, const std::vector<double>& nu) {
    return filtered_evolve<Problem3D, Snapshot3D>(p, nu);
}

}  // namespace emwh
