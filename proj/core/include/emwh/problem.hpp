#pragma once

#include "emwh/boundary.hpp"
#include "emwh/filter.hpp"
#include "emwh/grid2d.hpp"
#include "emwh/grid3d.hpp"
#include "emwh/source.hpp"
#include "emwh/state.hpp"
#include "emwh/timegrid.hpp"
#include "emwh/yee2d.hpp"
#include "emwh/yee3d.hpp"

namespace emwh {

/// Everything needed to run one filtered evolution: discretization, forcing,
/// boundary closure, filter variant and the time grid covering the window.
struct Problem2D {
    Grid2D grid;
    Source2D source;
    BoundarySpec boundary;
    FilterSpec filter;
    TimeGrid time;

    void validate() const;
};

struct Problem3D {
    Grid3D grid;
    Source3D source;
    BoundarySpec boundary;
    FilterSpec filter;
    TimeGrid time;

    void validate() const;
};

/// State layout implied by the problem: closed reflecting boundaries with sin
/// forcing keep the evolution energy conserving, so only E participates;
/// anything else needs the full (E, H) state.
StateMode infer_state_mode(const BoundarySpec& boundary, Forcing forcing, int dim);

/// Time grid covering `filter.window()` at the CFL-limited step.
TimeGrid make_problem_time_grid(const Grid2D& g, const FilterSpec& filter,
                                double safety = 0.9);
TimeGrid make_problem_time_grid(const Grid3D& g, const FilterSpec& filter,
                                double safety = 0.9);

/// One application of the time filter: evolve the wave solver from `nu` over
/// the window and return the weighted time average in the same layout.
std::vector<double> apply_filtered_evolve(const Problem2D& p, const std::vector<double>& nu);
std::vector<double> apply_filtered_evolve(const Problem3D& p, const std::vector<double>& nu);

}  // namespace emwh
