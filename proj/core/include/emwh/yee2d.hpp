#pragma once

#include <functional>
#include <span>
#include <vector>

#include "emwh/boundary.hpp"
#include "emwh/grid2d.hpp"
#include "emwh/source.hpp"
#include "emwh/state.hpp"
#include "emwh/timegrid.hpp"

namespace emwh {

/// Field view handed to observers at integer time level n: E at t^n and the
/// time-centered magnetic averages (H^{n+1/2} + H^{n-1/2}) / 2.
struct Snapshot2D {
    std::span<const double> ez;
    std::span<const double> hx_avg;
    std::span<const double> hy_avg;
};

using Observer2D = std::function<void(int n, const Snapshot2D&)>;

/// Leapfrog driver for the 2D TM Yee scheme with PEC / Mur / time-harmonic
/// Dirichlet faces and embedded PEC masks. One instance owns its grid copy
/// and scratch arrays; repeated runs reuse the allocations.
class YeeStepper2D {
  public:
    YeeStepper2D(Grid2D grid, Source2D source, BoundarySpec boundary, TimeGrid tg);

    /// Set initial data from nu (H = 0 in energy-conserving mode), apply the
    /// boundary values at t = 0 and build H^{-1/2}.
    void start(const StateVector& nu);

    /// Advance one full leapfrog step from level n: H to t^{n+1/2}, then E to
    /// t^{n+1} with the source amplitude at t^{n+1/2}, then boundary closure.
    void step(int n);

    /// Full evolution: start(nu) then M steps, invoking the observer at every
    /// integer level n in [0, M] with the H time-centered average (the sample
    /// at n = M uses one extra H half-update).
    void run(const StateVector& nu, const Observer2D& observer);

    const Grid2D& grid() const { return grid_; }
    Grid2D& grid() { return grid_; }
    const TimeGrid& time_grid() const { return tg_; }

    // Exposed for verification: H^{n+1/2} += coef * (discrete curl of E).
    void update_h(double coef);

  private:
    void update_e(int n);
    void apply_boundary(int level);
    void apply_dirichlet(int level);

    Grid2D grid_;
    Source2D src_;
    BoundarySpec bc_;
    TimeGrid tg_;
    bool has_mur_ = false;
    std::vector<double> ez_old_;            // E^n copy for the Mur update
    std::vector<double> hx_prev_, hy_prev_; // H^{n-1/2} for the filter average
    std::vector<double> hx_avg_, hy_avg_;
};

/// Convenience wrapper: evolve from initial data nu and return the final grid.
Grid2D evolve(const StateVector& nu, const Grid2D& grid, const Source2D& source,
              const TimeGrid& tg, const BoundarySpec& boundary,
              const Observer2D& observer = {});

}  // namespace emwh
