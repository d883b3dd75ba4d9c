#pragma once

#include <functional>
#include <span>
#include <vector>

#include "emwh/boundary.hpp"
#include "emwh/grid3d.hpp"
#include "emwh/source.hpp"
#include "emwh/state.hpp"
#include "emwh/timegrid.hpp"

namespace emwh {

struct Snapshot3D {
    std::span<const double> ex, ey, ez;
    std::span<const double> hx_avg, hy_avg, hz_avg;
};

using Observer3D = std::function<void(int n, const Snapshot3D&)>;

/// Leapfrog driver for the full 3D Yee scheme. Mirrors YeeStepper2D.
class YeeStepper3D {
  public:
    YeeStepper3D(Grid3D grid, Source3D source, BoundarySpec boundary, TimeGrid tg);

    void start(const StateVector& nu);
    void step(int n);
    void run(const StateVector& nu, const Observer3D& observer);

    const Grid3D& grid() const { return grid_; }
    Grid3D& grid() { return grid_; }
    const TimeGrid& time_grid() const { return tg_; }

    void update_h(double coef);

  private:
    void update_e(int n);
    void apply_boundary();
    void apply_mur();

    Grid3D grid_;
    Source3D src_;
    BoundarySpec bc_;
    TimeGrid tg_;
    bool has_mur_ = false;
    std::vector<double> ex_old_, ey_old_, ez_old_;
    std::vector<double> hx_prev_, hy_prev_, hz_prev_;
    std::vector<double> hx_avg_, hy_avg_, hz_avg_;
};

Grid3D evolve(const StateVector& nu, const Grid3D& grid, const Source3D& source,
              const TimeGrid& tg, const BoundarySpec& boundary,
              const Observer3D& observer = {});

}  // namespace emwh
