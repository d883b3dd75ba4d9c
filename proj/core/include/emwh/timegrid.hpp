#pragma once

#include <cmath>
#include <stdexcept>

namespace emwh {

/// Uniform time discretization of the filter window [0, T].
struct TimeGrid {
    double T = 0.0;
    int M = 0;       // number of leapfrog steps; M+1 quadrature nodes
    double dt = 0.0;

    double t(double n) const { return n * dt; }
};

/// dt = T/M with M = ceil(T / (safety * dt_cfl)), so the window is an integer
/// number of steps and the step respects the stability bound.
inline TimeGrid make_time_grid(double T, double dt_cfl, double safety = 0.9) {
    if (!(T > 0.0) || !(dt_cfl > 0.0))
        throw std::invalid_argument("time grid: T and dt_cfl must be positive");
    TimeGrid tg;
    tg.T = T;
    tg.M = std::max(1, static_cast<int>(std::ceil(T / (safety * dt_cfl) - 1e-12)));
    tg.dt = T / tg.M;
    return tg;
}

}  // namespace emwh
