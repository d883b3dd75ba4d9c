#pragma once

#include <span>
#include <vector>

#include "emwh/grid2d.hpp"
#include "emwh/grid3d.hpp"
#include "emwh/state.hpp"
#include "emwh/timegrid.hpp"
#include "emwh/yee2d.hpp"
#include "emwh/yee3d.hpp"

namespace emwh {

/// Temporal shape of the volume forcing sin(w t) J or cos(w t) J.
enum class Forcing { Sin, Cos };

/// Quadrature variant for the time filter.
///  - Trapezoid: plain trapezoid weights over the window.
///  - TrapezoidModified: trapezoid weights with the kernel rescaled by
///    cos(w t)/cos(wbar t), which pairs with the modified (wbar-driven)
///    source so the fixed point solves the exact-frequency discrete system.
enum class Quadrature { Trapezoid, TrapezoidModified };

/// Frequencies, window length and filter variant for one iteration operator.
/// The window is `periods` periods of the base frequency (the largest value
/// that divides every entry of `omegas`).
struct FilterSpec {
    std::vector<double> omegas;
    int periods = 1;
    Quadrature quadrature = Quadrature::Trapezoid;
    Forcing forcing = Forcing::Sin;
    StateMode mode = StateMode::EnergyConserving;

    double base_omega() const;
    double window() const;  // T = periods * 2*pi / base_omega()
    void validate() const;
};

/// Quadrature weights w_n, n = 0..M, of the iteration filter
///   (2 dt / T) eta_n (sum_k cos(w_k t^n) - 1/4)
/// with trapezoid ends eta_0 = eta_M = 1/2. The modified variant multiplies
/// by cos(w t^n)/cos(wbar t^n) and rejects time grids where the denominator
/// nearly vanishes (perturb M by one and retry).
std::vector<double> waveholtz_filter_weights(const FilterSpec& spec, const TimeGrid& tg);

/// Weights of the plain harmonic projection (2 dt / T) eta_n trig(w t^n),
/// used to separate individual frequencies from a combined evolution.
std::vector<double> harmonic_filter_weights(double omega, const TimeGrid& tg, bool sine);

/// Transfer function of the continuous filter over `periods` periods of the
/// base frequency, evaluated at eigenfrequency lambda.
double beta_continuous(double lambda, const std::vector<double>& omegas, int periods = 1);
double beta_continuous(double lambda, double omega, int periods = 1);

/// Transfer function of the discrete filter: sum_n w_n cos(lambda t^n).
double beta_discrete(double lambda, const std::vector<double>& weights, const TimeGrid& tg);

/// Running weighted sum over time levels: result = sum_n w_n state^n.
class FilterAccumulator {
  public:
    FilterAccumulator(std::vector<double> weights, std::size_t ndof)
        : weights_(std::move(weights)), sum_(ndof, 0.0) {}

    void accumulate(int n, std::span<const double> state);
    const std::vector<double>& result() const { return sum_; }

  private:
    std::vector<double> weights_;
    std::vector<double> sum_;
};

/// Write a time-level snapshot into the flattened state layout (free E
/// locations, then all H locations in Full mode).
void flatten_snapshot(const Grid2D& g, const Snapshot2D& s, StateMode mode,
                      std::vector<double>& out);
void flatten_snapshot(const Grid3D& g, const Snapshot3D& s, StateMode mode,
                      std::vector<double>& out);

}  // namespace emwh
