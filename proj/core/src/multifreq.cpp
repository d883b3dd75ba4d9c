#include "emwh/multifreq.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emwh {

std::vector<double> ez_field(const Grid2D& g, const std::vector<double>& state,
                             StateMode mode) {
    if (state.size() != static_cast<std::size_t>(dof_count(g, mode)))
        throw std::length_error("ez_field: state length mismatch");
    std::vector<double> ez(g.n_ez(), 0.0);
    std::size_t p = 0;
    for (std::size_t n = 0; n < ez.size(); ++n)
        if (g.kind[n] == NodeKind::Free) ez[n] = state[p++];
    return ez;
}

std::vector<FrequencySolution> separate_frequencies(const Problem2D& p,
                                                    const std::vector<double>& nu) {
    p.validate();
    const std::size_t nfreq = p.filter.omegas.size();
    // One period of the base frequency covers an integer number of periods of
    // every component, so the harmonic projections decouple there.
    const double T = 2.0 * std::numbers::pi / p.filter.base_omega();
    const TimeGrid tg = make_time_grid(T, cfl_time_step(p.grid));

    std::vector<std::vector<double>> wcos(nfreq), wsin(nfreq);
    for (std::size_t f = 0; f < nfreq; ++f) {
        wcos[f] = harmonic_filter_weights(p.filter.omegas[f], tg, false);
        wsin[f] = harmonic_filter_weights(p.filter.omegas[f], tg, true);
    }

    std::vector<FrequencySolution> out(nfreq);
    for (std::size_t f = 0; f < nfreq; ++f) {
        out[f].omega = p.filter.omegas[f];
        out[f].im.assign(p.grid.n_ez(), 0.0);
        out[f].re.assign(p.grid.n_ez(), 0.0);
    }

    StateVector v;
    v.mode = p.filter.mode;
    v.data = nu;
    evolve(v, p.grid, p.source, tg, p.boundary, [&](int n, const Snapshot2D& s) {
        for (std::size_t f = 0; f < nfreq; ++f) {
            const double wc = wcos[f][n];
            const double ws = wsin[f][n];
            for (std::size_t q = 0; q < s.ez.size(); ++q) {
                out[f].im[q] += wc * s.ez[q];
                out[f].re[q] += ws * s.ez[q];
            }
        }
    });
    return out;
}

MultiFrequencyResult solve_multi_frequency(const Problem2D& p, const KrylovOptions& opts) {
    WaveHoltzOperator op(p);
    MultiFrequencyResult res;
    res.report = waveholtz_solve(op, opts);
    if (!res.report.converged)
        throw std::runtime_error("multi-frequency solve did not converge");
    res.solutions = separate_frequencies(p, res.report.nu);
    return res;
}

}  // namespace emwh
