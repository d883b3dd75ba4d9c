#pragma once

#include <vector>

#include "emwh/krylov.hpp"
#include "emwh/problem.hpp"

namespace emwh {

/// Cosine (im) and sine (re) components of Ez at one frequency, over the full
/// node array of the grid.
struct FrequencySolution {
    double omega = 0.0;
    std::vector<double> im;
    std::vector<double> re;
};

struct MultiFrequencyResult {
    SolveReport report;
    std::vector<FrequencySolution> solutions;
};

/// Full Ez node array from a flattened state (forced nodes read as zero).
std::vector<double> ez_field(const Grid2D& g, const std::vector<double>& state,
                             StateMode mode);

/// Project the converged combined state onto each frequency of the filter:
/// one extra evolution over a single period of the base frequency, harmonic
/// weights per frequency.
std::vector<FrequencySolution> separate_frequencies(const Problem2D& p,
                                                    const std::vector<double>& nu);

/// Solve the combined multi-frequency problem, then separate per frequency.
MultiFrequencyResult solve_multi_frequency(const Problem2D& p, const KrylovOptions& opts = {});

}  // namespace emwh
