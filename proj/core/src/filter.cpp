#include "emwh/filter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emwh {

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// Real gcd with relative tolerance, for commensurate frequency lists.
double fgcd(double a, double b) {
    const double tol = 1e-9 * std::max(a, b);
    while (b > tol) {
        const double r = std::fmod(a, b);
        a = b;
        b = (r > tol && b - r > tol) ? r : 0.0;
    }
    return a;
}

}  // namespace

double FilterSpec::base_omega() const {
    if (omegas.empty()) throw std::invalid_argument("filter: no frequencies");
    double g = omegas.front();
    for (double w : omegas) g = fgcd(std::max(g, w), std::min(g, w));
    return g;
}

double FilterSpec::window() const {
    return periods * 2.0 * std::numbers::pi / base_omega();
}

void FilterSpec::validate() const {
    if (omegas.empty()) throw std::invalid_argument("filter: no frequencies");
    for (double w : omegas)
        if (!(w > 0.0)) throw std::invalid_argument("filter: frequencies must be positive");
    if (periods < 1) throw std::invalid_argument("filter: periods must be >= 1");
    const double base = base_omega();
    for (double w : omegas) {
        const double q = w / base;
        if (std::abs(q - std::round(q)) > 1e-6)
            throw std::invalid_argument(
                "filter: frequencies are not commensurate (no common base frequency)");
    }
    if (quadrature == Quadrature::TrapezoidModified) {
        if (omegas.size() != 1)
            throw std::invalid_argument("filter: modified quadrature needs a single frequency");
        if (forcing != Forcing::Sin)
            throw std::invalid_argument("filter: modified quadrature needs sin forcing");
    }
}

std::vector<double> waveholtz_filter_weights(const FilterSpec& spec, const TimeGrid& tg) {
    spec.validate();
    std::vector<double> w(tg.M + 1);
    const double scale = 2.0 * tg.dt / tg.T;
    const bool modified = spec.quadrature == Quadrature::TrapezoidModified;
    const double wbar = modified ? modified_omega(spec.omegas[0], tg.dt) : 0.0;
    for (int n = 0; n <= tg.M; ++n) {
        const double t = tg.t(n);
        double kernel = -0.25;
        for (double omega : spec.omegas) kernel += std::cos(omega * t);
        if (modified) {
            const double denom = std::cos(wbar * t);
            if (std::abs(denom) < 1e-8)
                throw std::invalid_argument(
                    "filter: modified kernel hits a near-zero of cos(wbar t); "
                    "perturb the step count by one and retry");
            kernel *= std::cos(spec.omegas[0] * t) / denom;
        }
        const double eta = (n == 0 || n == tg.M) ? 0.5 : 1.0;
        w[n] = scale * eta * kernel;
    }
    return w;
}

std::vector<double> harmonic_filter_weights(double omega, const TimeGrid& tg, bool sine) {
    std::vector<double> w(tg.M + 1);
    const double scale = 2.0 * tg.dt / tg.T;
    for (int n = 0; n <= tg.M; ++n) {
        const double eta = (n == 0 || n == tg.M) ? 0.5 : 1.0;
        const double t = tg.t(n);
        w[n] = scale * eta * (sine ? std::sin(omega * t) : std::cos(omega * t));
    }
    return w;
}

double beta_continuous(double lambda, const std::vector<double>& omegas, int periods) {
    FilterSpec spec;
    spec.omegas = omegas;
    spec.periods = periods;
    const double T = spec.window();
    double beta = -0.5 * sinc(lambda * T);
    for (double w : omegas) beta += sinc((w - lambda) * T) + sinc((w + lambda) * T);
    return beta;
}

double beta_continuous(double lambda, double omega, int periods) {
    return beta_continuous(lambda, std::vector<double>{omega}, periods);
}

double beta_discrete(double lambda, const std::vector<double>& weights, const TimeGrid& tg) {
    double beta = 0.0;
    for (int n = 0; n < static_cast<int>(weights.size()); ++n)
        beta += weights[n] * std::cos(lambda * tg.t(n));
    return beta;
}

void FilterAccumulator::accumulate(int n, std::span<const double> state) {
    if (n < 0 || n >= static_cast<int>(weights_.size()))
        throw std::out_of_range("filter accumulator: time level out of range");
    if (state.size() != sum_.size())
        throw std::length_error("filter accumulator: state length mismatch");
    const double w = weights_[n];
    for (std::size_t p = 0; p < sum_.size(); ++p) sum_[p] += w * state[p];
}

void flatten_snapshot(const Grid2D& g, const Snapshot2D& s, StateMode mode,
                      std::vector<double>& out) {
    out.clear();
    for (std::size_t n = 0; n < s.ez.size(); ++n)
        if (g.kind[n] == NodeKind::Free) out.push_back(s.ez[n]);
    if (mode == StateMode::Full) {
        out.insert(out.end(), s.hx_avg.begin(), s.hx_avg.end());
        out.insert(out.end(), s.hy_avg.begin(), s.hy_avg.end());
    }
}

void flatten_snapshot(const Grid3D& g, const Snapshot3D& s, StateMode mode,
                      std::vector<double>& out) {
    out.clear();
    auto push = [&](std::span<const double> f, const std::vector<NodeKind>& kind) {
        for (std::size_t n = 0; n < f.size(); ++n)
            if (kind[n] == NodeKind::Free) out.push_back(f[n]);
    };
    push(s.ex, g.kind_ex);
    push(s.ey, g.kind_ey);
    push(s.ez, g.kind_ez);
    if (mode == StateMode::Full) {
        out.insert(out.end(), s.hx_avg.begin(), s.hx_avg.end());
        out.insert(out.end(), s.hy_avg.begin(), s.hy_avg.end());
        out.insert(out.end(), s.hz_avg.begin(), s.hz_avg.end());
    }
}

}  // namespace emwh
