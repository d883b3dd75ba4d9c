#include "emwh/source.hpp"

#include <cmath>
#include <stdexcept>

namespace emwh {

double modified_omega(double omega, double dt) {
    if (!(omega > 0.0) || !(dt > 0.0))
        throw std::domain_error("modified_omega: omega and dt must be positive");
    const double half = omega * dt / 2.0;
    if (half > 1.0)
        throw std::domain_error("modified_omega: omega*dt > 2, shifted frequency undefined");
    return (2.0 / dt) * std::asin(half);
}

double source_amplitude(SourceTime mode, double omega, int n, const TimeGrid& tg) {
    const double th = tg.t(n + 0.5);
    switch (mode) {
        case SourceTime::SinExact:
            return std::sin(omega * th);
        case SourceTime::CosExact:
            return std::cos(omega * th);
        case SourceTime::SinRecursive: {
            // Summing the recursion telescopes to a Dirichlet-kernel form:
            // S^{n+1/2} = sin(w t^{n+1/2}) * (w dt/2) / sin(w dt/2).
            const double s = std::sin(omega * tg.dt / 2.0);
            return std::sin(omega * th) * (omega * tg.dt / 2.0) / s;
        }
        case SourceTime::SinRecursiveModified: {
            // With the drive at wbar the same telescoping gives exactly
            // sin(wbar t^{n+1/2}) since sin(wbar dt/2) = w dt/2.
            const double wbar = modified_omega(omega, tg.dt);
            return std::sin(wbar * th);
        }
    }
    throw std::logic_error("source_amplitude: unknown mode");
}

}  // namespace emwh
