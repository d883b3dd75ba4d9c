#pragma once

#include <optional>
#include <vector>

#include "emwh/timegrid.hpp"

namespace emwh {

/// Temporal profile of the current source multiplying the E-update.
///  - SinExact / CosExact: sample the trigonometric function at t^{n+1/2}.
///  - SinRecursive: the trapezoid-consistent recursion
///        S^{1/2} = w*dt/2,  S^{n+1/2} = S^{n-1/2} + dt*w*cos(w t^n).
///  - SinRecursiveModified: same recursion driven at the shifted frequency
///    wbar, which makes the discrete solve target the exact-frequency system.
enum class SourceTime { SinExact, CosExact, SinRecursive, SinRecursiveModified };

/// Shifted drive frequency wbar = (2/dt) asin(w dt / 2). Requires w dt <= 2.
double modified_omega(double omega, double dt);

/// Amplitude multiplying J in the E-update from level n to n+1. Closed form;
/// for the recursive modes it reproduces the recursion exactly (in exact
/// arithmetic).
double source_amplitude(SourceTime mode, double omega, int n, const TimeGrid& tg);

/// One additive forcing term: a spatial current density with its own temporal
/// profile and frequency (multi-frequency runs sum several terms).
struct SourceTerm2D {
    std::vector<double> jz;  // at Ez nodes; empty means zero
    SourceTime time = SourceTime::SinRecursive;
    double omega = 0.0;
};

/// Time-harmonic Dirichlet data for faces marked Condition::Dirichlet:
/// Ez on those nodes is held at values * cos(omega_drive t^n).
struct DirichletData2D {
    std::vector<double> values;  // at Ez nodes (only forced nodes are read)
    double omega = 0.0;
    bool modified = false;  // drive at wbar instead of w
};

struct Source2D {
    std::vector<SourceTerm2D> terms;
    std::optional<DirichletData2D> dirichlet;
};

struct SourceTerm3D {
    std::vector<double> jx, jy, jz;  // at E locations; empty means zero
    SourceTime time = SourceTime::SinRecursive;
    double omega = 0.0;
};

struct Source3D {
    std::vector<SourceTerm3D> terms;
};

}  // namespace emwh
