#pragma once

#include <vector>

#include "emwh/grid2d.hpp"
#include "emwh/grid3d.hpp"

namespace emwh {

/// Which fields participate in the solver state.
///  - EnergyConserving: free E locations only (closed problems, nu_H = 0).
///  - Full: free E locations followed by every H location.
enum class StateMode { EnergyConserving, Full };

/// Flattened initial-condition vector over the participating degrees of
/// freedom, ordered lexicographically by (component, k, j, i). Forced
/// (PEC/Dirichlet) locations are excluded.
struct StateVector {
    StateMode mode = StateMode::EnergyConserving;
    std::vector<double> data;

    std::size_t size() const { return data.size(); }
};

int dof_count(const Grid2D& g, StateMode mode);
int dof_count(const Grid3D& g, StateMode mode);

StateVector flatten(const Grid2D& g, StateMode mode);
StateVector flatten(const Grid3D& g, StateMode mode);

/// Writes the state into the grid fields. Non-participating E locations are
/// zeroed; H is zeroed in EnergyConserving mode. Throws std::length_error on
/// size mismatch.
void unflatten(const StateVector& v, Grid2D& g);
void unflatten(const StateVector& v, Grid3D& g);

}  // namespace emwh
