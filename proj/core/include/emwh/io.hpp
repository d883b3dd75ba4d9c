#pragma once

#include <array>
#include <string>
#include <vector>

#include "emwh/krylov.hpp"

namespace emwh {

/// Legacy-VTK structured points file with one scalar field. `n` are point
/// counts per axis (use 1 for the collapsed axis in 2D).
void write_vtk_scalar(const std::string& path, const std::string& name,
                      const std::vector<double>& data, std::array<int, 3> n,
                      std::array<double, 3> origin, std::array<double, 3> spacing);

/// Raw little-endian doubles plus a text sidecar (`path` + ".txt") recording
/// the field name, point counts and spacings.
void write_raw_scalar(const std::string& path, const std::string& name,
                      const std::vector<double>& data, std::array<int, 3> n,
                      std::array<double, 3> origin, std::array<double, 3> spacing);

/// Per-iteration convergence record of one solve.
void write_residual_csv(const std::string& path, const SolveReport& report);

/// Generic CSV with a header row.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace emwh
