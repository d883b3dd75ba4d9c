#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "emwh/boundary.hpp"
#include "emwh/geometry.hpp"

namespace emwh {

/// Role of an E-field location in the scheme.
enum class NodeKind : std::uint8_t { Free = 0, Pec = 1, Dirichlet = 2 };

/// Staggered Yee grid for the 2D TM model (Ez, Hx, Hy).
///
/// Layout: Ez at nodes (i, j), i = 0..nx, j = 0..ny; Hx at (i, j+1/2); Hy at
/// (i+1/2, j). Material coefficients are sampled pointwise at the staggered
/// locations. `kind` marks Ez nodes that are forced by PEC or Dirichlet
/// conditions (domain faces and embedded scatterers).
struct Grid2D {
    Domain domain;
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;

    std::vector<double> ez;   // (nx+1) x (ny+1)
    std::vector<double> hx;   // (nx+1) x ny
    std::vector<double> hy;   // nx x (ny+1)

    std::vector<double> eps, inv_eps;      // at Ez nodes
    std::vector<double> mu_hx, inv_mu_hx;  // at Hx points
    std::vector<double> mu_hy, inv_mu_hy;  // at Hy points
    std::vector<double> mu_node;           // mu sampled at Ez nodes (Mur wave speed)

    std::vector<NodeKind> kind;  // at Ez nodes

    std::size_t iez(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
    std::size_t ihx(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
    std::size_t ihy(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    double x(double i) const { return domain.lo[0] + i * dx; }
    double y(double j) const { return domain.lo[1] + j * dy; }

    std::size_t n_ez() const { return static_cast<std::size_t>(nx + 1) * (ny + 1); }
    std::size_t n_hx() const { return static_cast<std::size_t>(nx + 1) * ny; }
    std::size_t n_hy() const { return static_cast<std::size_t>(nx) * (ny + 1); }

    int free_nodes() const;

    /// Re-impose the PEC/Dirichlet zero on forced nodes (Dirichlet values are
    /// written by the time stepper; outside of a run they are zero).
    void apply_mask();

    void zero_fields();

    /// Local wave speed 1/sqrt(eps*mu) at an Ez node.
    double wave_speed(int i, int j) const;
};

/// Build a 2D TM grid: sample materials at staggered points and rasterize PEC
/// regions onto Ez nodes. Face conditions mark the boundary rings.
Grid2D build_grid_2d(const Domain& domain, const MaterialSpec& material,
                     const std::vector<Region>& pec_regions,
                     const BoundarySpec& boundary = BoundarySpec{});

/// Largest stable Yee time step 1/(c_max * sqrt(1/dx^2 + 1/dy^2)), with
/// c_max the fastest sampled wave speed.
double cfl_time_step(const Grid2D& g);

}  // namespace emwh
