#pragma once

#include <cstddef>
#include <vector>

#include "emwh/boundary.hpp"
#include "emwh/geometry.hpp"
#include "emwh/grid2d.hpp"  // NodeKind

namespace emwh {

/// Full 3D Yee grid with the six field components at canonical locations:
///   Ex (i+1/2, j, k)    Hx (i, j+1/2, k+1/2)
///   Ey (i, j+1/2, k)    Hy (i+1/2, j, k+1/2)
///   Ez (i, j, k+1/2)    Hz (i+1/2, j+1/2, k)
/// eps is sampled at E locations, mu at H locations. `kind_*` mark forced
/// (PEC/Dirichlet) E locations: tangential components on domain faces plus
/// any location inside an embedded PEC region.
struct Grid3D {
    Domain domain;
    int nx = 0, ny = 0, nz = 0;
    double dx = 0.0, dy = 0.0, dz = 0.0;

    std::vector<double> ex, ey, ez;
    std::vector<double> hx, hy, hz;

    std::vector<double> eps_ex, eps_ey, eps_ez;
    std::vector<double> inv_eps_ex, inv_eps_ey, inv_eps_ez;
    std::vector<double> mu_hx, mu_hy, mu_hz;
    std::vector<double> inv_mu_hx, inv_mu_hy, inv_mu_hz;
    std::vector<double> mu_ex, mu_ey, mu_ez;  // mu at E locations (Mur wave speed)

    std::vector<NodeKind> kind_ex, kind_ey, kind_ez;

    // Array extents per component.
    int nex_x() const { return nx; }
    int nex_y() const { return ny + 1; }
    int nex_z() const { return nz + 1; }
    int ney_x() const { return nx + 1; }
    int ney_y() const { return ny; }
    int ney_z() const { return nz + 1; }
    int nez_x() const { return nx + 1; }
    int nez_y() const { return ny + 1; }
    int nez_z() const { return nz; }
    int nhx_x() const { return nx + 1; }
    int nhx_y() const { return ny; }
    int nhx_z() const { return nz; }
    int nhy_x() const { return nx; }
    int nhy_y() const { return ny + 1; }
    int nhy_z() const { return nz; }
    int nhz_x() const { return nx; }
    int nhz_y() const { return ny; }
    int nhz_z() const { return nz + 1; }

    std::size_t iex(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * nex_y() + j) * nex_x() + i;
    }
    std::size_t iey(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * ney_y() + j) * ney_x() + i;
    }
    std::size_t iez(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * nez_y() + j) * nez_x() + i;
    }
    std::size_t ihx(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * nhx_y() + j) * nhx_x() + i;
    }
    std::size_t ihy(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * nhy_y() + j) * nhy_x() + i;
    }
    std::size_t ihz(int i, int j, int k) const {
        return (static_cast<std::size_t>(k) * nhz_y() + j) * nhz_x() + i;
    }

    double x(double i) const { return domain.lo[0] + i * dx; }
    double y(double j) const { return domain.lo[1] + j * dy; }
    double z(double k) const { return domain.lo[2] + k * dz; }

    int free_nodes() const;
    void apply_mask();
    void zero_fields();
};

Grid3D build_grid_3d(const Domain& domain, const MaterialSpec& material,
                     const std::vector<Region>& pec_regions,
                     const BoundarySpec& boundary = BoundarySpec{});

double cfl_time_step(const Grid3D& g);

}  // namespace emwh
