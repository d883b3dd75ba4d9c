#include "emwh/recover.hpp"

#include <stdexcept>

namespace emwh {

RealParts2D recover_real(const Grid2D& g, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("recover_real: omega must be positive");
    RealParts2D r;
    r.re_hx.assign(g.n_hx(), 0.0);
    r.re_hy.assign(g.n_hy(), 0.0);
    r.re_ez.assign(g.n_ez(), 0.0);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const std::size_t n = g.ihx(i, j);
            r.re_hx[n] = -(g.inv_mu_hx[n] / omega) *
                         (g.ez[g.iez(i, j + 1)] - g.ez[g.iez(i, j)]) / g.dy;
        }
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t n = g.ihy(i, j);
            r.re_hy[n] = (g.inv_mu_hy[n] / omega) *
                         (g.ez[g.iez(i + 1, j)] - g.ez[g.iez(i, j)]) / g.dx;
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const std::size_t p = g.iez(i, j);
            if (g.kind[p] != NodeKind::Free) continue;
            r.re_ez[p] = (g.inv_eps[p] / omega) *
                         ((g.hy[g.ihy(i, j)] - g.hy[g.ihy(i - 1, j)]) / g.dx -
                          (g.hx[g.ihx(i, j)] - g.hx[g.ihx(i, j - 1)]) / g.dy);
        }
    return r;
}

RealParts3D recover_real(const Grid3D& g, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("recover_real: omega must be positive");
    RealParts3D r;
    r.re_hx.assign(g.hx.size(), 0.0);
    r.re_hy.assign(g.hy.size(), 0.0);
    r.re_hz.assign(g.hz.size(), 0.0);
    r.re_ex.assign(g.ex.size(), 0.0);
    r.re_ey.assign(g.ey.size(), 0.0);
    r.re_ez.assign(g.ez.size(), 0.0);

    for (int k = 0; k < g.nhx_z(); ++k)
        for (int j = 0; j < g.nhx_y(); ++j)
            for (int i = 0; i < g.nhx_x(); ++i) {
                const std::size_t n = g.ihx(i, j, k);
                r.re_hx[n] = -(g.inv_mu_hx[n] / omega) *
                             ((g.ez[g.iez(i, j + 1, k)] - g.ez[g.iez(i, j, k)]) / g.dy -
                              (g.ey[g.iey(i, j, k + 1)] - g.ey[g.iey(i, j, k)]) / g.dz);
            }
    for (int k = 0; k < g.nhy_z(); ++k)
        for (int j = 0; j < g.nhy_y(); ++j)
            for (int i = 0; i < g.nhy_x(); ++i) {
                const std::size_t n = g.ihy(i, j, k);
                r.re_hy[n] = -(g.inv_mu_hy[n] / omega) *
                             ((g.ex[g.iex(i, j, k + 1)] - g.ex[g.iex(i, j, k)]) / g.dz -
                              (g.ez[g.iez(i + 1, j, k)] - g.ez[g.iez(i, j, k)]) / g.dx);
            }
    for (int k = 0; k < g.nhz_z(); ++k)
        for (int j = 0; j < g.nhz_y(); ++j)
            for (int i = 0; i < g.nhz_x(); ++i) {
                const std::size_t n = g.ihz(i, j, k);
                r.re_hz[n] = -(g.inv_mu_hz[n] / omega) *
                             ((g.ey[g.iey(i + 1, j, k)] - g.ey[g.iey(i, j, k)]) / g.dx -
                              (g.ex[g.iex(i, j + 1, k)] - g.ex[g.iex(i, j, k)]) / g.dy);
            }

    for (int k = 1; k < g.nz; ++k)
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t p = g.iex(i, j, k);
                if (g.kind_ex[p] != NodeKind::Free) continue;
                r.re_ex[p] = (g.inv_eps_ex[p] / omega) *
                             ((g.hz[g.ihz(i, j, k)] - g.hz[g.ihz(i, j - 1, k)]) / g.dy -
                              (g.hy[g.ihy(i, j, k)] - g.hy[g.ihy(i, j, k - 1)]) / g.dz);
            }
    for (int k = 1; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 1; i < g.nx; ++i) {
                const std::size_t p = g.iey(i, j, k);
                if (g.kind_ey[p] != NodeKind::Free) continue;
                r.re_ey[p] = (g.inv_eps_ey[p] / omega) *
                             ((g.hx[g.ihx(i, j, k)] - g.hx[g.ihx(i, j, k - 1)]) / g.dz -
                              (g.hz[g.ihz(i, j, k)] - g.hz[g.ihz(i - 1, j, k)]) / g.dx);
            }
    for (int k = 0; k < g.nz; ++k)
        for (int j = 1; j < g.ny; ++j)
            for (int i = 1; i < g.nx; ++i) {
                const std::size_t p = g.iez(i, j, k);
                if (g.kind_ez[p] != NodeKind::Free) continue;
                r.re_ez[p] = (g.inv_eps_ez[p] / omega) *
                             ((g.hy[g.ihy(i, j, k)] - g.hy[g.ihy(i - 1, j, k)]) / g.dx -
                              (g.hx[g.ihx(i, j, k)] - g.hx[g.ihx(i, j - 1, k)]) / g.dy);
            }
    return r;
}

}  // namespace emwh
