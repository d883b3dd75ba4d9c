#include "emwh/yee3d.hpp"

#include <cmath>
#include <stdexcept>

namespace emwh {

YeeStepper3D::YeeStepper3D(Grid3D grid, Source3D source, BoundarySpec boundary, TimeGrid tg)
    : grid_(std::move(grid)), src_(std::move(source)), bc_(boundary), tg_(tg) {
    has_mur_ = bc_.any(Condition::Mur1, 3);
    for (const auto& t : src_.terms) {
        if (!t.jx.empty() && t.jx.size() != grid_.ex.size())
            throw std::invalid_argument("source term jx size does not match grid");
        if (!t.jy.empty() && t.jy.size() != grid_.ey.size())
            throw std::invalid_argument("source term jy size does not match grid");
        if (!t.jz.empty() && t.jz.size() != grid_.ez.size())
            throw std::invalid_argument("source term jz size does not match grid");
    }
    hx_avg_.resize(grid_.hx.size());
    hy_avg_.resize(grid_.hy.size());
    hz_avg_.resize(grid_.hz.size());
}

void YeeStepper3D::update_h(double coef) {
    Grid3D& g = grid_;
    const double cx = coef / g.dx, cy = coef / g.dy, cz = coef / g.dz;
    for (int k = 0; k < g.nhx_z(); ++k)
        for (int j = 0; j < g.nhx_y(); ++j)
            for (int i = 0; i < g.nhx_x(); ++i) {
                const std::size_t n = g.ihx(i, j, k);
                g.hx[n] += g.inv_mu_hx[n] *
                           (cz * (g.ey[g.iey(i, j, k + 1)] - g.ey[g.iey(i, j, k)]) -
                            cy * (g.ez[g.iez(i, j + 1, k)] - g.ez[g.iez(i, j, k)]));
            }
    for (int k = 0; k < g.nhy_z(); ++k)
        for (int j = 0; j < g.nhy_y(); ++j)
            for (int i = 0; i < g.nhy_x(); ++i) {
                const std::size_t n = g.ihy(i, j, k);
                g.hy[n] += g.inv_mu_hy[n] *
                           (cx * (g.ez[g.iez(i + 1, j, k)] - g.ez[g.iez(i, j, k)]) -
                            cz * (g.ex[g.iex(i, j, k + 1)] - g.ex[g.iex(i, j, k)]));
            }
    for (int k = 0; k < g.nhz_z(); ++k)
        for (int j = 0; j < g.nhz_y(); ++j)
            for (int i = 0; i < g.nhz_x(); ++i) {
                const std::size_t n = g.ihz(i, j, k);
                g.hz[n] += g.inv_mu_hz[n] *
                           (cy * (g.ex[g.iex(i, j + 1, k)] - g.ex[g.iex(i, j, k)]) -
                            cx * (g.ey[g.iey(i + 1, j, k)] - g.ey[g.iey(i, j, k)]));
            }
}

void YeeStepper3D::update_e(int n) {
    Grid3D& g = grid_;
    const double rx = tg_.dt / g.dx, ry = tg_.dt / g.dy, rz = tg_.dt / g.dz;
    for (int k = 1; k < g.nz; ++k)
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t p = g.iex(i, j, k);
                g.ex[p] += g.inv_eps_ex[p] *
                           (ry * (g.hz[g.ihz(i, j, k)] - g.hz[g.ihz(i, j - 1, k)]) -
                            rz * (g.hy[g.ihy(i, j, k)] - g.hy[g.ihy(i, j, k - 1)]));
            }
    for (int k = 1; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j)
            for (int i = 1; i < g.nx; ++i) {
                const std::size_t p = g.iey(i, j, k);
                g.ey[p] += g.inv_eps_ey[p] *
                           (rz * (g.hx[g.ihx(i, j, k)] - g.hx[g.ihx(i, j, k - 1)]) -
                            rx * (g.hz[g.ihz(i, j, k)] - g.hz[g.ihz(i - 1, j, k)]));
            }
    for (int k = 0; k < g.nz; ++k)
        for (int j = 1; j < g.ny; ++j)
            for (int i = 1; i < g.nx; ++i) {
                const std::size_t p = g.iez(i, j, k);
                g.ez[p] += g.inv_eps_ez[p] *
                           (rx * (g.hy[g.ihy(i, j, k)] - g.hy[g.ihy(i - 1, j, k)]) -
                            ry * (g.hx[g.ihx(i, j, k)] - g.hx[g.ihx(i, j - 1, k)]));
            }
    for (const auto& term : src_.terms) {
        const double amp = tg_.dt * source_amplitude(term.time, term.omega, n, tg_);
        if (!term.jx.empty())
            for (int k = 1; k < g.nz; ++k)
                for (int j = 1; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i) {
                        const std::size_t p = g.iex(i, j, k);
                        g.ex[p] -= g.inv_eps_ex[p] * amp * term.jx[p];
                    }
        if (!term.jy.empty())
            for (int k = 1; k < g.nz; ++k)
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 1; i < g.nx; ++i) {
                        const std::size_t p = g.iey(i, j, k);
                        g.ey[p] -= g.inv_eps_ey[p] * amp * term.jy[p];
                    }
        if (!term.jz.empty())
            for (int k = 0; k < g.nz; ++k)
                for (int j = 1; j < g.ny; ++j)
                    for (int i = 1; i < g.nx; ++i) {
                        const std::size_t p = g.iez(i, j, k);
                        g.ez[p] -= g.inv_eps_ez[p] * amp * term.jz[p];
                    }
    }
}

void YeeStepper3D::apply_mur() {
    Grid3D& g = grid_;
    const double dt = tg_.dt;
    // One-way closure along the face normal per tangential component.
    auto mur1 = [&](std::vector<double>& e, const std::vector<double>& e_old,
                    const std::vector<NodeKind>& kind, std::size_t b, std::size_t in,
                    double eps, double mu, double h) {
        if (kind[b] != NodeKind::Free) return;
        const double cdt = dt / std::sqrt(eps * mu);
        const double k = (cdt - h) / (cdt + h);
        e[b] = e_old[in] + k * (e[in] - e_old[b]);
    };
    if (bc_.face(Face::XLo) == Condition::Mur1 || bc_.face(Face::XHi) == Condition::Mur1) {
        for (int k = 0; k < g.ney_z(); ++k)
            for (int j = 0; j < g.ney_y(); ++j) {
                if (bc_.face(Face::XLo) == Condition::Mur1)
                    mur1(g.ey, ey_old_, g.kind_ey, g.iey(0, j, k), g.iey(1, j, k),
                         g.eps_ey[g.iey(0, j, k)], g.mu_ey[g.iey(0, j, k)], g.dx);
                if (bc_.face(Face::XHi) == Condition::Mur1)
                    mur1(g.ey, ey_old_, g.kind_ey, g.iey(g.nx, j, k), g.iey(g.nx - 1, j, k),
                         g.eps_ey[g.iey(g.nx, j, k)], g.mu_ey[g.iey(g.nx, j, k)], g.dx);
            }
        for (int k = 0; k < g.nez_z(); ++k)
            for (int j = 0; j < g.nez_y(); ++j) {
                if (bc_.face(Face::XLo) == Condition::Mur1)
                    mur1(g.ez, ez_old_, g.kind_ez, g.iez(0, j, k), g.iez(1, j, k),
                         g.eps_ez[g.iez(0, j, k)], g.mu_ez[g.iez(0, j, k)], g.dx);
                if (bc_.face(Face::XHi) == Condition::Mur1)
                    mur1(g.ez, ez_old_, g.kind_ez, g.iez(g.nx, j, k), g.iez(g.nx - 1, j, k),
                         g.eps_ez[g.iez(g.nx, j, k)], g.mu_ez[g.iez(g.nx, j, k)], g.dx);
            }
    }
    if (bc_.face(Face::YLo) == Condition::Mur1 || bc_.face(Face::YHi) == Condition::Mur1) {
        for (int k = 0; k < g.nex_z(); ++k)
            for (int i = 0; i < g.nex_x(); ++i) {
                if (bc_.face(Face::YLo) == Condition::Mur1)
                    mur1(g.ex, ex_old_, g.kind_ex, g.iex(i, 0, k), g.iex(i, 1, k),
                         g.eps_ex[g.iex(i, 0, k)], g.mu_ex[g.iex(i, 0, k)], g.dy);
                if (bc_.face(Face::YHi) == Condition::Mur1)
                    mur1(g.ex, ex_old_, g.kind_ex, g.iex(i, g.ny, k), g.iex(i, g.ny - 1, k),
                         g.eps_ex[g.iex(i, g.ny, k)], g.mu_ex[g.iex(i, g.ny, k)], g.dy);
            }
        for (int k = 0; k < g.nez_z(); ++k)
            for (int i = 0; i < g.nez_x(); ++i) {
                if (bc_.face(Face::YLo) == Condition::Mur1)
                    mur1(g.ez, ez_old_, g.kind_ez, g.iez(i, 0, k), g.iez(i, 1, k),
                         g.eps_ez[g.iez(i, 0, k)], g.mu_ez[g.iez(i, 0, k)], g.dy);
                if (bc_.face(Face::YHi) == Condition::Mur1)
                    mur1(g.ez, ez_old_, g.kind_ez, g.iez(i, g.ny, k), g.iez(i, g.ny - 1, k),
                         g.eps_ez[g.iez(i, g.ny, k)], g.mu_ez[g.iez(i, g.ny, k)], g.dy);
            }
    }
    if (bc_.face(Face::ZLo) == Condition::Mur1 || bc_.face(Face::ZHi) == Condition::Mur1) {
        for (int j = 0; j < g.nex_y(); ++j)
            for (int i = 0; i < g.nex_x(); ++i) {
                if (bc_.face(Face::ZLo) == Condition::Mur1)
                    mur1(g.ex, ex_old_, g.kind_ex, g.iex(i, j, 0), g.iex(i, j, 1),
                         g.eps_ex[g.iex(i, j, 0)], g.mu_ex[g.iex(i, j, 0)], g.dz);
                if (bc_.face(Face::ZHi) == Condition::Mur1)
                    mur1(g.ex, ex_old_, g.kind_ex, g.iex(i, j, g.nz), g.iex(i, j, g.nz - 1),
                         g.eps_ex[g.iex(i, j, g.nz)], g.mu_ex[g.iex(i, j, g.nz)], g.dz);
            }
        for (int j = 0; j < g.ney_y(); ++j)
            for (int i = 0; i < g.ney_x(); ++i) {
                if (bc_.face(Face::ZLo) == Condition::Mur1)
                    mur1(g.ey, ey_old_, g.kind_ey, g.iey(i, j, 0), g.iey(i, j, 1),
                         g.eps_ey[g.iey(i, j, 0)], g.mu_ey[g.iey(i, j, 0)], g.dz);
                if (bc_.face(Face::ZHi) == Condition::Mur1)
                    mur1(g.ey, ey_old_, g.kind_ey, g.iey(i, j, g.nz), g.iey(i, j, g.nz - 1),
                         g.eps_ey[g.iey(i, j, g.nz)], g.mu_ey[g.iey(i, j, g.nz)], g.dz);
            }
    }
}

void YeeStepper3D::apply_boundary() {
    if (has_mur_) apply_mur();
    grid_.apply_mask();
}

void YeeStepper3D::start(const StateVector& nu) {
    unflatten(nu, grid_);
    grid_.apply_mask();
    update_h(-tg_.dt / 2.0);
    if (has_mur_) {
        ex_old_.resize(grid_.ex.size());
        ey_old_.resize(grid_.ey.size());
        ez_old_.resize(grid_.ez.size());
    }
}

void YeeStepper3D::step(int n) {
    if (has_mur_) {
        ex_old_ = grid_.ex;
        ey_old_ = grid_.ey;
        ez_old_ = grid_.ez;
    }
    update_h(tg_.dt);
    update_e(n);
    apply_boundary();
}

void YeeStepper3D::run(const StateVector& nu, const Observer3D& observer) {
    start(nu);
    for (int n = 0; n <= tg_.M; ++n) {
        if (observer) {
            hx_prev_ = grid_.hx;
            hy_prev_ = grid_.hy;
            hz_prev_ = grid_.hz;
        }
        update_h(tg_.dt);
        if (observer) {
            for (std::size_t p = 0; p < hx_avg_.size(); ++p)
                hx_avg_[p] = 0.5 * (grid_.hx[p] + hx_prev_[p]);
            for (std::size_t p = 0; p < hy_avg_.size(); ++p)
                hy_avg_[p] = 0.5 * (grid_.hy[p] + hy_prev_[p]);
            for (std::size_t p = 0; p < hz_avg_.size(); ++p)
                hz_avg_[p] = 0.5 * (grid_.hz[p] + hz_prev_[p]);
            observer(n, Snapshot3D{grid_.ex, grid_.ey, grid_.ez, hx_avg_, hy_avg_, hz_avg_});
        }
        if (n < tg_.M) {
            if (has_mur_) {
                ex_old_ = grid_.ex;
                ey_old_ = grid_.ey;
                ez_old_ = grid_.ez;
            }
            update_e(n);
            apply_boundary();
        }
    }
}

Grid3D evolve(const StateVector& nu, const Grid3D& grid, const Source3D& source,
              const TimeGrid& tg, const BoundarySpec& boundary, const Observer3D& observer) {
    YeeStepper3D stepper(grid, source, boundary, tg);
    stepper.run(nu, observer);
    return stepper.grid();
}

}  // namespace emwh
