#include "emwh/yee2d.hpp"

#include <cmath>
#include <stdexcept>

namespace emwh {

YeeStepper2D::YeeStepper2D(Grid2D grid, Source2D source, BoundarySpec boundary, TimeGrid tg)
    : grid_(std::move(grid)), src_(std::move(source)), bc_(boundary), tg_(tg) {
    has_mur_ = bc_.any(Condition::Mur1, 2);
    for (const auto& t : src_.terms)
        if (!t.jz.empty() && t.jz.size() != grid_.n_ez())
            throw std::invalid_argument("source term jz size does not match grid");
    if (src_.dirichlet && src_.dirichlet->values.size() != grid_.n_ez())
        throw std::invalid_argument("dirichlet values size does not match grid");
    hx_avg_.resize(grid_.n_hx());
    hy_avg_.resize(grid_.n_hy());
}

void YeeStepper2D::update_h(double coef) {
    Grid2D& g = grid_;
    const double cy = coef / g.dy;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const std::size_t n = g.ihx(i, j);
            g.hx[n] -= cy * g.inv_mu_hx[n] * (g.ez[g.iez(i, j + 1)] - g.ez[g.iez(i, j)]);
        }
    const double cx = coef / g.dx;
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t n = g.ihy(i, j);
            g.hy[n] += cx * g.inv_mu_hy[n] * (g.ez[g.iez(i + 1, j)] - g.ez[g.iez(i, j)]);
        }
}

void YeeStepper2D::update_e(int n) {
    Grid2D& g = grid_;
    const double rx = tg_.dt / g.dx;
    const double ry = tg_.dt / g.dy;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const std::size_t p = g.iez(i, j);
            g.ez[p] += g.inv_eps[p] *
                       (rx * (g.hy[g.ihy(i, j)] - g.hy[g.ihy(i - 1, j)]) -
                        ry * (g.hx[g.ihx(i, j)] - g.hx[g.ihx(i, j - 1)]));
        }
    for (const auto& term : src_.terms) {
        if (term.jz.empty()) continue;
        const double amp = tg_.dt * source_amplitude(term.time, term.omega, n, tg_);
        for (int j = 1; j < g.ny; ++j)
            for (int i = 1; i < g.nx; ++i) {
                const std::size_t p = g.iez(i, j);
                g.ez[p] -= g.inv_eps[p] * amp * term.jz[p];
            }
    }
}

void YeeStepper2D::apply_boundary(int level) {
    Grid2D& g = grid_;
    if (has_mur_) {
        // First-order one-way closure: the new boundary value follows the
        // interior neighbor along the inward normal.
        auto mur = [&](int bi, int bj, int ii, int ij, double h) {
            const std::size_t b = g.iez(bi, bj);
            if (g.kind[b] != NodeKind::Free) return;
            const double cdt = g.wave_speed(bi, bj) * tg_.dt;
            const double k = (cdt - h) / (cdt + h);
            const std::size_t in = g.iez(ii, ij);
            g.ez[b] = ez_old_[in] + k * (g.ez[in] - ez_old_[b]);
        };
        if (bc_.face(Face::XLo) == Condition::Mur1)
            for (int j = 1; j < g.ny; ++j) mur(0, j, 1, j, g.dx);
        if (bc_.face(Face::XHi) == Condition::Mur1)
            for (int j = 1; j < g.ny; ++j) mur(g.nx, j, g.nx - 1, j, g.dx);
        if (bc_.face(Face::YLo) == Condition::Mur1)
            for (int i = 1; i < g.nx; ++i) mur(i, 0, i, 1, g.dy);
        if (bc_.face(Face::YHi) == Condition::Mur1)
            for (int i = 1; i < g.nx; ++i) mur(i, g.ny, i, g.ny - 1, g.dy);
        // Corners between two Mur faces use the diagonal neighbor.
        const double hd = std::hypot(g.dx, g.dy);
        auto corner_mur = [&](Face fa, Face fb, int ci, int cj, int ii, int ij) {
            if (bc_.face(fa) == Condition::Mur1 && bc_.face(fb) == Condition::Mur1)
                mur(ci, cj, ii, ij, hd);
        };
        corner_mur(Face::XLo, Face::YLo, 0, 0, 1, 1);
        corner_mur(Face::XHi, Face::YLo, g.nx, 0, g.nx - 1, 1);
        corner_mur(Face::XLo, Face::YHi, 0, g.ny, 1, g.ny - 1);
        corner_mur(Face::XHi, Face::YHi, g.nx, g.ny, g.nx - 1, g.ny - 1);
    }
    g.apply_mask();
    apply_dirichlet(level);
}

void YeeStepper2D::apply_dirichlet(int level) {
    if (!src_.dirichlet) return;
    const auto& d = *src_.dirichlet;
    const double wd = d.modified ? modified_omega(d.omega, tg_.dt) : d.omega;
    const double factor = std::cos(wd * tg_.t(level));
    Grid2D& g = grid_;
    for (std::size_t n = 0; n < g.ez.size(); ++n)
        if (g.kind[n] == NodeKind::Dirichlet) g.ez[n] = d.values[n] * factor;
}

void YeeStepper2D::start(const StateVector& nu) {
    unflatten(nu, grid_);
    grid_.apply_mask();
    apply_dirichlet(0);
    update_h(-tg_.dt / 2.0);  // H^{-1/2}
    if (has_mur_) ez_old_.resize(grid_.n_ez());
}

void YeeStepper2D::step(int n) {
    if (has_mur_) ez_old_ = grid_.ez;
    update_h(tg_.dt);
    update_e(n);
    apply_boundary(n + 1);
}

void YeeStepper2D::run(const StateVector& nu, const Observer2D& observer) {
    start(nu);
    for (int n = 0; n <= tg_.M; ++n) {
        if (observer) {
            hx_prev_ = grid_.hx;
            hy_prev_ = grid_.hy;
        }
        update_h(tg_.dt);  // H^{n+1/2}; at n = M this is the extra half-update
        if (observer) {
            for (std::size_t p = 0; p < hx_avg_.size(); ++p)
                hx_avg_[p] = 0.5 * (grid_.hx[p] + hx_prev_[p]);
            for (std::size_t p = 0; p < hy_avg_.size(); ++p)
                hy_avg_[p] = 0.5 * (grid_.hy[p] + hy_prev_[p]);
            observer(n, Snapshot2D{grid_.ez, hx_avg_, hy_avg_});
        }
        if (n < tg_.M) {
            if (has_mur_) ez_old_ = grid_.ez;
            update_e(n);
            apply_boundary(n + 1);
        }
    }
}

Grid2D evolve(const StateVector& nu, const Grid2D& grid, const Source2D& source,
              const TimeGrid& tg, const BoundarySpec& boundary, const Observer2D& observer) {
    YeeStepper2D stepper(grid, source, boundary, tg);
    stepper.run(nu, observer);
    return stepper.grid();
}

}  // namespace emwh
