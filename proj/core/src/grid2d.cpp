#include "emwh/grid2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emwh {

int Grid2D::free_nodes() const {
    return static_cast<int>(std::count(kind.begin(), kind.end(), NodeKind::Free));
}

void Grid2D::apply_mask() {
    for (std::size_t n = 0; n < ez.size(); ++n)
        if (kind[n] != NodeKind::Free) ez[n] = 0.0;
}

void Grid2D::zero_fields() {
    std::fill(ez.begin(), ez.end(), 0.0);
    std::fill(hx.begin(), hx.end(), 0.0);
    std::fill(hy.begin(), hy.end(), 0.0);
}

double Grid2D::wave_speed(int i, int j) const {
    const std::size_t n = iez(i, j);
    return 1.0 / std::sqrt(eps[n] * mu_node[n]);
}

Grid2D build_grid_2d(const Domain& domain, const MaterialSpec& material,
                     const std::vector<Region>& pec_regions, const BoundarySpec& boundary) {
    Domain d = domain;
    d.dim = 2;
    d.validate();
    material.validate();
    for (const auto& r : pec_regions)
        if (!r.inside(d)) throw std::invalid_argument("pec region lies outside the domain");

    Grid2D g;
    g.domain = d;
    g.nx = d.cells[0];
    g.ny = d.cells[1];
    g.dx = d.spacing(0);
    g.dy = d.spacing(1);

    g.ez.assign(g.n_ez(), 0.0);
    g.hx.assign(g.n_hx(), 0.0);
    g.hy.assign(g.n_hy(), 0.0);
    g.kind.assign(g.n_ez(), NodeKind::Free);

    g.eps.resize(g.n_ez());
    g.inv_eps.resize(g.n_ez());
    g.mu_node.resize(g.n_ez());
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const double e = material.eps_at(g.x(i), g.y(j));
            g.eps[g.iez(i, j)] = e;
            g.inv_eps[g.iez(i, j)] = 1.0 / e;
            g.mu_node[g.iez(i, j)] = material.mu_at(g.x(i), g.y(j));
        }

    g.mu_hx.resize(g.n_hx());
    g.inv_mu_hx.resize(g.n_hx());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const double m = material.mu_at(g.x(i), g.y(j + 0.5));
            g.mu_hx[g.ihx(i, j)] = m;
            g.inv_mu_hx[g.ihx(i, j)] = 1.0 / m;
        }

    g.mu_hy.resize(g.n_hy());
    g.inv_mu_hy.resize(g.n_hy());
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double m = material.mu_at(g.x(i + 0.5), g.y(j));
            g.mu_hy[g.ihy(i, j)] = m;
            g.inv_mu_hy[g.ihy(i, j)] = 1.0 / m;
        }

    // Face conditions mark the boundary rings; a PEC or Dirichlet face owns
    // its corners, so a corner shared with a Mur face stays forced.
    auto mark_face = [&](Face f, NodeKind k) {
        switch (f) {
            case Face::XLo:
                for (int j = 0; j <= g.ny; ++j) g.kind[g.iez(0, j)] = k;
                break;
            case Face::XHi:
                for (int j = 0; j <= g.ny; ++j) g.kind[g.iez(g.nx, j)] = k;
                break;
            case Face::YLo:
                for (int i = 0; i <= g.nx; ++i) g.kind[g.iez(i, 0)] = k;
                break;
            case Face::YHi:
                for (int i = 0; i <= g.nx; ++i) g.kind[g.iez(i, g.ny)] = k;
                break;
            default:
                break;
        }
    };
    for (Face f : {Face::XLo, Face::XHi, Face::YLo, Face::YHi}) {
        const Condition c = boundary.face(f);
        if (c == Condition::Pec) mark_face(f, NodeKind::Pec);
        if (c == Condition::Dirichlet) mark_face(f, NodeKind::Dirichlet);
    }

    // Embedded scatterers: rasterize by node inclusion.
    for (const auto& r : pec_regions)
        for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i)
                if (r.contains(g.x(i), g.y(j))) g.kind[g.iez(i, j)] = NodeKind::Pec;

    return g;
}

double cfl_time_step(const Grid2D& g) {
    double cmax = 0.0;
    for (std::size_t n = 0; n < g.eps.size(); ++n)
        cmax = std::max(cmax, 1.0 / std::sqrt(g.eps[n] * g.mu_node[n]));
    return 1.0 / (cmax * std::sqrt(1.0 / (g.dx * g.dx) + 1.0 / (g.dy * g.dy)));
}

}  // namespace emwh
