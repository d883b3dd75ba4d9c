#include "emwh/grid3d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emwh {

int Grid3D::free_nodes() const {
    auto count = [](const std::vector<NodeKind>& k) {
        return static_cast<int>(std::count(k.begin(), k.end(), NodeKind::Free));
    };
    return count(kind_ex) + count(kind_ey) + count(kind_ez);
}

void Grid3D::apply_mask() {
    for (std::size_t n = 0; n < ex.size(); ++n)
        if (kind_ex[n] != NodeKind::Free) ex[n] = 0.0;
    for (std::size_t n = 0; n < ey.size(); ++n)
        if (kind_ey[n] != NodeKind::Free) ey[n] = 0.0;
    for (std::size_t n = 0; n < ez.size(); ++n)
        if (kind_ez[n] != NodeKind::Free) ez[n] = 0.0;
}

void Grid3D::zero_fields() {
    for (auto* f : {&ex, &ey, &ez, &hx, &hy, &hz}) std::fill(f->begin(), f->end(), 0.0);
}

namespace {

// Samples material at (x, y, z) into value/inverse arrays.
template <class Coord>
void sample(std::vector<double>& val, std::vector<double>& inv, int n0, int n1, int n2,
            const Coord& coord, bool eps, const MaterialSpec& m) {
    val.resize(static_cast<std::size_t>(n0) * n1 * n2);
    inv.resize(val.size());
    std::size_t n = 0;
    for (int k = 0; k < n2; ++k)
        for (int j = 0; j < n1; ++j)
            for (int i = 0; i < n0; ++i, ++n) {
                auto [x, y, z] = coord(i, j, k);
                const double v = eps ? m.eps_at(x, y, z) : m.mu_at(x, y, z);
                val[n] = v;
                inv[n] = 1.0 / v;
            }
}

}  // namespace

Grid3D build_grid_3d(const Domain& domain, const MaterialSpec& material,
                     const std::vector<Region>& pec_regions, const BoundarySpec& boundary) {
    Domain d = domain;
    d.dim = 3;
    d.validate();
    material.validate();
    for (const auto& r : pec_regions)
        if (!r.inside(d)) throw std::invalid_argument("pec region lies outside the domain");

    Grid3D g;
    g.domain = d;
    g.nx = d.cells[0];
    g.ny = d.cells[1];
    g.nz = d.cells[2];
    g.dx = d.spacing(0);
    g.dy = d.spacing(1);
    g.dz = d.spacing(2);

    auto at = [&](double i, double j, double k) {
        return std::tuple<double, double, double>{g.x(i), g.y(j), g.z(k)};
    };

    sample(g.eps_ex, g.inv_eps_ex, g.nex_x(), g.nex_y(), g.nex_z(),
           [&](int i, int j, int k) { return at(i + 0.5, j, k); }, true, material);
    sample(g.eps_ey, g.inv_eps_ey, g.ney_x(), g.ney_y(), g.ney_z(),
           [&](int i, int j, int k) { return at(i, j + 0.5, k); }, true, material);
    sample(g.eps_ez, g.inv_eps_ez, g.nez_x(), g.nez_y(), g.nez_z(),
           [&](int i, int j, int k) { return at(i, j, k + 0.5); }, true, material);
    sample(g.mu_hx, g.inv_mu_hx, g.nhx_x(), g.nhx_y(), g.nhx_z(),
           [&](int i, int j, int k) { return at(i, j + 0.5, k + 0.5); }, false, material);
    sample(g.mu_hy, g.inv_mu_hy, g.nhy_x(), g.nhy_y(), g.nhy_z(),
           [&](int i, int j, int k) { return at(i + 0.5, j, k + 0.5); }, false, material);
    sample(g.mu_hz, g.inv_mu_hz, g.nhz_x(), g.nhz_y(), g.nhz_z(),
           [&](int i, int j, int k) { return at(i + 0.5, j + 0.5, k); }, false, material);

    std::vector<double> scratch;
    sample(g.mu_ex, scratch, g.nex_x(), g.nex_y(), g.nex_z(),
           [&](int i, int j, int k) { return at(i + 0.5, j, k); }, false, material);
    sample(g.mu_ey, scratch, g.ney_x(), g.ney_y(), g.ney_z(),
           [&](int i, int j, int k) { return at(i, j + 0.5, k); }, false, material);
    sample(g.mu_ez, scratch, g.nez_x(), g.nez_y(), g.nez_z(),
           [&](int i, int j, int k) { return at(i, j, k + 0.5); }, false, material);

    g.ex.assign(g.eps_ex.size(), 0.0);
    g.ey.assign(g.eps_ey.size(), 0.0);
    g.ez.assign(g.eps_ez.size(), 0.0);
    g.hx.assign(g.mu_hx.size(), 0.0);
    g.hy.assign(g.mu_hy.size(), 0.0);
    g.hz.assign(g.mu_hz.size(), 0.0);
    g.kind_ex.assign(g.ex.size(), NodeKind::Free);
    g.kind_ey.assign(g.ey.size(), NodeKind::Free);
    g.kind_ez.assign(g.ez.size(), NodeKind::Free);

    // Tangential E on reflecting faces. Ex is tangential on y- and z-faces,
    // Ey on x- and z-faces, Ez on x- and y-faces.
    auto forced = [&](Face f) {
        const Condition c = boundary.face(f);
        if (c == Condition::Pec) return NodeKind::Pec;
        if (c == Condition::Dirichlet) return NodeKind::Dirichlet;
        return NodeKind::Free;
    };
    auto mark = [](std::vector<NodeKind>& kind, std::size_t n, NodeKind k) {
        if (k != NodeKind::Free) kind[n] = k;
    };
    for (int k = 0; k < g.nex_z(); ++k)
        for (int j = 0; j < g.nex_y(); ++j)
            for (int i = 0; i < g.nex_x(); ++i) {
                if (j == 0) mark(g.kind_ex, g.iex(i, j, k), forced(Face::YLo));
                if (j == g.ny) mark(g.kind_ex, g.iex(i, j, k), forced(Face::YHi));
                if (k == 0) mark(g.kind_ex, g.iex(i, j, k), forced(Face::ZLo));
                if (k == g.nz) mark(g.kind_ex, g.iex(i, j, k), forced(Face::ZHi));
            }
    for (int k = 0; k < g.ney_z(); ++k)
        for (int j = 0; j < g.ney_y(); ++j)
            for (int i = 0; i < g.ney_x(); ++i) {
                if (i == 0) mark(g.kind_ey, g.iey(i, j, k), forced(Face::XLo));
                if (i == g.nx) mark(g.kind_ey, g.iey(i, j, k), forced(Face::XHi));
                if (k == 0) mark(g.kind_ey, g.iey(i, j, k), forced(Face::ZLo));
                if (k == g.nz) mark(g.kind_ey, g.iey(i, j, k), forced(Face::ZHi));
            }
    for (int k = 0; k < g.nez_z(); ++k)
        for (int j = 0; j < g.nez_y(); ++j)
            for (int i = 0; i < g.nez_x(); ++i) {
                if (i == 0) mark(g.kind_ez, g.iez(i, j, k), forced(Face::XLo));
                if (i == g.nx) mark(g.kind_ez, g.iez(i, j, k), forced(Face::XHi));
                if (j == 0) mark(g.kind_ez, g.iez(i, j, k), forced(Face::YLo));
                if (j == g.ny) mark(g.kind_ez, g.iez(i, j, k), forced(Face::YHi));
            }

    for (const auto& r : pec_regions) {
        for (int k = 0; k < g.nex_z(); ++k)
            for (int j = 0; j < g.nex_y(); ++j)
                for (int i = 0; i < g.nex_x(); ++i)
                    if (r.contains(g.x(i + 0.5), g.y(j), g.z(k)))
                        g.kind_ex[g.iex(i, j, k)] = NodeKind::Pec;
        for (int k = 0; k < g.ney_z(); ++k)
            for (int j = 0; j < g.ney_y(); ++j)
                for (int i = 0; i < g.ney_x(); ++i)
                    if (r.contains(g.x(i), g.y(j + 0.5), g.z(k)))
                        g.kind_ey[g.iey(i, j, k)] = NodeKind::Pec;
        for (int k = 0; k < g.nez_z(); ++k)
            for (int j = 0; j < g.nez_y(); ++j)
                for (int i = 0; i < g.nez_x(); ++i)
                    if (r.contains(g.x(i), g.y(j), g.z(k + 0.5)))
                        g.kind_ez[g.iez(i, j, k)] = NodeKind::Pec;
    }

    return g;
}

double cfl_time_step(const Grid3D& g) {
    double emin = *std::min_element(g.eps_ex.begin(), g.eps_ex.end());
    emin = std::min(emin, *std::min_element(g.eps_ey.begin(), g.eps_ey.end()));
    emin = std::min(emin, *std::min_element(g.eps_ez.begin(), g.eps_ez.end()));
    double mmin = *std::min_element(g.mu_hx.begin(), g.mu_hx.end());
    mmin = std::min(mmin, *std::min_element(g.mu_hy.begin(), g.mu_hy.end()));
    mmin = std::min(mmin, *std::min_element(g.mu_hz.begin(), g.mu_hz.end()));
    const double cmax = 1.0 / std::sqrt(emin * mmin);
    return 1.0 / (cmax * std::sqrt(1.0 / (g.dx * g.dx) + 1.0 / (g.dy * g.dy) +
                                   1.0 / (g.dz * g.dz)));
}

}  // namespace emwh
