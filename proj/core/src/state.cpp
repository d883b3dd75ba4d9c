#include "emwh/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace emwh {

int dof_count(const Grid2D& g, StateMode mode) {
    int n = g.free_nodes();
    if (mode == StateMode::Full) n += static_cast<int>(g.n_hx() + g.n_hy());
    return n;
}

int dof_count(const Grid3D& g, StateMode mode) {
    int n = g.free_nodes();
    if (mode == StateMode::Full)
        n += static_cast<int>(g.hx.size() + g.hy.size() + g.hz.size());
    return n;
}

StateVector flatten(const Grid2D& g, StateMode mode) {
    StateVector v;
    v.mode = mode;
    v.data.reserve(dof_count(g, mode));
    for (std::size_t n = 0; n < g.ez.size(); ++n)
        if (g.kind[n] == NodeKind::Free) v.data.push_back(g.ez[n]);
    if (mode == StateMode::Full) {
        v.data.insert(v.data.end(), g.hx.begin(), g.hx.end());
        v.data.insert(v.data.end(), g.hy.begin(), g.hy.end());
    }
    return v;
}

void unflatten(const StateVector& v, Grid2D& g) {
    if (v.data.size() != static_cast<std::size_t>(dof_count(g, v.mode)))
        throw std::length_error("state vector length does not match grid layout");
    std::size_t p = 0;
    for (std::size_t n = 0; n < g.ez.size(); ++n)
        g.ez[n] = (g.kind[n] == NodeKind::Free) ? v.data[p++] : 0.0;
    if (v.mode == StateMode::Full) {
        std::copy_n(v.data.begin() + p, g.hx.size(), g.hx.begin());
        p += g.hx.size();
        std::copy_n(v.data.begin() + p, g.hy.size(), g.hy.begin());
    } else {
        std::fill(g.hx.begin(), g.hx.end(), 0.0);
        std::fill(g.hy.begin(), g.hy.end(), 0.0);
    }
}

StateVector flatten(const Grid3D& g, StateMode mode) {
    StateVector v;
    v.mode = mode;
    v.data.reserve(dof_count(g, mode));
    auto push = [&](const std::vector<double>& f, const std::vector<NodeKind>& kind) {
        for (std::size_t n = 0; n < f.size(); ++n)
            if (kind[n] == NodeKind::Free) v.data.push_back(f[n]);
    };
    push(g.ex, g.kind_ex);
    push(g.ey, g.kind_ey);
    push(g.ez, g.kind_ez);
    if (mode == StateMode::Full) {
        v.data.insert(v.data.end(), g.hx.begin(), g.hx.end());
        v.data.insert(v.data.end(), g.hy.begin(), g.hy.end());
        v.data.insert(v.data.end(), g.hz.begin(), g.hz.end());
    }
    return v;
}

void unflatten(const StateVector& v, Grid3D& g) {
    if (v.data.size() != static_cast<std::size_t>(dof_count(g, v.mode)))
        throw std::length_error("state vector length does not match grid layout");
    std::size_t p = 0;
    auto pull = [&](std::vector<double>& f, const std::vector<NodeKind>& kind) {
        for (std::size_t n = 0; n < f.size(); ++n)
            f[n] = (kind[n] == NodeKind::Free) ? v.data[p++] : 0.0;
    };
    pull(g.ex, g.kind_ex);
    pull(g.ey, g.kind_ey);
    pull(g.ez, g.kind_ez);
    if (v.mode == StateMode::Full) {
        for (auto* f : {&g.hx, &g.hy, &g.hz}) {
            std::copy_n(v.data.begin() + p, f->size(), f->begin());
            p += f->size();
        }
    } else {
        for (auto* f : {&g.hx, &g.hy, &g.hz}) std::fill(f->begin(), f->end(), 0.0);
    }
}

}  // namespace emwh
