#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace emwh {

/// Axis-aligned rectangular computational domain in 1-3 dimensions.
struct Domain {
    int dim = 2;
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
    std::array<int, 3> cells{1, 1, 1};

    double spacing(int axis) const { return (hi[axis] - lo[axis]) / cells[axis]; }

    void validate() const {
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("domain: dim must be 2 or 3");
        for (int a = 0; a < dim; ++a) {
            if (!(hi[a] > lo[a]))
                throw std::invalid_argument("domain: upper corner must exceed lower corner");
            if (cells[a] < 2)
                throw std::invalid_argument("domain: need at least 2 cells per axis");
        }
    }
};

/// Axis-aligned box or circle/sphere used for material and PEC regions.
/// Membership is tested by point inclusion at staggered sample locations.
struct Region {
    enum class Shape { Box, Circle };
    Shape shape = Shape::Box;
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{0.0, 0.0, 0.0};
    std::array<double, 3> center{0.0, 0.0, 0.0};
    double radius = 0.0;

    static Region box(std::array<double, 3> lo_, std::array<double, 3> hi_) {
        Region r;
        r.shape = Shape::Box;
        r.lo = lo_;
        r.hi = hi_;
        return r;
    }
    static Region circle(std::array<double, 3> c, double radius_) {
        Region r;
        r.shape = Shape::Circle;
        r.center = c;
        r.radius = radius_;
        return r;
    }

    bool contains(double x, double y, double z = 0.0) const {
        if (shape == Shape::Box) {
            return x >= lo[0] && x <= hi[0] && y >= lo[1] && y <= hi[1] && z >= lo[2] &&
                   z <= hi[2];
        }
        const double dx = x - center[0], dy = y - center[1], dz = z - center[2];
        return dx * dx + dy * dy + dz * dz <= radius * radius;
    }

    /// Region must lie inside the domain (with a small tolerance so regions
    /// flush with the boundary are accepted).
    bool inside(const Domain& d) const {
        const double tol = 1e-12;
        auto in = [&](double x, int a) {
            return x >= d.lo[a] - tol - 1e-9 * (d.hi[a] - d.lo[a]) &&
                   x <= d.hi[a] + tol + 1e-9 * (d.hi[a] - d.lo[a]);
        };
        if (shape == Shape::Box) {
            for (int a = 0; a < d.dim; ++a)
                if (!in(lo[a], a) || !in(hi[a], a)) return false;
            return true;
        }
        for (int a = 0; a < d.dim; ++a)
            if (!in(center[a] - radius, a) || !in(center[a] + radius, a)) return false;
        return true;
    }
};

/// Piecewise-constant material description: a background (eps, mu) overridden
/// inside listed regions. Sampling is pointwise at the staggered location.
struct MaterialRegion {
    Region region;
    double eps = 1.0;
    double mu = 1.0;
};

struct MaterialSpec {
    double eps = 1.0;
    double mu = 1.0;
    std::vector<MaterialRegion> regions;

    double eps_at(double x, double y, double z = 0.0) const {
        double v = eps;
        for (const auto& r : regions)
            if (r.region.contains(x, y, z)) v = r.eps;
        return v;
    }
    double mu_at(double x, double y, double z = 0.0) const {
        double v = mu;
        for (const auto& r : regions)
            if (r.region.contains(x, y, z)) v = r.mu;
        return v;
    }

    /// Fastest wave speed 1/sqrt(eps*mu) over background and all regions.
    double max_wave_speed() const {
        double c = 1.0 / std::sqrt(eps * mu);
        for (const auto& r : regions) c = std::max(c, 1.0 / std::sqrt(r.eps * r.mu));
        return c;
    }

    void validate() const {
        if (!(eps > 0.0) || !(mu > 0.0))
            throw std::invalid_argument("material: eps and mu must be positive");
        for (const auto& r : regions)
            if (!(r.eps > 0.0) || !(r.mu > 0.0))
                throw std::invalid_argument("material: region eps and mu must be positive");
    }
};

}  // namespace emwh
