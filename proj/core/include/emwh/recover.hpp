#pragma once

#include <vector>

#include "emwh/grid2d.hpp"
#include "emwh/grid3d.hpp"

namespace emwh {

/// Companion quadrature fields of the converged solution. With sin(w t)
/// forcing the limiting cycle is E(t) = nu_E cos(w t) + E' sin(w t),
/// H(t) = nu_H cos(w t) + H' sin(w t); the primed fields follow from the
/// converged ones through the discrete curls:
///   H' = -(1/(mu w)) curl_h nu_E,   E' = (1/(eps w)) curl_h nu_H.
/// For closed (energy-conserving) problems nu_H = 0 and hence E' = 0.
struct RealParts2D {
    std::vector<double> re_ez;  // zero on nodes without a full curl stencil
    std::vector<double> re_hx, re_hy;
};

struct RealParts3D {
    std::vector<double> re_ex, re_ey, re_ez;
    std::vector<double> re_hx, re_hy, re_hz;
};

/// `g` holds the converged fields (nu_E in the E arrays, nu_H in the H
/// arrays; pass zero H for closed problems).
RealParts2D recover_real(const Grid2D& g, double omega);
RealParts3D recover_real(const Grid3D& g, double omega);

}  // namespace emwh
