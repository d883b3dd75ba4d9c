#pragma once

namespace emwh {

/// Polynomial reference field on [0,1]^2 that vanishes (with its gradient)
/// on the boundary: 16 x^2 (1-x)^2 y^2 (1-y)^2.
inline double manufactured_poly(double x, double y) {
    const double X = x * x * (1.0 - x) * (1.0 - x);
    const double Y = y * y * (1.0 - y) * (1.0 - y);
    return 16.0 * X * Y;
}

inline double manufactured_poly_laplacian(double x, double y) {
    const double X = x * x * (1.0 - x) * (1.0 - x);
    const double Y = y * y * (1.0 - y) * (1.0 - y);
    const double Xpp = 2.0 - 12.0 * x + 12.0 * x * x;
    const double Ypp = 2.0 - 12.0 * y + 12.0 * y * y;
    return 16.0 * (Xpp * Y + X * Ypp);
}

/// Current density that makes `manufactured_poly` the exact continuous
/// frequency-domain solution in vacuum: J = (w^2 E + lap E) / w.
inline double manufactured_poly_current(double omega, double x, double y) {
    return (omega * omega * manufactured_poly(x, y) + manufactured_poly_laplacian(x, y)) /
           omega;
}

/// Harmonic (laplacian-free) reference field used with matching boundary
/// data; its current is simply w (x + y).
inline double manufactured_affine(double x, double y) { return x + y; }

inline double manufactured_affine_current(double omega, double x, double y) {
    return omega * (x + y);
}

}  // namespace emwh
