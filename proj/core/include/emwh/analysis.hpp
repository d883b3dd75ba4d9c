#pragma once

#include <Eigen/Dense>
#include <vector>

#include "emwh/krylov.hpp"
#include "emwh/problem.hpp"
#include "emwh/waveholtz.hpp"

namespace emwh {

/// Dense realization of I - S, one wave solve per column. Guarded against
/// accidental use on large problems.
Eigen::MatrixXd assemble_dense(const WaveHoltzOperator& op, std::size_t max_dofs = 20000);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // real parts, ascending
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    double condition = 0.0;
    double symmetry_deviation = 0.0;  // ||A - A^T||_inf / ||A||_inf
    bool symmetric = false;
};

SpectrumReport spectrum_report(const Eigen::MatrixXd& A);

/// Discrete eigenpair (m, n) of the constant-coefficient PEC rectangle:
/// lambda is the spatial eigenfrequency of the Yee Laplacian, lambda_tilde
/// the time-discrete frequency actually oscillating in the leapfrog scheme,
///   sin(lambda_tilde dt / 2) = lambda dt / 2.
struct CavityMode {
    int m = 0, n = 0;
    double lambda = 0.0;
    double lambda_tilde = 0.0;
};

/// All interior modes of a constant-material all-PEC rectangle. Throws if the
/// grid has varying materials or embedded scatterers.
std::vector<CavityMode> cavity_modes(const Grid2D& g, const TimeGrid& tg);

/// Relative spectral gap min_j |w^2 - lambda_j^2| / w^2.
double spectral_gap(double omega, const std::vector<CavityMode>& modes);

/// Fixed point of the plain iteration expanded in cavity modes:
/// per mode, nu = w jhat / (eps (wtilde^2 - lambda^2)) with
/// wtilde = sin(w dt/2)/(dt/2). Returns the full Ez node array.
std::vector<double> modal_fixed_point(const Grid2D& g, const TimeGrid& tg, double omega,
                                      const std::vector<double>& jz);

/// Measured fixed-point contraction rate against the rate bound
/// max(1 - 0.3 delta^2, 0.63) implied by the filter transfer function.
struct RateCheck {
    double delta = 0.0;
    double bound = 0.0;
    double measured_rate = 0.0;
    bool hypothesis_ok = false;  // w dt within the regime the bound assumes
    bool satisfied = false;
    std::vector<double> errors;  // ||nu_k - nu_inf|| per iteration
};

RateCheck fixed_point_rate(const Problem2D& p, int iterations = 30, int burn_in = 5);

/// Least-squares slope of log(err) against log(h).
double fit_order(const std::vector<double>& h, const std::vector<double>& err);

}  // namespace emwh
