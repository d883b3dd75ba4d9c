#pragma once

#include <functional>
#include <string>
#include <vector>

#include "emwh/waveholtz.hpp"

namespace emwh {

using LinearOperator = std::function<std::vector<double>(const std::vector<double>&)>;

struct KrylovOptions {
    double tol = 1e-8;   // relative residual target
    int max_iters = 200;
    int restart = 0;     // gmres restart length; 0 = unrestarted
};

struct SolveReport {
    std::string method;
    std::vector<double> nu;
    int iterations = 0;
    std::vector<double> residual_history;  // relative, one entry per iteration
    bool converged = false;
    double true_residual = 0.0;  // ||b - A nu|| / ||b||, recomputed at the end
    long wave_solves = 0;
    double wall_seconds = 0.0;
};

/// Unrestarted (or restarted) GMRES with modified Gram-Schmidt and a second
/// orthogonalization pass when cancellation is detected.
SolveReport gmres(const LinearOperator& A, const std::vector<double>& b,
                  const KrylovOptions& opts);

/// Conjugate gradients. Throws std::runtime_error on non-positive curvature,
/// which signals that the operator is not symmetric positive definite.
SolveReport cg(const LinearOperator& A, const std::vector<double>& b,
               const KrylovOptions& opts);

/// Solve (I - S) nu = Pi 0 for the given iteration operator.
SolveReport cg_solve(const WaveHoltzOperator& op, const KrylovOptions& opts = {});
SolveReport gmres_solve(const WaveHoltzOperator& op, const KrylovOptions& opts = {});

/// Plain fixed-point iteration nu <- Pi nu, with relative residual
/// ||Pi nu - nu|| / ||Pi 0||.
SolveReport fixed_point_solve(const WaveHoltzOperator& op, const KrylovOptions& opts = {});

/// CG when the operator is symmetric positive definite, GMRES otherwise.
SolveReport waveholtz_solve(const WaveHoltzOperator& op, const KrylovOptions& opts = {});

}  // namespace emwh
