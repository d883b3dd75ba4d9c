#include "emwh/krylov.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace emwh {

namespace {

double nrm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(double a, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// One GMRES cycle starting from x; returns true on convergence.
bool gmres_cycle(const LinearOperator& A, const std::vector<double>& b, std::vector<double>& x,
                 double bnorm, const KrylovOptions& opts, int max_dim, SolveReport& rep) {
    std::vector<double> r = A(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    const double rnorm = nrm2(r);
    if (rnorm / bnorm <= opts.tol) {
        rep.converged = true;
        return true;
    }

    std::vector<std::vector<double>> V;
    V.push_back(r);
    for (double& v : V[0]) v /= rnorm;

    // Hessenberg columns and the Givens-rotated least-squares data.
    std::vector<std::vector<double>> H;
    std::vector<double> cs, sn, g;
    g.push_back(rnorm);

    int k = 0;
    bool done = false;
    while (k < max_dim && rep.iterations < opts.max_iters && !done) {
        std::vector<double> w = A(V[k]);
        std::vector<double> h(k + 2, 0.0);
        const double wnorm0 = nrm2(w);
        for (int i = 0; i <= k; ++i) {
            h[i] = dot(w, V[i]);
            axpy(-h[i], V[i], w);
        }
        // Second pass when the projection removed most of w.
        if (nrm2(w) < 1e-8 * wnorm0) {
            for (int i = 0; i <= k; ++i) {
                const double c = dot(w, V[i]);
                h[i] += c;
                axpy(-c, V[i], w);
            }
        }
        h[k + 1] = nrm2(w);

        // Apply the accumulated rotations, then a new one to annihilate h[k+1].
        for (int i = 0; i < k; ++i) {
            const double t = cs[i] * h[i] + sn[i] * h[i + 1];
            h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
            h[i] = t;
        }
        const double denom = std::hypot(h[k], h[k + 1]);
        cs.push_back(denom > 0.0 ? h[k] / denom : 1.0);
        sn.push_back(denom > 0.0 ? h[k + 1] / denom : 0.0);
        h[k] = denom;
        const double hk1 = h[k + 1];
        h[k + 1] = 0.0;
        g.push_back(-sn[k] * g[k]);
        g[k] *= cs[k];
        H.push_back(std::move(h));

        ++rep.iterations;
        const double res = std::abs(g[k + 1]) / bnorm;
        rep.residual_history.push_back(res);
        if (res <= opts.tol) done = true;

        if (!done) {
            if (hk1 == 0.0) {
                done = true;  // lucky breakdown: the Krylov space is invariant
            } else {
                for (double& v : w) v /= hk1;
                V.push_back(std::move(w));
            }
        }
        ++k;
    }

    // Back substitution for the least-squares coefficients.
    std::vector<double> y(k, 0.0);
    for (int i = k - 1; i >= 0; --i) {
        double s = g[i];
        for (int j = i + 1; j < k; ++j) s -= H[j][i] * y[j];
        y[i] = s / H[i][i];
    }
    for (int i = 0; i < k; ++i) axpy(y[i], V[i], x);

    rep.converged = !rep.residual_history.empty() && rep.residual_history.back() <= opts.tol;
    return rep.converged;
}

void finish(const LinearOperator& A, const std::vector<double>& b, double bnorm,
            SolveReport& rep) {
    std::vector<double> r = A(rep.nu);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    rep.true_residual = nrm2(r) / bnorm;
}

}  // namespace

SolveReport gmres(const LinearOperator& A, const std::vector<double>& b,
                  const KrylovOptions& opts) {
    Timer timer;
    SolveReport rep;
    rep.method = "gmres";
    rep.nu.assign(b.size(), 0.0);
    const double bnorm = nrm2(b);
    if (bnorm == 0.0) {
        rep.converged = true;
        rep.wall_seconds = timer.seconds();
        return rep;
    }
    const int max_dim = opts.restart > 0 ? opts.restart : opts.max_iters;
    while (rep.iterations < opts.max_iters) {
        if (gmres_cycle(A, b, rep.nu, bnorm, opts, max_dim, rep)) break;
        if (opts.restart <= 0) break;
    }
    finish(A, b, bnorm, rep);
    rep.wall_seconds = timer.seconds();
    return rep;
}

SolveReport cg(const LinearOperator& A, const std::vector<double>& b,
               const KrylovOptions& opts) {
    Timer timer;
    SolveReport rep;
    rep.method = "cg";
    rep.nu.assign(b.size(), 0.0);
    const double bnorm = nrm2(b);
    if (bnorm == 0.0) {
        rep.converged = true;
        rep.wall_seconds = timer.seconds();
        return rep;
    }
    std::vector<double> r = b;
    std::vector<double> p = r;
    double rr = dot(r, r);
    while (rep.iterations < opts.max_iters) {
        const std::vector<double> Ap = A(p);
        const double pAp = dot(p, Ap);
        if (!(pAp > 0.0))
            throw std::runtime_error(
                "cg: non-positive curvature encountered; the iteration operator is not "
                "symmetric positive definite (open boundaries or cos forcing require gmres)");
        const double alpha = rr / pAp;
        axpy(alpha, p, rep.nu);
        axpy(-alpha, Ap, r);
        const double rr_new = dot(r, r);
        ++rep.iterations;
        const double res = std::sqrt(rr_new) / bnorm;
        rep.residual_history.push_back(res);
        if (res <= opts.tol) {
            rep.converged = true;
            break;
        }
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
    }
    finish(A, b, bnorm, rep);
    rep.wall_seconds = timer.seconds();
    return rep;
}

namespace {

SolveReport operator_solve(const WaveHoltzOperator& op, const KrylovOptions& opts, bool use_cg) {
    if (use_cg && !op.symmetric_positive_definite())
        throw std::invalid_argument(
            "cg_solve: problem is not energy conserving; use gmres_solve");
    const long before = op.wave_solves();
    LinearOperator A = [&op](const std::vector<double>& v) { return op.apply_i_minus_s(v); };
    SolveReport rep = use_cg ? cg(A, op.rhs(), opts) : gmres(A, op.rhs(), opts);
    rep.wave_solves = op.wave_solves() - before;
    return rep;
}

}  // namespace

SolveReport cg_solve(const WaveHoltzOperator& op, const KrylovOptions& opts) {
    return operator_solve(op, opts, true);
}

SolveReport gmres_solve(const WaveHoltzOperator& op, const KrylovOptions& opts) {
    return operator_solve(op, opts, false);
}

SolveReport waveholtz_solve(const WaveHoltzOperator& op, const KrylovOptions& opts) {
    return operator_solve(op, opts, op.symmetric_positive_definite());
}

SolveReport fixed_point_solve(const WaveHoltzOperator& op, const KrylovOptions& opts) {
    Timer timer;
    SolveReport rep;
    rep.method = "fixed-point";
    const long before = op.wave_solves();
    const double bnorm = nrm2(op.rhs());
    rep.nu.assign(op.size(), 0.0);
    if (bnorm == 0.0) {
        rep.converged = true;
        rep.wall_seconds = timer.seconds();
        return rep;
    }
    while (rep.iterations < opts.max_iters) {
        std::vector<double> next = op.apply_pi(rep.nu);
        double diff = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            const double d = next[i] - rep.nu[i];
            diff += d * d;
        }
        rep.nu = std::move(next);
        ++rep.iterations;
        const double res = std::sqrt(diff) / bnorm;
        rep.residual_history.push_back(res);
        if (res <= opts.tol) {
            rep.converged = true;
            break;
        }
    }
    rep.true_residual = rep.residual_history.empty() ? 0.0 : rep.residual_history.back();
    rep.wave_solves = op.wave_solves() - before;
    rep.wall_seconds = timer.seconds();
    return rep;
}

}  // namespace emwh
