#include "emwh/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emwh {

Eigen::MatrixXd assemble_dense(const WaveHoltzOperator& op, std::size_t max_dofs) {
    const std::size_t n = op.size();
    if (n > max_dofs)
        throw std::invalid_argument("assemble_dense: problem too large for a dense matrix");
    Eigen::MatrixXd A(n, n);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const std::vector<double> col = op.apply_i_minus_s(e);
        for (std::size_t i = 0; i < n; ++i) A(i, j) = col[i];
        e[j] = 0.0;
    }
    return A;
}

SpectrumReport spectrum_report(const Eigen::MatrixXd& A) {
    SpectrumReport rep;
    const double anorm = A.cwiseAbs().rowwise().sum().maxCoeff();
    const double dev = (A - A.transpose()).cwiseAbs().rowwise().sum().maxCoeff();
    rep.symmetry_deviation = anorm > 0.0 ? dev / anorm : 0.0;
    rep.symmetric = rep.symmetry_deviation < 1e-10;

    if (rep.symmetric) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
        rep.eigenvalues.assign(es.eigenvalues().data(),
                               es.eigenvalues().data() + es.eigenvalues().size());
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(A);
        for (int i = 0; i < es.eigenvalues().size(); ++i)
            rep.eigenvalues.push_back(es.eigenvalues()[i].real());
        std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
    }
    if (!rep.eigenvalues.empty()) {
        rep.min_eigenvalue = rep.eigenvalues.front();
        rep.max_eigenvalue = rep.eigenvalues.back();
        double amin = std::abs(rep.eigenvalues.front());
        double amax = amin;
        for (double e : rep.eigenvalues) {
            amin = std::min(amin, std::abs(e));
            amax = std::max(amax, std::abs(e));
        }
        rep.condition = amin > 0.0 ? amax / amin : 0.0;
    }
    return rep;
}

namespace {

void require_uniform_pec_box(const Grid2D& g) {
    for (double e : g.eps)
        if (e != g.eps[0])
            throw std::invalid_argument("cavity analysis needs constant materials");
    for (double m : g.mu_hx)
        if (m != g.mu_hx[0])
            throw std::invalid_argument("cavity analysis needs constant materials");
    for (double m : g.mu_hy)
        if (m != g.mu_hx[0])
            throw std::invalid_argument("cavity analysis needs constant materials");
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const bool edge = i == 0 || i == g.nx || j == 0 || j == g.ny;
            const NodeKind k = g.kind[g.iez(i, j)];
            if (edge && k != NodeKind::Pec)
                throw std::invalid_argument("cavity analysis needs an all-PEC boundary");
            if (!edge && k != NodeKind::Free)
                throw std::invalid_argument("cavity analysis needs an empty interior");
        }
}

}  // namespace

std::vector<CavityMode> cavity_modes(const Grid2D& g, const TimeGrid& tg) {
    require_uniform_pec_box(g);
    const double c2 = 1.0 / (g.eps[0] * g.mu_hx[0]);
    std::vector<CavityMode> modes;
    modes.reserve(static_cast<std::size_t>(g.nx - 1) * (g.ny - 1));
    const double pi = std::numbers::pi;
    for (int m = 1; m < g.nx; ++m)
        for (int n = 1; n < g.ny; ++n) {
            const double sx = 2.0 / g.dx * std::sin(m * pi / (2.0 * g.nx));
            const double sy = 2.0 / g.dy * std::sin(n * pi / (2.0 * g.ny));
            CavityMode mode;
            mode.m = m;
            mode.n = n;
            mode.lambda = std::sqrt(c2 * (sx * sx + sy * sy));
            const double s = mode.lambda * tg.dt / 2.0;
            if (s > 1.0)
                throw std::invalid_argument("cavity analysis: time step exceeds stability");
            mode.lambda_tilde = 2.0 / tg.dt * std::asin(s);
            modes.push_back(mode);
        }
    return modes;
}

double spectral_gap(double omega, const std::vector<CavityMode>& modes) {
    double gap = std::numeric_limits<double>::infinity();
    const double w2 = omega * omega;
    for (const auto& m : modes)
        gap = std::min(gap, std::abs(w2 - m.lambda * m.lambda) / w2);
    return gap;
}

std::vector<double> modal_fixed_point(const Grid2D& g, const TimeGrid& tg, double omega,
                                      const std::vector<double>& jz) {
    require_uniform_pec_box(g);
    if (jz.size() != g.n_ez())
        throw std::length_error("modal_fixed_point: source length mismatch");
    const int nx = g.nx, ny = g.ny;
    const double pi = std::numbers::pi;

    Eigen::MatrixXd J(nx - 1, ny - 1);
    for (int j = 1; j < ny; ++j)
        for (int i = 1; i < nx; ++i) J(i - 1, j - 1) = jz[g.iez(i, j)];

    Eigen::MatrixXd Sx(nx - 1, nx - 1), Sy(ny - 1, ny - 1);
    for (int i = 1; i < nx; ++i)
        for (int m = 1; m < nx; ++m) Sx(i - 1, m - 1) = std::sin(m * pi * i / double(nx));
    for (int j = 1; j < ny; ++j)
        for (int n = 1; n < ny; ++n) Sy(j - 1, n - 1) = std::sin(n * pi * j / double(ny));

    Eigen::MatrixXd Jhat = (4.0 / (double(nx) * ny)) * Sx.transpose() * J * Sy;

    const double eps = g.eps[0];
    const double c2 = 1.0 / (eps * g.mu_hx[0]);
    const double wt = std::sin(omega * tg.dt / 2.0) / (tg.dt / 2.0);
    Eigen::MatrixXd C(nx - 1, ny - 1);
    for (int m = 1; m < nx; ++m)
        for (int n = 1; n < ny; ++n) {
            const double sx = 2.0 / g.dx * std::sin(m * pi / (2.0 * nx));
            const double sy = 2.0 / g.dy * std::sin(n * pi / (2.0 * ny));
            const double lam2 = c2 * (sx * sx + sy * sy);
            C(m - 1, n - 1) = omega * Jhat(m - 1, n - 1) / (eps * (wt * wt - lam2));
        }
    Eigen::MatrixXd Nu = Sx * C * Sy.transpose();

    std::vector<double> nu(g.n_ez(), 0.0);
    for (int j = 1; j < ny; ++j)
        for (int i = 1; i < nx; ++i) nu[g.iez(i, j)] = Nu(i - 1, j - 1);
    return nu;
}

RateCheck fixed_point_rate(const Problem2D& p, int iterations, int burn_in) {
    p.validate();
    if (p.filter.mode != StateMode::EnergyConserving || p.filter.omegas.size() != 1)
        throw std::invalid_argument(
            "fixed_point_rate: needs a closed single-frequency sin-forced problem");
    if (p.source.terms.size() != 1 || p.source.terms[0].jz.empty())
        throw std::invalid_argument("fixed_point_rate: needs a single volume source");

    const double omega = p.filter.omegas[0];
    const auto modes = cavity_modes(p.grid, p.time);

    RateCheck rc;
    rc.delta = spectral_gap(omega, modes);
    rc.bound = std::max(1.0 - 0.3 * rc.delta * rc.delta, 0.63);
    rc.hypothesis_ok = omega * p.time.dt <= std::min(rc.delta, 1.0);

    const std::vector<double> nu_inf_full =
        modal_fixed_point(p.grid, p.time, omega, p.source.terms[0].jz);
    std::vector<double> nu_inf;
    nu_inf.reserve(dof_count(p.grid, p.filter.mode));
    for (std::size_t n = 0; n < nu_inf_full.size(); ++n)
        if (p.grid.kind[n] == NodeKind::Free) nu_inf.push_back(nu_inf_full[n]);

    WaveHoltzOperator op(p);
    std::vector<double> nu(op.size(), 0.0);
    auto error = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            const double d = nu[i] - nu_inf[i];
            s += d * d;
        }
        return std::sqrt(s);
    };
    rc.errors.push_back(error());
    for (int k = 0; k < iterations; ++k) {
        nu = op.apply_pi(nu);
        rc.errors.push_back(error());
    }

    const double floor = 1e-12 * rc.errors.front();
    rc.measured_rate = 0.0;
    for (int k = burn_in; k + 1 < static_cast<int>(rc.errors.size()); ++k) {
        if (rc.errors[k] <= floor || rc.errors[k + 1] <= floor) break;
        rc.measured_rate = std::max(rc.measured_rate, rc.errors[k + 1] / rc.errors[k]);
    }
    rc.satisfied = rc.measured_rate > 0.0 && rc.measured_rate <= rc.bound;
    return rc;
}

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
    if (h.size() != err.size() || h.size() < 2)
        throw std::invalid_argument("fit_order: need matching lists of length >= 2");
    const int n = static_cast<int>(h.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace emwh
