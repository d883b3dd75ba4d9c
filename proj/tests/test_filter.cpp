#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "emwh/filter.hpp"

using namespace emwh;

namespace {

// Composite Simpson quadrature of (2/T) (sum_k cos(w_k t) - 1/4) cos(l t)
// over [0, T], used as an independent check of the closed form.
double beta_quad(double lambda, const std::vector<double>& omegas, double T) {
    auto f = [&](double t) {
        double kernel = -0.25;
        for (double w : omegas) kernel += std::cos(w * t);
        return kernel * std::cos(lambda * t);
    };
    const int n = 200000;
    const double h = T / n;
    double s = f(0.0) + f(T);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return (2.0 / T) * s * h / 3.0;
}

TimeGrid grid_for(const FilterSpec& spec, int M) {
    TimeGrid tg;
    tg.T = spec.window();
    tg.M = M;
    tg.dt = tg.T / M;
    return tg;
}

}  // namespace

TEST_CASE("filter spec validation") {
    FilterSpec s;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // empty
    s.omegas = {2.0, 3.0};
    CHECK_NOTHROW(s.validate());
    CHECK(s.base_omega() == doctest::Approx(1.0));
    s.omegas = {1.0, std::numbers::sqrt2};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // incommensurate
    s.omegas = {-1.0};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.omegas = {2.0};
    s.periods = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.periods = 3;
    CHECK(s.window() == doctest::Approx(3.0 * std::numbers::pi));

    s.quadrature = Quadrature::TrapezoidModified;
    s.forcing = Forcing::Cos;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.forcing = Forcing::Sin;
    CHECK_NOTHROW(s.validate());
    s.omegas = {2.0, 4.0};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // modified is single-frequency
}

TEST_CASE("continuous transfer function closed form") {
    const double w = 5.5;
    CHECK(beta_continuous(w, w) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta_continuous(0.0, w) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(beta_continuous(2.0 * w, w) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.1, 20.0);
    for (int k = 0; k < 20; ++k) {
        const double l = u(rng);
        CHECK(beta_continuous(l, w) ==
              doctest::Approx(beta_quad(l, {w}, 2.0 * std::numbers::pi / w)).epsilon(1e-9));
    }

    // Away from the passband the response is strictly inside the unit disc.
    for (double l : {0.5, 2.0, 8.0, 15.0})
        CHECK(std::abs(beta_continuous(l, w)) < 1.0);

    // Multi-frequency window: one period of the base frequency.
    const std::vector<double> ws{4.0, 6.0};
    for (int k = 0; k < 10; ++k) {
        const double l = u(rng);
        CHECK(beta_continuous(l, ws) ==
              doctest::Approx(beta_quad(l, ws, std::numbers::pi)).epsilon(1e-9));
    }
}

TEST_CASE("discrete weights approach the continuous transfer function") {
    FilterSpec spec;
    spec.omegas = {5.5};
    spec.periods = 1;

    double prev_err = 0.0;
    for (int iref = 0; iref < 3; ++iref) {
        const int M = 40 << iref;
        const TimeGrid tg = grid_for(spec, M);
        const auto w = waveholtz_filter_weights(spec, tg);
        REQUIRE(int(w.size()) == M + 1);
        double err = 0.0;
        for (double l : {0.0, 2.3, 5.5, 9.1})
            err = std::max(err,
                           std::abs(beta_discrete(l, w, tg) - beta_continuous(l, 5.5)));
        if (iref > 0) CHECK(err < 0.3 * prev_err);  // second-order quadrature
        prev_err = err;
    }

    // Endpoint weights carry the trapezoid halves.
    const TimeGrid tg = grid_for(spec, 64);
    const auto w = waveholtz_filter_weights(spec, tg);
    const double scale = 2.0 * tg.dt / tg.T;
    CHECK(w[0] == doctest::Approx(scale * 0.5 * 0.75).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(scale * (std::cos(5.5 * tg.dt) - 0.25)).epsilon(1e-14));
}

TEST_CASE("modified quadrature targets the nominal frequency exactly") {
    FilterSpec spec;
    spec.omegas = {5.5};
    spec.quadrature = Quadrature::TrapezoidModified;
    const TimeGrid tg = grid_for(spec, 37);
    const auto wm = waveholtz_filter_weights(spec, tg);
    const double wbar = modified_omega(5.5, tg.dt);
    // The rescaled kernel makes the discrete filter see cos(w t) data as if it
    // oscillated at wbar: sum_n w_n cos(w t^n)-type sums hit the plain
    // trapezoid of the unmodified kernel against cos(wbar t^n).
    FilterSpec plain = spec;
    plain.quadrature = Quadrature::Trapezoid;
    const auto wp = waveholtz_filter_weights(plain, tg);
    double acc_m = 0.0, acc_p = 0.0;
    for (int n = 0; n <= tg.M; ++n) {
        acc_m += wm[n] * std::cos(wbar * tg.t(n));
        acc_p += wp[n] * std::cos(5.5 * tg.t(n));
    }
    CHECK(acc_m == doctest::Approx(acc_p).epsilon(1e-12));
}

TEST_CASE("modified quadrature rejects kernel poles") {
    // Choose dt so that wbar * t^1 = pi/2 exactly: wbar = pi/2, dt = 1,
    // w = 2 sin(wbar dt / 2) = sqrt(2).
    FilterSpec spec;
    spec.omegas = {std::sqrt(2.0)};
    spec.quadrature = Quadrature::TrapezoidModified;
    TimeGrid tg;
    tg.M = 4;
    tg.dt = 1.0;
    tg.T = 4.0;
    CHECK_THROWS_AS(waveholtz_filter_weights(spec, tg), std::invalid_argument);
}

TEST_CASE("harmonic weights integrate trig products over full periods") {
    const double w = 3.0;
    TimeGrid tg;
    tg.T = 2.0 * std::numbers::pi / w;
    tg.M = 400;
    tg.dt = tg.T / tg.M;
    const auto wc = harmonic_filter_weights(w, tg, false);
    const auto ws = harmonic_filter_weights(w, tg, true);
    double cc = 0.0, cs = 0.0, sc = 0.0;
    for (int n = 0; n <= tg.M; ++n) {
        cc += wc[n] * std::cos(w * tg.t(n));
        cs += wc[n] * std::sin(w * tg.t(n));
        sc += ws[n] * std::sin(w * tg.t(n));
    }
    CHECK(cc == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(cs == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK(sc == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("accumulator is linear and guards its inputs") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> weights(11);
    for (auto& v : weights) v = u(rng);

    const std::size_t nd = 17;
    std::vector<std::vector<double>> xs(11, std::vector<double>(nd)), ys = xs;
    for (auto& x : xs)
        for (auto& v : x) v = u(rng);
    for (auto& y : ys)
        for (auto& v : y) v = u(rng);

    const double a = 0.7, b = -1.3;
    FilterAccumulator fx(weights, nd), fy(weights, nd), fz(weights, nd);
    for (int n = 0; n < 11; ++n) {
        std::vector<double> z(nd);
        for (std::size_t i = 0; i < nd; ++i) z[i] = a * xs[n][i] + b * ys[n][i];
        fx.accumulate(n, xs[n]);
        fy.accumulate(n, ys[n]);
        fz.accumulate(n, z);
    }
    for (std::size_t i = 0; i < nd; ++i)
        CHECK(fz.result()[i] ==
              doctest::Approx(a * fx.result()[i] + b * fy.result()[i]).epsilon(1e-12));

    FilterAccumulator f(weights, nd);
    CHECK_THROWS_AS(f.accumulate(11, xs[0]), std::out_of_range);
    std::vector<double> wrong(nd + 1, 0.0);
    CHECK_THROWS_AS(f.accumulate(0, wrong), std::length_error);
}
