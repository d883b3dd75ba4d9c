#pragma once

#include <variant>
#include <vector>

#include "emwh/problem.hpp"

namespace emwh {

/// Matrix-free iteration operator. One application of Pi is one wave solve
/// over the filter window; the affine map splits as
///   Pi nu = S nu + Pi 0,
/// and the frequency-domain solution is the fixed point, i.e. the solution of
/// (I - S) nu = Pi 0. For closed problems with sin forcing (EnergyConserving
/// state) I - S is symmetric positive definite; with outflow faces it is
/// positive definite but not symmetric.
class WaveHoltzOperator {
  public:
    explicit WaveHoltzOperator(Problem2D p);
    explicit WaveHoltzOperator(Problem3D p);

    std::size_t size() const { return size_; }
    StateMode mode() const;
    /// True when cg applies: the reduced energy-conserving state driven at a
    /// single frequency. The combined multi-frequency kernel can push some
    /// eigenvalues of I - S below zero, so it is excluded.
    bool symmetric_positive_definite() const;

    /// Pi nu: filtered evolution from initial state nu.
    std::vector<double> apply_pi(const std::vector<double>& nu) const;

    /// Pi 0, computed once and cached (bit-identical on reuse).
    const std::vector<double>& rhs() const;

    /// (I - S) nu = nu - Pi nu + Pi 0.
    std::vector<double> apply_i_minus_s(const std::vector<double>& nu) const;

    /// Number of wave solves performed so far (including the cached rhs).
    long wave_solves() const { return wave_solves_; }
    void reset_wave_solves() { wave_solves_ = 0; }

    bool is_2d() const { return std::holds_alternative<Problem2D>(problem_); }
    const Problem2D& problem_2d() const { return std::get<Problem2D>(problem_); }
    const Problem3D& problem_3d() const { return std::get<Problem3D>(problem_); }

  private:
    std::variant<Problem2D, Problem3D> problem_;
    std::size_t size_ = 0;
    mutable std::vector<double> rhs_;
    mutable bool rhs_ready_ = false;
    mutable long wave_solves_ = 0;
};

}  // namespace emwh
