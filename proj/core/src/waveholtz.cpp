#include "emwh/waveholtz.hpp"

#include <stdexcept>

namespace emwh {

WaveHoltzOperator::WaveHoltzOperator(Problem2D p) : problem_(std::move(p)) {
    const auto& pr = std::get<Problem2D>(problem_);
    pr.validate();
    size_ = dof_count(pr.grid, pr.filter.mode);
}

WaveHoltzOperator::WaveHoltzOperator(Problem3D p) : problem_(std::move(p)) {
    const auto& pr = std::get<Problem3D>(problem_);
    pr.validate();
    size_ = dof_count(pr.grid, pr.filter.mode);
}

StateMode WaveHoltzOperator::mode() const {
    return std::visit([](const auto& p) { return p.filter.mode; }, problem_);
}

bool WaveHoltzOperator::symmetric_positive_definite() const {
    const std::size_t nfreq =
        std::visit([](const auto& p) { return p.filter.omegas.size(); }, problem_);
    return mode() == StateMode::EnergyConserving && nfreq == 1;
}

std::vector<double> WaveHoltzOperator::apply_pi(const std::vector<double>& nu) const {
    ++wave_solves_;
    return std::visit([&](const auto& p) { return apply_filtered_evolve(p, nu); }, problem_);
}

const std::vector<double>& WaveHoltzOperator::rhs() const {
    if (!rhs_ready_) {
        rhs_ = apply_pi(std::vector<double>(size_, 0.0));
        rhs_ready_ = true;
    }
    return rhs_;
}

std::vector<double> WaveHoltzOperator::apply_i_minus_s(const std::vector<double>& nu) const {
    if (nu.size() != size_)
        throw std::length_error("operator apply: state length mismatch");
    const auto& b = rhs();
    std::vector<double> out = apply_pi(nu);
    for (std::size_t i = 0; i < size_; ++i) out[i] = nu[i] - out[i] + b[i];
    return out;
}

}  // namespace emwh
