#include "fracl1/weights.hpp"

#include <cmath>
#include <string>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"

namespace fracl1::weights {
namespace {

void require_order(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError(std::string(who) + ": alpha must lie in (0,1), got " +
                          std::to_string(alpha));
    }
}

double pow1(double alpha, std::size_t k) {
    return std::pow(static_cast<double>(k), 1.0 - alpha);
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::L1: return "L1";
        case Family::ML1: return "ML1";
        case Family::Grunwald: return "GRUNWALD";
    }
    return "?";
}

WeightSequence::WeightSequence(Family family, double alpha, std::vector<double> coeffs)
    : family_(family), alpha_(alpha), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("WeightSequence: empty coefficient list");
}

double WeightSequence::apply(std::span<const double> samples) const {
    if (samples.size() != coeffs_.size()) {
        throw InsufficientSamplesError("WeightSequence::apply: expected " +
                                       std::to_string(coeffs_.size()) + " samples, got " +
                                       std::to_string(samples.size()));
    }
    const std::size_t last = n();
    double sum = 0.0;
    for (std::size_t k = 0; k <= last; ++k) sum += coeffs_[k] * samples[last - k];
    return sum;
}

double l1_interior(double alpha, std::size_t k) {
    return pow1(alpha, k + 1) - 2.0 * pow1(alpha, k) + pow1(alpha, k - 1);
}

double l1_terminal(double alpha, std::size_t n) { return pow1(alpha, n - 1) - pow1(alpha, n); }

WeightSequence l1_weights(double alpha, std::size_t n) {
    require_order(alpha, "l1_weights");
    if (n < 1) throw InsufficientSamplesError("l1_weights: n must be at least 1");
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) c[k] = l1_interior(alpha, k);
    c[n] = l1_terminal(alpha, n);
    return {Family::L1, alpha, std::move(c)};
}

WeightSequence ml1_weights(double alpha, std::size_t n) {
    require_order(alpha, "ml1_weights");
    if (n < 2) {
        throw InsufficientSamplesError("ml1_weights: n must be at least 2 (use L1 for n = 1)");
    }
    const auto l1 = l1_weights(alpha, n);
    std::vector<double> c(l1.coeffs().begin(), l1.coeffs().end());
    const double z = specfun::zeta(alpha - 1.0);
    c[0] -= z;
    c[1] += 2.0 * z;
    c[2] -= z;
    return {Family::ML1, alpha, std::move(c)};
}

WeightSequence grunwald_weights(double alpha, std::size_t n) {
    require_order(alpha, "grunwald_weights");
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        c[k] = c[k - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(k));
    }
    return {Family::Grunwald, alpha, std::move(c)};
}

IncrementalWeights::IncrementalWeights(Family family, double alpha)
    : family_(family), alpha_(alpha) {
    require_order(alpha, "IncrementalWeights");
    if (family == Family::Grunwald) {
        throw DomainError("IncrementalWeights: only the L1 and ML1 families are supported");
    }
    if (family == Family::ML1) zeta_shift_ = specfun::zeta(alpha - 1.0);
    interior_.push_back(0.0);
    terminal_.push_back(0.0);
}

void IncrementalWeights::extend_to(std::size_t n) {
    while (terminal_.size() <= n) {
        const std::size_t k = terminal_.size();
        interior_.push_back(l1_interior(alpha_, k));
        terminal_.push_back(l1_terminal(alpha_, k));
    }
}

double IncrementalWeights::at(std::size_t k, std::size_t n) const {
    if (k > n) return 0.0;
    if (family_ == Family::ML1 && n < 2) {
        throw InsufficientSamplesError("IncrementalWeights: ML1 weights need n >= 2");
    }
    if (n >= terminal_.size()) throw DomainError("IncrementalWeights: table not extended to n");
    double w = (k == 0) ? 1.0 : (k == n ? terminal_[n] : interior_[k]);
    if (family_ == Family::ML1) {
        if (k == 0 || k == 2) w -= zeta_shift_;
        if (k == 1) w += 2.0 * zeta_shift_;
    }
    return w;
}

double IncrementalWeights::history_sum(std::size_t n, std::span<const double> history) const {
    if (history.size() < n) throw InsufficientSamplesError("history_sum: history too short");
    if (n == 0) return 0.0;
    double sum = at(n, n) * history[0];
    for (std::size_t k = 1; k < n; ++k) sum += interior_[k] * history[n - k];
    if (family_ == Family::ML1) {
        // n >= 2 here; index 2 may coincide with the terminal weight.
        sum += 2.0 * zeta_shift_ * history[n - 1];
        if (n > 2) sum -= zeta_shift_ * history[n - 2];
    }
    return sum;
}

WeightSequence IncrementalWeights::sequence(std::size_t n) const {
    std::vector<double> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = at(k, n);
    return {family_, alpha_, std::move(c)};
}

}  // namespace fracl1::weights
