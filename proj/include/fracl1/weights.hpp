#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace fracl1::weights {

enum class Family { L1, ML1, Grunwald };

std::string_view to_string(Family f);

/// Coefficients w_0..w_n of one discrete Caputo kernel at order alpha.
class WeightSequence {
public:
    WeightSequence(Family family, double alpha, std::vector<double> coeffs);

    Family family() const noexcept { return family_; }
    double alpha() const noexcept { return alpha_; }
    /// Index of the last weight (the sequence has n()+1 entries).
    std::size_t n() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    double operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    /// sum_k w_k y_{n-k}, with `samples` holding y_0..y_n.
    double apply(std::span<const double> samples) const;

private:
    Family family_;
    double alpha_;
    std::vector<double> coeffs_;
};

/// L1 weights sigma_k: 1, interior second differences of k^(1-alpha), and the
/// terminal weight (n-1)^(1-alpha) - n^(1-alpha). Requires alpha in (0,1), n >= 1.
WeightSequence l1_weights(double alpha, std::size_t n);

/// Modified L1 weights delta_k: sigma with -z, +2z, -z added at k = 0, 1, 2,
/// z = zeta(alpha - 1). Requires n >= 2.
WeightSequence ml1_weights(double alpha, std::size_t n);

/// Grunwald weights (-1)^k binom(alpha, k).
WeightSequence grunwald_weights(double alpha, std::size_t n);

/// Interior L1 weight (k+1)^(1-a) - 2k^(1-a) + (k-1)^(1-a), k >= 1.
double l1_interior(double alpha, std::size_t k);
/// Terminal L1 weight (n-1)^(1-a) - n^(1-a), n >= 1.
double l1_terminal(double alpha, std::size_t n);

/// Weight table for time stepping. The sequence for n differs from the one for
/// n-1 only in its last two entries, so the table keeps the interior and
/// terminal values separately and grows them on demand.
class IncrementalWeights {
public:
    IncrementalWeights(Family family, double alpha);

    Family family() const noexcept { return family_; }
    double alpha() const noexcept { return alpha_; }

    /// Make weights of every sequence up to index n available.
    void extend_to(std::size_t n);

    /// Weight k of the length-(n+1) sequence. ML1 requires n >= 2.
    double at(std::size_t k, std::size_t n) const;

    /// sum_{k=1}^{n} w_k^{(n)} history[n-k], i.e. the convolution without the
    /// k = 0 term. `history` must hold at least n values (levels 0..n-1).
    double history_sum(std::size_t n, std::span<const double> history) const;

    WeightSequence sequence(std::size_t n) const;

private:
    Family family_;
    double alpha_;
    double zeta_shift_ = 0.0;
    std::vector<double> interior_;  // interior_[k], k >= 1 (index 0 unused)
    std::vector<double> terminal_;  // terminal_[n], n >= 1 (index 0 unused)
};

}  // namespace fracl1::weights
