#include "fracl1/tridiag.hpp"

#include <cmath>
#include <string>

#include "fracl1/errors.hpp"

namespace fracl1::subdiff {

Tridiagonal Tridiagonal::constant(std::size_t n, double lower, double main, double upper) {
    if (n == 0) throw DomainError("Tridiagonal::constant: empty matrix");
    return {std::vector<double>(n - 1, lower), std::vector<double>(n, main),
            std::vector<double>(n - 1, upper)};
}

std::vector<double> thomas_solve(const Tridiagonal& t, std::span<const double> rhs) {
    const std::size_t n = t.main.size();
    if (n == 0) throw DomainError("thomas_solve: empty system");
    if (t.lower.size() != n - 1 || t.upper.size() != n - 1) {
        throw DomainError("thomas_solve: off-diagonals must have n-1 entries");
    }
    if (rhs.size() != n) throw DomainError("thomas_solve: rhs length must equal matrix order");

    constexpr double kPivotFloor = 1e-14;
    std::vector<double> c(n, 0.0);
    std::vector<double> x(n, 0.0);

    double pivot = t.main[0];
    if (std::abs(pivot) < kPivotFloor) throw SingularError("thomas_solve: singular pivot at row 0");
    if (n > 1) c[0] = t.upper[0] / pivot;
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = t.main[i] - t.lower[i - 1] * c[i - 1];
        if (std::abs(pivot) < kPivotFloor) {
            throw SingularError("thomas_solve: singular pivot at row " + std::to_string(i));
        }
        if (i + 1 < n) c[i] = t.upper[i] / pivot;
        x[i] = (rhs[i] - t.lower[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

ShiftedLaplacian::ShiftedLaplacian(std::size_t n, double shift, double coupling)
    : coupling_(coupling), inv_(n) {
    if (n == 0) throw DomainError("ShiftedLaplacian: empty matrix");
    if (!(coupling > 0.0) || !(shift >= 0.0) || !std::isfinite(shift / coupling)) {
        throw DomainError("ShiftedLaplacian: need shift >= 0 and coupling > 0");
    }
    // With c = shift / coupling the scaled pivots obey q_1 = 2 + c and
    // q_i = 2 + c - 1 / q_{i-1}. For c = 0 they are (i+1)/i, and the excess
    // s_i = q_i - (i+1)/i satisfies s_1 = c,
    //   s_i = c + s_{i-1} / ((i/(i-1) + s_{i-1}) * i/(i-1)),
    // a recursion of positive terms only.
    const double c = shift / coupling;
    double s = c;
    inv_[0] = 1.0 / (2.0 + s);
    for (std::size_t i = 2; i <= n; ++i) {
        const double ratio = static_cast<double>(i) / static_cast<double>(i - 1);
        s = c + s / ((ratio + s) * ratio);
        inv_[i - 1] = 1.0 / (static_cast<double>(i + 1) / static_cast<double>(i) + s);
    }
}

std::vector<double> ShiftedLaplacian::solve(std::span<const double> rhs) const {
    const std::size_t n = inv_.size();
    if (rhs.size() != n) throw DomainError("ShiftedLaplacian: rhs length must equal matrix order");
    // Forward sweep on z_i = coupling * y_i, then back substitution.
    std::vector<double> x(n);
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        z = (rhs[i] + z) * inv_[i];
        x[i] = z;
    }
    x[n - 1] /= coupling_;
    for (std::size_t i = n - 1; i-- > 0;) x[i] = x[i] / coupling_ + x[i + 1] * inv_[i];
    return x;
}

}  // namespace fracl1::subdiff
