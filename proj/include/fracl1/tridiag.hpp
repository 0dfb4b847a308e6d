#pragma once

#include <span>
#include <vector>

namespace fracl1::subdiff {

/// Tridiagonal matrix: lower and upper have one entry fewer than main.
struct Tridiagonal {
    std::vector<double> lower;
    std::vector<double> main;
    std::vector<double> upper;

    /// Constant-coefficient matrix of order n.
    static Tridiagonal constant(std::size_t n, double lower, double main, double upper);

    std::size_t size() const noexcept { return main.size(); }
};

/// Thomas algorithm (forward elimination, back substitution, no pivoting).
/// Throws SingularError if an eliminated pivot falls below 1e-14 in magnitude.
std::vector<double> thomas_solve(const Tridiagonal& t, std::span<const double> rhs);

/// Factored form of shift * I + coupling * tridiag(-1, 2, -1) of order n,
/// with shift >= 0 and coupling > 0. The pivots p_i are carried through
/// s_i = p_i / coupling - 1 - 1/i, the part contributed by the shift, so a
/// small shift next to a large coupling keeps full relative precision.
class ShiftedLaplacian {
public:
    ShiftedLaplacian(std::size_t n, double shift, double coupling);

    std::size_t size() const noexcept { return inv_.size(); }
    std::vector<double> solve(std::span<const double> rhs) const;

private:
    double coupling_;
    std::vector<double> inv_;  // 1 / (1 + r_i)
};

}  // namespace fracl1::subdiff
