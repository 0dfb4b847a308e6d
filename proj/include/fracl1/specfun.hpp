#pragma once

#include <complex>
#include <cstddef>

namespace fracl1::specfun {

using ComplexValue = std::complex<double>;

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;
};

/// Gamma function. Throws PoleError at nonpositive integers.
double gamma(double x);

/// Real Riemann zeta function. Throws PoleError at s = 1.
///
/// For s < 1 the value comes from the reflection formula
///   zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s),
/// for s > 0 from the accelerated alternating eta series.
double zeta(double s);

/// Dirichlet eta function eta(s) = sum (-1)^(k-1) k^-s, for s > 0.
double eta(double s);

/// Largest number of series terms the Mittag-Leffler summation will use.
inline constexpr std::size_t kMittagLefflerTermCap = 400;

/// E_{alpha,beta}(z) by direct power-series summation. Intended for |z| <= 50.
/// Throws DomainError for alpha <= 0 and ConvergenceError if the term cap is hit.
ComplexValue mittag_leffler(MLParams p, ComplexValue z);

/// Real-argument overload; returns the real part (the imaginary part is zero).
double mittag_leffler(MLParams p, double z);

/// Series tail sum_{n >= first} z^n / Gamma(alpha n + beta). Used for the
/// regularized solutions u - T_m, where forming the difference would cancel.
ComplexValue mittag_leffler_tail(MLParams p, ComplexValue z, std::size_t first);
double mittag_leffler_tail(MLParams p, double z, std::size_t first);

/// Generalized binomial coefficient a(a-1)...(a-n+1)/n!.
double binomial_general(double a, std::size_t n);

}  // namespace fracl1::specfun
