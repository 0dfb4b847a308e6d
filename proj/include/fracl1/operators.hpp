#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace fracl1::operators {

/// Uniform samples y(0), y(h), ..., y(Nh) of a function on [0, Nh].
class SampledPath {
public:
    SampledPath(std::vector<double> values, double step);

    /// Sample `f` on [0, x] with `n` steps.
    static SampledPath from_function(const std::function<double(double)>& f, double x,
                                     std::size_t n);

    std::span<const double> values() const noexcept { return values_; }
    double step() const noexcept { return step_; }
    /// Index of the last sample.
    std::size_t n() const noexcept { return values_.size() - 1; }
    double right_end() const noexcept { return step_ * static_cast<double>(n()); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
    double step_;
};

/// Point values needed by the fourth-order expansions: y and its first four
/// derivatives at x, and y..y''' at the origin.
struct DerivativeBundle {
    double x = 0.0;
    double y_at_x = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
    double y3 = 0.0;
    double y4 = 0.0;
    double y_at_0 = 0.0;
    double y1_at_0 = 0.0;
    double y2_at_0 = 0.0;
    double y3_at_0 = 0.0;
};

/// L1 approximation of the Caputo derivative at the right end of the path.
double caputo_l1(const SampledPath& path, double alpha);

/// Modified L1 (zeta-corrected) approximation; needs at least 3 samples.
double caputo_ml1(const SampledPath& path, double alpha);

/// Grunwald-Letnikov approximation h^-alpha sum omega_k y(x - kh).
double caputo_grunwald(const SampledPath& path, double alpha);

/// Coefficients (newest first) of the compact combination paired with the
/// modified L1 sum: 13/12, -1/6, 1/12.
inline constexpr std::array<double, 3> kCompactCoefficients = {13.0 / 12.0, -1.0 / 6.0,
                                                               1.0 / 12.0};

/// (13/12) v_n - (1/6) v_{n-1} + (1/12) v_{n-2}.
double compact_rhs3(double v_n, double v_nm1, double v_nm2);

/// Coefficients on (v_n, v_{n-1}, v_{n-2}) of the three-point compact
/// Grunwald combination. alpha in [0,1).
std::array<double, 3> compact_grunwald_coefficients(double alpha);

double compact_grunwald_rhs3(double alpha, double v_n, double v_nm1, double v_nm2);

/// Trapezoid rule for J^alpha y(x) = int_0^x (x-t)^alpha y(t) dt:
/// h^(1+alpha) sum_k k^alpha y(x-kh) - y(0) x^alpha h / 2.
double frac_integral_trapezoid(const SampledPath& path, double alpha);

/// Trapezoid value with the zeta-coefficient error terms through h^(3+alpha)
/// removed; fourth-order accurate for smooth y.
double frac_integral_corrected4(const SampledPath& path, double alpha,
                                const DerivativeBundle& bundle);

/// L1 value with its expansion terms through h^(4-alpha) removed.
/// `d2alpha_at_x` is y^{[2+alpha]}(x) = d^2/dx^2 of the Caputo derivative.
double caputo_l1_corrected4(const SampledPath& path, double alpha,
                            const DerivativeBundle& bundle, double d2alpha_at_x);

}  // namespace fracl1::operators
