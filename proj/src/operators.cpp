#include "fracl1/operators.hpp"

#include <cmath>
#include <string>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"
#include "fracl1/weights.hpp"

namespace fracl1::operators {
namespace {

void require_order(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError(std::string(who) + ": alpha must lie in (0,1), got " +
                          std::to_string(alpha));
    }
}

double caputo_scale(double alpha, double h) {
    return 1.0 / (specfun::gamma(2.0 - alpha) * std::pow(h, alpha));
}

}  // namespace

SampledPath::SampledPath(std::vector<double> values, double step)
    : values_(std::move(values)), step_(step) {
    if (values_.size() < 2) {
        throw InsufficientSamplesError("SampledPath: at least 2 samples required");
    }
    if (!(step_ > 0.0) || !std::isfinite(step_)) {
        throw DomainError("SampledPath: step must be positive and finite");
    }
}

SampledPath SampledPath::from_function(const std::function<double(double)>& f, double x,
                                       std::size_t n) {
    if (n < 1) throw InsufficientSamplesError("SampledPath::from_function: n must be >= 1");
    if (!(x > 0.0)) throw DomainError("SampledPath::from_function: x must be positive");
    const double h = x / static_cast<double>(n);
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[i] = f(h * static_cast<double>(i));
    return {std::move(v), h};
}

double caputo_l1(const SampledPath& path, double alpha) {
    require_order(alpha, "caputo_l1");
    const auto w = weights::l1_weights(alpha, path.n());
    return caputo_scale(alpha, path.step()) * w.apply(path.values());
}

double caputo_ml1(const SampledPath& path, double alpha) {
    require_order(alpha, "caputo_ml1");
    if (path.n() < 2) {
        throw InsufficientSamplesError("caputo_ml1: at least 3 samples required");
    }
    const auto w = weights::ml1_weights(alpha, path.n());
    return caputo_scale(alpha, path.step()) * w.apply(path.values());
}

double caputo_grunwald(const SampledPath& path, double alpha) {
    require_order(alpha, "caputo_grunwald");
    const auto w = weights::grunwald_weights(alpha, path.n());
    return w.apply(path.values()) / std::pow(path.step(), alpha);
}

double compact_rhs3(double v_n, double v_nm1, double v_nm2) {
    return kCompactCoefficients[0] * v_n + kCompactCoefficients[1] * v_nm1 +
           kCompactCoefficients[2] * v_nm2;
}

std::array<double, 3> compact_grunwald_coefficients(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw DomainError("compact_grunwald_coefficients: alpha must lie in [0,1)");
    }
    const double a2 = alpha * alpha;
    return {1.0 - 17.0 * alpha / 24.0 + a2 / 8.0, 11.0 * alpha / 12.0 - a2 / 4.0,
            a2 / 8.0 - 5.0 * alpha / 24.0};
}

double compact_grunwald_rhs3(double alpha, double v_n, double v_nm1, double v_nm2) {
    const auto c = compact_grunwald_coefficients(alpha);
    return c[0] * v_n + c[1] * v_nm1 + c[2] * v_nm2;
}

double frac_integral_trapezoid(const SampledPath& path, double alpha) {
    require_order(alpha, "frac_integral_trapezoid");
    const std::size_t n = path.n();
    const double h = path.step();
    const auto y = path.values();
    double sum = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        sum += std::pow(static_cast<double>(k), alpha) * y[n - k];
    }
    const double x = path.right_end();
    return std::pow(h, 1.0 + alpha) * sum - 0.5 * y[0] * std::pow(x, alpha) * h;
}

double frac_integral_corrected4(const SampledPath& path, double alpha,
                                const DerivativeBundle& b) {
    require_order(alpha, "frac_integral_corrected4");
    const double h = path.step();
    const double x = path.right_end();
    const double correction =
        specfun::zeta(-alpha) * b.y_at_x * std::pow(h, 1.0 + alpha) +
        (alpha * std::pow(x, alpha - 1.0) * b.y_at_0 - std::pow(x, alpha) * b.y1_at_0) * h * h /
            12.0 -
        b.y1 * specfun::zeta(-1.0 - alpha) * std::pow(h, 2.0 + alpha) +
        0.5 * b.y2 * specfun::zeta(-2.0 - alpha) * std::pow(h, 3.0 + alpha);
    return frac_integral_trapezoid(path, alpha) - correction;
}

double caputo_l1_corrected4(const SampledPath& path, double alpha, const DerivativeBundle& b,
                            double d2alpha_at_x) {
    require_order(alpha, "caputo_l1_corrected4");
    const double h = path.step();
    const double x = path.right_end();
    const double g = specfun::gamma(2.0 - alpha);
    const double z1 = specfun::zeta(alpha - 1.0);
    const double z2 = specfun::zeta(alpha - 2.0);
    const double z3 = specfun::zeta(alpha - 3.0);
    const double h2 = h * h;
    const double correction =
        d2alpha_at_x * h2 / 12.0 + z1 * b.y2 * std::pow(h, 2.0 - alpha) / g -
        b.y1_at_0 * h2 / (12.0 * specfun::gamma(-alpha) * std::pow(x, 1.0 + alpha)) -
        z2 * b.y3 * std::pow(h, 3.0 - alpha) / g +
        (z3 + z1 / 6.0) * b.y4 * std::pow(h, 4.0 - alpha) / (2.0 * g);
    return caputo_l1(path, alpha) - correction;
}

}  // namespace fracl1::operators
