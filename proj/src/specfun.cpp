#include "fracl1/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fracl1/errors.hpp"

namespace fracl1::specfun {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// 1/Gamma(x), zero at the poles.
double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

// Laurent coefficients of zeta about s = 1: (-1)^n gamma_n / n!, gamma_n the
// Stieltjes constants.
constexpr std::array<double, 7> kStieltjes = {
    0.57721566490153286061, -0.07281584548367672486, -0.00969036319287231848,
    0.00205383442030334587, 0.00232537006546730006, 0.00079332381730106270,
    -0.00023876934543019961,
};

double zeta_near_one(double s) {
    const double d = s - 1.0;
    double sum = 0.0;
    double power = 1.0;
    double factorial = 1.0;
    for (std::size_t n = 0; n < kStieltjes.size(); ++n) {
        if (n > 0) {
            power *= d;
            factorial *= static_cast<double>(n);
        }
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * kStieltjes[n] / factorial * power;
    }
    return 1.0 / d + sum;
}

// Kahan-compensated complex accumulator.
struct CompensatedSum {
    double re = 0.0, im = 0.0, c_re = 0.0, c_im = 0.0;

    void add(ComplexValue v) {
        const double yr = v.real() - c_re;
        const double tr = re + yr;
        c_re = (tr - re) - yr;
        re = tr;
        const double yi = v.imag() - c_im;
        const double ti = im + yi;
        c_im = (ti - im) - yi;
        im = ti;
    }
    ComplexValue value() const { return {re, im}; }
};

ComplexValue ml_series(MLParams p, ComplexValue z, std::size_t first) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
        throw DomainError("mittag_leffler: alpha must be positive and finite");
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("mittag_leffler: non-finite argument");
    }
    if (z == ComplexValue{0.0, 0.0}) {
        return first == 0 ? ComplexValue{reciprocal_gamma(p.beta), 0.0} : ComplexValue{};
    }

    constexpr double kTol = 1e-17;
    const ComplexValue log_z = std::log(z);

    ComplexValue power{1.0, 0.0};
    for (std::size_t n = 0; n < first; ++n) power *= z;
    bool use_logs = !std::isfinite(power.real()) || !std::isfinite(power.imag());

    CompensatedSum sum;
    double prev_mag = -1.0;
    for (std::size_t n = first; n < first + kMittagLefflerTermCap; ++n) {
        const double arg = p.alpha * static_cast<double>(n) + p.beta;
        ComplexValue term;
        if (!use_logs && arg < 170.0) {
            term = power * reciprocal_gamma(arg);
        } else {
            use_logs = true;
            if (is_nonpositive_integer(arg)) {
                term = {};
            } else {
                int sign = 1;
                const double lg = ::lgamma_r(arg, &sign);
                const double nd = static_cast<double>(n);
                term = static_cast<double>(sign) * std::exp(nd * log_z - lg);
            }
        }
        sum.add(term);

        const double mag = std::abs(term);
        const double total = std::abs(sum.value());
        if (prev_mag >= 0.0 && mag < prev_mag) {
            // Terms decrease super-geometrically from here on; bound the tail
            // by the geometric series with the current ratio.
            const double ratio = mag / prev_mag;
            const double tail = ratio < 1.0 ? mag * ratio / (1.0 - ratio) : mag;
            if (mag + tail <= kTol * total || (total == 0.0 && mag == 0.0)) {
                return sum.value();
            }
        }
        prev_mag = mag;

        power *= z;
        if (!std::isfinite(power.real()) || !std::isfinite(power.imag())) use_logs = true;
    }
    throw ConvergenceError("mittag_leffler: series did not converge within " +
                           std::to_string(kMittagLefflerTermCap) + " terms");
}

}  // namespace

double gamma(double x) {
    if (std::isnan(x)) throw DomainError("gamma: NaN argument");
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at nonpositive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

double eta(double s) {
    if (!(s > 0.0)) throw DomainError("eta: series form requires s > 0");
    // Borwein's acceleration of the alternating series: d_k are partial sums
    // of the Chebyshev-derived weights n (n+i-1)! 4^i / ((n-i)! (2i)!).
    constexpr int n = 48;
    std::array<double, n + 1> d{};
    double weight = 1.0;
    double acc = 1.0;
    d[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        weight *= 4.0 * static_cast<double>(n + i - 1) * static_cast<double>(n - i + 1) /
                  (static_cast<double>(2 * i) * static_cast<double>(2 * i - 1));
        acc += weight;
        d[i] = acc;
    }
    double sum = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * (d[k] - d[n]) / std::pow(static_cast<double>(k + 1), s);
    }
    return -sum / d[n];
}

double zeta(double s) {
    if (std::isnan(s)) throw DomainError("zeta: NaN argument");
    if (s == 1.0) throw PoleError("zeta: pole at s = 1");
    if (s == 0.0) return -0.5;
    if (std::abs(s - 1.0) < 0.05) return zeta_near_one(s);
    if (s > 0.0) return eta(s) / (1.0 - std::pow(2.0, 1.0 - s));
    if (std::fmod(s, 2.0) == 0.0) return 0.0;  // trivial zeros
    const double pi = std::numbers::pi;
    return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) *
           gamma(1.0 - s) * zeta(1.0 - s);
}

ComplexValue mittag_leffler(MLParams p, ComplexValue z) { return ml_series(p, z, 0); }

double mittag_leffler(MLParams p, double z) {
    return ml_series(p, ComplexValue{z, 0.0}, 0).real();
}

ComplexValue mittag_leffler_tail(MLParams p, ComplexValue z, std::size_t first) {
    return ml_series(p, z, first);
}

double mittag_leffler_tail(MLParams p, double z, std::size_t first) {
    return ml_series(p, ComplexValue{z, 0.0}, first).real();
}

double binomial_general(double a, std::size_t n) {
    double c = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        c = c * (a - static_cast<double>(k) + 1.0) / static_cast<double>(k);
    }
    return c;
}

}  // namespace fracl1::specfun
