#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's numerical code.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (31 points, Gauss-Legendre 15 embedded) on [a, b].
inline double integrate(const Fn& f, double a, double b) {
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 18, 1e-13, &err);
}

/// Caputo derivative (1/Gamma(1-alpha)) int_0^x y'(t) (x-t)^-alpha dt.
/// With u = (x-t)^(1-alpha) the kernel singularity disappears:
///   int_0^{x^(1-alpha)} y'(x - u^(1/(1-alpha))) du / (1-alpha).
inline double caputo(const Fn& dy, double alpha, double x) {
    const double p = 1.0 / (1.0 - alpha);
    const double top = std::pow(x, 1.0 - alpha);
    const double v = integrate([&](double u) { return dy(x - std::pow(u, p)); }, 0.0, top);
    return v * p / boost::math::tgamma(1.0 - alpha);
}

/// J^alpha y(x) = int_0^x (x-t)^alpha y(t) dt. The y(x) part is integrated in
/// closed form; the remainder vanishes like (x-t)^(1+alpha) at the endpoint.
inline double frac_integral(const Fn& y, double alpha, double x) {
    const double yx = y(x);
    const double rest =
        integrate([&](double t) { return std::pow(x - t, alpha) * (y(t) - yx); }, 0.0, x);
    return rest + yx * std::pow(x, 1.0 + alpha) / (1.0 + alpha);
}

/// Central second difference.
inline double second_difference(const Fn& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline double gamma(double x) { return boost::math::tgamma(x); }
inline double zeta(double s) { return boost::math::zeta(s); }

/// Dense Gaussian elimination with partial pivoting; `a` is row-major n x n.
inline std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        }
        if (a[piv * n + c] == 0.0) throw std::runtime_error("dense_solve: singular");
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
            std::swap(b[c], b[piv]);
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            const double m = a[r * n + c] / a[c * n + c];
            for (std::size_t k = c; k < n; ++k) a[r * n + k] -= m * a[c * n + k];
            b[r] -= m * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
        x[i] = s / a[i * n + i];
    }
    return x;
}

/// Random strictly diagonally dominant tridiagonal system.
struct TridiagSample {
    std::vector<double> lower, main, upper, rhs;

    std::vector<double> dense() const {
        const std::size_t n = main.size();
        std::vector<double> a(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            a[i * n + i] = main[i];
            if (i + 1 < n) {
                a[i * n + i + 1] = upper[i];
                a[(i + 1) * n + i] = lower[i];
            }
        }
        return a;
    }
};

inline TridiagSample random_tridiag(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> off(-1.0, 1.0), extra(0.1, 2.0), r(-10.0, 10.0);
    TridiagSample s;
    s.lower.resize(n - 1);
    s.upper.resize(n - 1);
    s.main.resize(n);
    s.rhs.resize(n);
    for (auto& v : s.lower) v = off(rng);
    for (auto& v : s.upper) v = off(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const double l = i > 0 ? std::abs(s.lower[i - 1]) : 0.0;
        const double u = i + 1 < n ? std::abs(s.upper[i]) : 0.0;
        const double mag = l + u + extra(rng);
        s.main[i] = (rng() & 1) ? mag : -mag;
        s.rhs[i] = r(rng);
    }
    return s;
}

inline double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double scale = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        scale = std::max(scale, std::abs(b[i]));
        diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    return diff / std::max(scale, 1e-300);
}

/// Closed-form test functions with their first derivative, written out here
/// so the quadrature oracles do not depend on the library's catalog.
struct Sample {
    std::string name;
    Fn y, dy;
};

inline std::vector<Sample> catalog_samples() {
    return {
        {"exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); }},
        {"sin", [](double t) { return std::sin(t); }, [](double t) { return std::cos(t); }},
        {"cos", [](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); }},
        {"power2.5", [](double t) { return std::pow(t, 2.5); },
         [](double t) { return 2.5 * std::pow(t, 1.5); }},
        {"exp_minus_x", [](double t) { return std::exp(t) - t; },
         [](double t) { return std::exp(t) - 1.0; }},
    };
}

}  // namespace oracle
