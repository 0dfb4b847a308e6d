#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracl1/catalog_function.hpp"
#include "fracl1/errors.hpp"
#include "fracl1/operators.hpp"
#include "fracl1/specfun.hpp"
#include "support/oracles.hpp"

using namespace fracl1;
using namespace fracl1::operators;
using doctest::Approx;

namespace {

SampledPath sample(const oracle::Fn& f, double x, std::size_t n) {
    return SampledPath::from_function(f, x, n);
}

// Orders log2(e_j / e_{j+1}) of an error sequence.
std::vector<double> orders(const std::vector<double>& e) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) out.push_back(std::log2(e[i] / e[i + 1]));
    return out;
}

CatalogFunction catalog_named(const std::string& name) {
    if (name == "exp") return CatalogFunction::exp();
    if (name == "sin") return CatalogFunction::sin();
    if (name == "cos") return CatalogFunction::cos();
    if (name == "power2.5") return CatalogFunction::power(2.5);
    return CatalogFunction::exp_minus_x();
}

}  // namespace

TEST_CASE("caputo_l1: hand-evaluated and exact cases") {
    const auto sq = sample([](double t) { return t * t; }, 1.0, 2);
    const double ref = (1.0 + (std::sqrt(2.0) - 2.0) * 0.25) / (oracle::gamma(1.5) * std::sqrt(0.5));
    CHECK(caputo_l1(sq, 0.5) == Approx(ref).epsilon(1e-14));
    CHECK(caputo_l1(sq, 0.5) == Approx(1.3620741444).epsilon(1e-9));

    const auto flat = sample([](double) { return 3.0; }, 1.0, 8);
    CHECK(std::abs(caputo_l1(flat, 0.5)) < 1e-13);

    const auto lin = sample([](double t) { return t; }, 1.0, 4);
    CHECK(caputo_l1(lin, 0.5) == Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("caputo_l1: exact on affine samples for any step") {
    for (double a : {0.2, 0.5, 0.9}) {
        for (std::size_t n : {1u, 3u, 40u, 333u}) {
            const auto lin = sample([](double t) { return 2.0 - 0.7 * t; }, 1.5, n);
            const double exact = caputo_exact(CatalogFunction::power(1.0), a, 1.5) * -0.7;
            CHECK(caputo_l1(lin, a) == Approx(exact).epsilon(1e-12).scale(0.0));
        }
    }
}

TEST_CASE("caputo_ml1: hand-evaluated case and constants") {
    const auto sq = sample([](double t) { return t * t; }, 1.0, 2);
    const double z = oracle::zeta(-0.5);
    const double d0 = 1.0 - z, d1 = std::sqrt(2.0) - 2.0 + 2.0 * z;
    const double ref = (d0 * 1.0 + d1 * 0.25) / (oracle::gamma(1.5) * std::sqrt(0.5));
    CHECK(caputo_ml1(sq, 0.5) == Approx(ref).epsilon(1e-13));
    CHECK(caputo_ml1(sq, 0.5) == Approx(1.5279433537).epsilon(1e-9));
    CHECK(std::abs(caputo_ml1(sample([](double) { return -1.5; }, 2.0, 9), 0.3)) < 1e-13);
    CHECK_THROWS_AS(caputo_ml1(sample([](double t) { return t; }, 1.0, 1), 0.5),
                    InsufficientSamplesError);
}

TEST_CASE("caputo_ml1 - caputo_l1 is the zeta correction") {
    const double a = 0.35, x = 1.3;
    const std::size_t n = 13;
    const auto p = sample([](double t) { return std::cos(2.0 * t) + t * t; }, x, n);
    const double h = p.step();
    const double z = oracle::zeta(a - 1.0);
    const double corr = z / (oracle::gamma(2.0 - a) * std::pow(h, a)) * (-p[n] + 2.0 * p[n - 1] - p[n - 2]);
    CHECK(caputo_ml1(p, a) - caputo_l1(p, a) == Approx(corr).epsilon(1e-12));
}

TEST_CASE("caputo_grunwald") {
    CHECK(caputo_grunwald(sample([](double) { return 0.0; }, 1.0, 4), 0.5) == 0.0);
    const auto lin = sample([](double t) { return t; }, 1.0, 2);
    CHECK(caputo_grunwald(lin, 0.5) == Approx((1.0 - 0.25) / std::sqrt(0.5)).epsilon(1e-14));
    CHECK(caputo_grunwald(lin, 0.5) == Approx(1.0606602).epsilon(1e-7));

    std::vector<double> e;
    const auto f = CatalogFunction::power(3.0);
    for (std::size_t n = 40; n <= 640; n *= 2) {
        e.push_back(std::abs(caputo_grunwald(sample([](double t) { return t * t * t; }, 1.0, n), 0.5) -
                             caputo_exact(f, 0.5, 1.0)));
    }
    for (double o : orders(e)) CHECK(o == Approx(1.0).epsilon(0.1).scale(0.0));
}

TEST_CASE("empirical orders of L1 on cos and ML1 on exp") {
    const double a = 0.75, x = 1.0;
    const double exact = caputo_exact(CatalogFunction::cos(), a, x);
    std::vector<double> e1;
    for (std::size_t n = 20; n <= 320; n *= 2) {
        const auto p = sample([](double t) { return std::cos(t); }, x, n);
        e1.push_back(std::abs(caputo_l1(p, a) - exact));
    }
    for (double o : orders(e1)) {
        CHECK(o >= 2.0 - a - 0.1);
        CHECK(o <= 2.0 - a + 0.1);
    }

    // For cos the h^2 term of ML1 nearly cancels at x = 1, so use exp.
    const double b = 0.25;
    const double exact2 = caputo_exact(CatalogFunction::exp(), b, x);
    std::vector<double> e2;
    for (std::size_t n = 20; n <= 640; n *= 2) {
        const auto p = sample([](double t) { return std::exp(t); }, x, n);
        e2.push_back(std::abs(caputo_ml1(p, b) - exact2));
    }
    const auto o2 = orders(e2);
    for (double o : o2) {
        CHECK(o >= 1.85);
        CHECK(o <= 2.05);
    }
    CHECK(o2.back() == Approx(2.0).epsilon(0.015));
}

TEST_CASE("compact ML1 identity decays at order 3 - alpha when y'(0) = 0") {
    for (double a : {0.3, 0.5, 0.7}) {
        const auto f = CatalogFunction::exp_minus_x();
        const double x = 1.0;
        std::vector<double> e;
        for (std::size_t n = 20; n <= 320; n *= 2) {
            const double h = x / static_cast<double>(n);
            const auto p = sample([&](double t) { return f(t); }, x, n);
            const double rhs = compact_rhs3(caputo_exact(f, a, x), caputo_exact(f, a, x - h),
                                            caputo_exact(f, a, x - 2 * h));
            e.push_back(std::abs(caputo_ml1(p, a) - rhs));
        }
        const auto o = orders(e);
        CHECK(o.back() >= 3.0 - a - 0.15);
        CHECK(o.back() <= 3.0 - a + 0.15);
    }
}

TEST_CASE("compact_rhs3 coefficients") {
    CHECK(compact_rhs3(2.5, 2.5, 2.5) == Approx(2.5).epsilon(1e-15));
    CHECK(compact_rhs3(12.0, 0.0, 0.0) == Approx(13.0).epsilon(1e-15));
    CHECK(compact_rhs3(0.0, 6.0, 0.0) == Approx(-1.0).epsilon(1e-15));
    double s = 0.0;
    for (double c : kCompactCoefficients) s += c;
    CHECK(std::abs(s - 1.0) <= 1e-15);
}

TEST_CASE("compact Grunwald coefficients") {
    const auto c = compact_grunwald_coefficients(0.5);
    CHECK(c[0] == Approx(0.6770833333).epsilon(1e-10));
    CHECK(c[1] == Approx(0.3958333333).epsilon(1e-10));
    CHECK(c[2] == Approx(-0.0729166667).epsilon(1e-10));
    for (double a = 0.0; a < 1.0; a += 0.05) {
        const auto k = compact_grunwald_coefficients(a);
        CHECK(std::abs(k[0] + k[1] + k[2] - 1.0) <= 1e-15);
        CHECK(compact_grunwald_rhs3(a, 4.0, 4.0, 4.0) == Approx(4.0).epsilon(1e-15));
    }
    const auto z = compact_grunwald_coefficients(0.0);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.0);
}

TEST_CASE("frac_integral_trapezoid") {
    const auto one = sample([](double) { return 1.0; }, 1.0, 2);
    CHECK(frac_integral_trapezoid(one, 0.5) ==
          Approx(std::pow(0.5, 1.5) * (1.0 + std::sqrt(2.0)) - 0.25).epsilon(1e-14));
    CHECK(frac_integral_trapezoid(one, 0.5) == Approx(0.6035533906).epsilon(1e-10));
    CHECK(frac_integral_trapezoid(sample([](double) { return 0.0; }, 1.0, 5), 0.5) == 0.0);
}

TEST_CASE("trapezoid error expansion for y = 1") {
    // error = zeta(-a) h^(1+a) + (a/12) x^(a-1) h^2 + O(h^4)
    const double a = 0.5;
    const double z = oracle::zeta(-a);
    for (std::size_t n : {16u, 32u, 64u}) {
        const double h = 1.0 / static_cast<double>(n);
        const double err = frac_integral_trapezoid(sample([](double) { return 1.0; }, 1.0, n), a) - 2.0 / 3.0;
        const double rest = err - z * std::pow(h, 1.0 + a) - a / 12.0 * h * h;
        CHECK(std::abs(rest) < 0.01 * std::pow(h, 4.0));
    }
}

TEST_CASE("frac_integral_corrected4") {
    DerivativeBundle b;
    b.x = 1.0;
    b.y_at_x = 1.0;
    b.y_at_0 = 1.0;
    const auto one = sample([](double) { return 1.0; }, 1.0, 2);
    CHECK(frac_integral_corrected4(one, 0.5, b) == Approx(0.6666355).epsilon(1e-7));

    const auto f = CatalogFunction::exp();
    const auto p = sample([](double t) { return std::exp(t); }, 2.0, 20);
    const double err = std::abs(frac_integral_corrected4(p, 0.75, make_bundle(f, 2.0)) -
                                frac_integral_exact(f, 0.75, 2.0));
    CHECK(err == Approx(1.178e-7).epsilon(0.01));
}

TEST_CASE("caputo_l1_corrected4 on an affine function equals the exact value") {
    const double a = 0.4, x = 1.0;
    DerivativeBundle b;
    b.x = x;
    b.y_at_x = x;
    b.y1 = 1.0;
    b.y1_at_0 = 1.0;
    const double d2 = (1.0 - a) * (-a) * std::pow(x, -1.0 - a) / oracle::gamma(2.0 - a);
    for (std::size_t n : {4u, 10u, 25u}) {
        const auto lin = sample([](double t) { return t; }, x, n);
        const double exact = std::pow(x, 1.0 - a) / oracle::gamma(2.0 - a);
        CHECK(caputo_l1_corrected4(lin, a, b, d2) == Approx(exact).epsilon(1e-12));
        CHECK(caputo_l1_corrected4(lin, a, b, d2) == Approx(caputo_l1(lin, a)).epsilon(1e-12));
    }
}

TEST_CASE("caputo_exact: closed forms") {
    CHECK(caputo_exact(CatalogFunction::exp(), 0.5, 1.0) ==
          Approx(std::exp(1.0) * std::erf(1.0)).epsilon(1e-12));
    CHECK(caputo_exact(CatalogFunction::exp(), 0.5, 1.0) == Approx(2.2906982523).epsilon(1e-9));
    CHECK(caputo_exact(CatalogFunction::power(1.0), 0.5, 1.0) ==
          Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK_THROWS_AS(caputo_exact(CatalogFunction::exp(), 0.5, 0.0), DomainError);
}

TEST_CASE("caputo_exact and frac_integral_exact agree with quadrature") {
    for (const auto& s : oracle::catalog_samples()) {
        const auto f = catalog_named(s.name);
        for (double a : {0.25, 0.5, 0.75}) {
            for (double x : {0.5, 1.0, 2.0}) {
                CAPTURE(s.name);
                CAPTURE(a);
                CAPTURE(x);
                CHECK(std::abs(caputo_exact(f, a, x) - oracle::caputo(s.dy, a, x)) < 1e-8);
                CHECK(std::abs(frac_integral_exact(f, a, x) - oracle::frac_integral(s.y, a, x)) < 1e-8);
            }
        }
    }
}

TEST_CASE("frac_integral_exact: constants and the exponential") {
    const auto one = CatalogFunction::exp(0.0);
    CHECK(frac_integral_exact(one, 0.5, 1.0) == Approx(2.0 / 3.0).epsilon(1e-13));
    const double series = oracle::gamma(1.75) * std::pow(2.0, 1.75) *
                          specfun::mittag_leffler({1.0, 2.75}, 2.0);
    CHECK(frac_integral_exact(CatalogFunction::exp(), 0.75, 2.0) == Approx(series).epsilon(1e-12));
    CHECK(std::abs(frac_integral_exact(CatalogFunction::sin(), 0.25, 1.0) -
                   oracle::frac_integral([](double t) { return std::sin(t); }, 0.25, 1.0)) < 1e-9);
}

TEST_CASE("second derivative of the fractional integral") {
    // d^2/dx^2 J^a y = J^a y'' + a x^(a-1) y(0) + x^a y'(0), y = e^x
    const double a = 0.5, x = 1.0;
    const auto J = [a](double s) { return oracle::frac_integral([](double t) { return std::exp(t); }, a, s); };
    const double lhs = oracle::second_difference(J, x, 1e-4);
    const double rhs = frac_integral_exact(CatalogFunction::exp(), a, x) + a * std::pow(x, a - 1.0) +
                       std::pow(x, a);
    CHECK(std::abs(lhs - rhs) < 1e-5);
}

TEST_CASE("second derivative of the Caputo derivative") {
    for (double a : {0.3, 0.5, 0.8}) {
        const auto f = CatalogFunction::exp();
        const double x = 1.2;
        const double fd = oracle::second_difference([&](double s) { return caputo_exact(f, a, s); }, x, 1e-4);
        CHECK(std::abs(caputo_second_shift_exact(f, a, x) - fd) < 1e-5);
        const double by_parts = caputo_exact(f, a, x) + 1.0 / (oracle::gamma(-a) * std::pow(x, 1.0 + a)) +
                                1.0 / (oracle::gamma(1.0 - a) * std::pow(x, a));
        CHECK(caputo_second_shift_exact(f, a, x) == Approx(by_parts).epsilon(1e-12));
    }
}

TEST_CASE("fourth-order corrected rules reach order four") {
    const auto f = CatalogFunction::sin();
    std::vector<double> e1, e2;
    for (std::size_t n = 20; n <= 160; n *= 2) {
        const auto p = sample([](double t) { return std::sin(t); }, 1.0, n);
        e1.push_back(std::abs(frac_integral_corrected4(p, 0.25, make_bundle(f, 1.0)) -
                              frac_integral_exact(f, 0.25, 1.0)));
        e2.push_back(std::abs(caputo_l1_corrected4(p, 0.6, make_bundle(f, 1.0),
                                                   caputo_second_shift_exact(f, 0.6, 1.0)) -
                              caputo_exact(f, 0.6, 1.0)));
    }
    for (double o : orders(e1)) CHECK(o == Approx(4.0).epsilon(0.03).scale(0.0));
    for (double o : orders(e2)) CHECK(o == Approx(4.0).epsilon(0.03).scale(0.0));
}

TEST_CASE("SampledPath validation") {
    CHECK_THROWS_AS(SampledPath({1.0}, 0.1), InsufficientSamplesError);
    CHECK_THROWS_AS(SampledPath({1.0, 2.0}, -0.1), DomainError);
    CHECK_THROWS_AS(caputo_l1(sample([](double t) { return t; }, 1.0, 3), 1.0), DomainError);
}
