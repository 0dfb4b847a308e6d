#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"
#include "fracl1/subdiff.hpp"
#include "fracl1/tridiag.hpp"
#include "fracl1/weights.hpp"
#include "support/oracles.hpp"

using namespace fracl1;
using namespace fracl1::subdiff;
using doctest::Approx;

TEST_CASE("thomas_solve: small systems") {
    const auto id = Tridiagonal::constant(4, 0.0, 1.0, 0.0);
    const std::vector<double> r{1.0, -2.0, 3.5, 0.25};
    CHECK(thomas_solve(id, r) == r);

    Tridiagonal t{{-1.0}, {2.0, 2.0}, {-1.0}};
    const std::vector<double> rhs{1.0, 1.0};
    const auto x = thomas_solve(t, rhs);
    CHECK(x[0] == Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("thomas_solve: agrees with dense elimination on random systems") {
    std::mt19937_64 rng(20251014);
    std::uniform_int_distribution<std::size_t> size(3, 100);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = oracle::random_tridiag(rng, size(rng));
        const auto x = thomas_solve({s.lower, s.main, s.upper}, s.rhs);
        const auto ref = oracle::dense_solve(s.dense(), s.rhs);
        CHECK(oracle::max_rel_diff(x, ref) < 1e-10);
    }
    const auto big = oracle::random_tridiag(rng, 50);
    CHECK(oracle::max_rel_diff(thomas_solve({big.lower, big.main, big.upper}, big.rhs),
                               oracle::dense_solve(big.dense(), big.rhs)) < 1e-10);
}

TEST_CASE("thomas_solve: singular pivot and size mismatch") {
    Tridiagonal t{{1.0}, {1.0, 1.0}, {1.0}};
    CHECK_THROWS_AS(thomas_solve(t, std::vector<double>{1.0, 2.0}), SingularError);
    CHECK_THROWS_AS(thomas_solve(Tridiagonal::constant(3, -1, 2, -1), std::vector<double>{1.0}),
                    DomainError);
}

TEST_CASE("ShiftedLaplacian: agrees with dense elimination") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double shift : {0.0, 1e-6, 0.3, 5.0}) {
        for (double coupling : {1e-3, 1.0, 250.0, 4e5}) {
            for (std::size_t n : {1u, 2u, 9u, 64u}) {
                std::vector<double> a(n * n, 0.0), b(n);
                for (std::size_t i = 0; i < n; ++i) {
                    a[i * n + i] = shift + 2.0 * coupling;
                    if (i + 1 < n) a[i * n + i + 1] = a[(i + 1) * n + i] = -coupling;
                    b[i] = u(rng);
                }
                const auto x = ShiftedLaplacian(n, shift, coupling).solve(b);
                CHECK(oracle::max_rel_diff(x, oracle::dense_solve(a, b)) < 1e-10);
            }
        }
    }
    CHECK_THROWS_AS(ShiftedLaplacian(5, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(ShiftedLaplacian(5, 1.0, 0.0), DomainError);
}

TEST_CASE("catalog problems") {
    const auto s05 = catalog_subdiff(CatalogId::S05, 0.4);
    for (double t : {0.0, 0.3, 1.0}) {
        CHECK(s05.exact(1.0, t) == Approx(6.0 * std::pow(t, 2.6)).epsilon(1e-14));
        CHECK(s05.uR(t) == Approx(6.0 * std::pow(t, 2.6)).epsilon(1e-14));
    }
    const auto s06 = catalog_subdiff(CatalogId::S06, 0.7);
    for (double x : {0.2, 1.0, 3.0}) CHECK(s06.exact(x, 0.0) == Approx(std::sin(x)).epsilon(1e-14));

    const auto s15 = catalog_subdiff(CatalogId::S15, 0.5);
    for (double x : {0.4, 1.5}) {
        for (double t : {0.1, 1.0, 3.0}) {
            double head = 0.0;
            for (int n = 0; n <= 4; ++n) head += std::pow(-1.0, n) * std::pow(t, 0.5 * n) / oracle::gamma(0.5 * n + 1.0);
            const double ref = std::sin(x) * (specfun::mittag_leffler({0.5, 1.0}, -std::sqrt(t)) - head);
            CHECK(std::abs(s15.exact(x, t) - ref) < 1e-10);
        }
    }
    CHECK_THROWS_AS(catalog_subdiff(CatalogId::S15, 0.4), DomainError);
    CHECK_THROWS_AS(catalog_subdiff(CatalogId::S16, 0.6), DomainError);
    CHECK_THROWS_AS(parse_catalog_id("S99"), ConfigError);
}

TEST_CASE("S16 solves its equation") {
    // v = sin x * sum_{n>=6} (-1)^n t^(n/2) / Gamma(n/2 + 1); the time
    // derivative is summed termwise and fed to the quadrature oracle.
    const auto p = catalog_subdiff(CatalogId::S16, 0.5);
    const double x = 1.1;
    const auto series = [](double t) {
        double v = 0.0;
        for (int n = 6; n < 80; ++n) v += std::pow(-1.0, n) * std::pow(t, 0.5 * n) / oracle::gamma(0.5 * n + 1.0);
        return v;
    };
    const auto dseries = [](double t) {
        double v = 0.0;
        for (int n = 6; n < 80; ++n) {
            v += std::pow(-1.0, n) * 0.5 * n * std::pow(t, 0.5 * n - 1.0) / oracle::gamma(0.5 * n + 1.0);
        }
        return v;
    };
    for (double t : {0.3, 0.9, 2.0}) {
        CHECK(std::abs(p.exact(x, t) - std::sin(x) * series(t)) < 1e-12);
        const double dt = std::sin(x) * oracle::caputo(dseries, 0.5, t);
        const double uxx = -std::sin(x) * series(t);
        CHECK(std::abs(dt - uxx - p.forcing(x, t)) < 1e-9);
    }
}

TEST_CASE("zero data gives the zero grid") {
    SubdiffusionProblem p;
    p.alpha = 0.4;
    p.forcing = [](double, double) { return 0.0; };
    p.u0 = [](double) { return 0.0; };
    p.uL = p.uR = [](double) { return 0.0; };
    for (Scheme s : {Scheme::L1, Scheme::ML1, Scheme::CML1}) {
        const auto g = solve(s, p, 12, 9);
        for (std::size_t m = 0; m <= 9; ++m) {
            for (std::size_t n = 0; n <= 12; ++n) CHECK(g.at(m, n) == 0.0);
        }
    }
}

TEST_CASE("boundary columns are the sampled data") {
    const auto p = catalog_subdiff(CatalogId::S05, 0.4);
    for (Scheme s : {Scheme::L1, Scheme::ML1, Scheme::CML1}) {
        const auto g = solve(s, p, 16, 12);
        for (std::size_t m = 0; m <= 12; ++m) {
            const double t = static_cast<double>(m) * g.tau();
            CHECK(g.at(m, 0) == p.uL(t));
            CHECK(g.at(m, 16) == p.uR(t));
        }
        for (std::size_t n = 0; n <= 16; ++n) CHECK(g.at(0, n) == p.u0(n * g.h()));
    }
}

TEST_CASE("L1 scheme stays within the data range") {
    SubdiffusionProblem p;
    p.alpha = 0.4;
    p.forcing = [](double, double) { return 0.0; };
    p.u0 = [](double x) { return x * x; };
    p.uL = [](double) { return 0.0; };
    p.uR = [](double t) { return 1.0 / (1.0 + t); };
    const auto g = solve_subdiff(Scheme::L1, p, 50, 50);
    for (std::size_t m = 0; m <= 50; ++m) {
        for (std::size_t n = 0; n <= 50; ++n) {
            CHECK(g.at(m, n) >= -0.05);
            CHECK(g.at(m, n) <= 1.05);
        }
    }
}

TEST_CASE("compact scheme keeps a steady state") {
    SubdiffusionProblem p;
    p.alpha = 0.6;
    p.forcing = [](double, double) { return -2.0; };
    p.u0 = [](double x) { return 1.0 + x * x; };
    p.uL = [](double) { return 1.0; };
    p.uR = [](double) { return 2.0; };
    p.exact = [](double x, double) { return 1.0 + x * x; };
    for (Scheme s : {Scheme::L1, Scheme::ML1, Scheme::CML1}) {
        CHECK(solve(s, p, 20, 15).max_error(p.exact) < 1e-12);
    }
}

TEST_CASE("standard scheme truncation error is O(tau^(2-alpha))") {
    // Residual of the exact S05 solution in the L1 scheme, divided by
    // Gamma(2-a) tau^a. S05 is cubic in x, so the second difference is exact
    // and only the time term remains.
    const double a = 0.4;
    const auto p = catalog_subdiff(CatalogId::S05, a);
    const std::size_t N = 10;
    const double h = 1.0 / N;
    std::vector<double> logt, logr;
    for (std::size_t M = 20; M <= 320; M *= 2) {
        const double tau = 1.0 / M;
        const double g = oracle::gamma(2.0 - a) * std::pow(tau, a);
        const double eta = g / (h * h);
        double worst = 0.0;
        for (std::size_t m = 1; m <= M; ++m) {
            const auto w = weights::l1_weights(a, m);
            for (std::size_t n = 1; n < N; ++n) {
                const double x = n * h;
                auto u = [&](std::size_t k, double y) { return p.exact(y, k * tau); };
                double lhs = 0.0;
                for (std::size_t k = 0; k <= m; ++k) lhs += w[k] * u(m - k, x);
                const double lap = u(m, x - h) - 2.0 * u(m, x) + u(m, x + h);
                const double r = (lhs - eta * lap - g * p.forcing(x, m * tau)) / g;
                worst = std::max(worst, std::abs(r));
            }
        }
        logt.push_back(std::log(tau));
        logr.push_back(std::log(worst));
    }
    // least-squares slope
    const double n = static_cast<double>(logt.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < logt.size(); ++i) {
        sx += logt[i];
        sy += logr[i];
        sxx += logt[i] * logt[i];
        sxy += logt[i] * logr[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope >= 1.45);
    CHECK(slope <= 1.75);
}

TEST_CASE("compact scheme with exact level 1 differs only by startup error") {
    const auto p = catalog_subdiff(CatalogId::S05, 0.4);
    std::vector<double> gaps;
    for (std::size_t M = 20; M <= 160; M *= 2) {
        const std::size_t N = 20;
        std::vector<double> level1(N + 1);
        for (std::size_t n = 0; n <= N; ++n) level1[n] = p.exact(n * (1.0 / N), 1.0 / M);
        const auto with_exact = solve_subdiff_cml1(p, N, M, std::span<const double>(level1));
        const auto standard = solve_subdiff_cml1(p, N, M);
        gaps.push_back(max_gap(with_exact, standard));
    }
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) CHECK(std::log2(gaps[i] / gaps[i + 1]) >= 2.0);
}

TEST_CASE("Table 6 orders: standard schemes") {
    const auto p = catalog_subdiff(CatalogId::S05, 0.4);
    // time direction, N = 50, final-level successive differences
    std::vector<GridSolution> g;
    for (std::size_t M = 160; M <= 640; M *= 2) g.push_back(solve_subdiff(Scheme::L1, p, 50, M));
    const double o = std::log2(max_gap(g[0], g[1], LevelNorm::FinalLevel) /
                               max_gap(g[1], g[2], LevelNorm::FinalLevel));
    CHECK(o == Approx(1.57).epsilon(0.03).scale(0.0));
    // space direction, M = 50
    std::vector<GridSolution> s;
    for (std::size_t N = 40; N <= 160; N *= 2) s.push_back(solve_subdiff(Scheme::ML1, p, N, 50));
    const double os = std::log2(max_gap(s[0], s[1], LevelNorm::FinalLevel) /
                                max_gap(s[1], s[2], LevelNorm::FinalLevel));
    CHECK(os == Approx(2.0).epsilon(0.01).scale(0.0));
}

TEST_CASE("solver preconditions") {
    const auto p = catalog_subdiff(CatalogId::S05, 0.4);
    CHECK_THROWS_AS(solve_subdiff(Scheme::L1, p, 2, 10), DomainError);
    CHECK_THROWS_AS(solve_subdiff(Scheme::L1, p, 10, 1), DomainError);
    CHECK_THROWS_AS(solve_subdiff_cml1(p, 10, 2), DomainError);
    SubdiffusionProblem bad = p;
    bad.uL = [](double) { return 1.0; };  // u0(0) = 0
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
