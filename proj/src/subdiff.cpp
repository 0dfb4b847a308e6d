#include "fracl1/subdiff.hpp"

#include <cmath>
#include <numbers>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"
#include "fracl1/tridiag.hpp"
#include "fracl1/weights.hpp"

namespace fracl1::subdiff {
namespace {

using weights::Family;
using weights::IncrementalWeights;

// While a solve runs, the grid holds V = U - B, where B is the linear
// interpolant of the boundary values at each level. The second difference of B
// vanishes, so V has homogeneous boundary data, no eta-scaled boundary terms
// reach the right side, and the stored values stay small. finish() adds B back.
struct Setup {
    std::size_t N, M;
    double h, tau, g, eta;
    GridSolution grid;
    std::vector<double> left, right;  // boundary values per level

    Setup(const SubdiffusionProblem& p, std::size_t n_space, std::size_t n_time,
          std::size_t min_levels)
        : N(n_space), M(n_time), h(0), tau(0), g(0), eta(0),
          grid(n_space, n_time, p.x_max / n_space, p.t_max / n_time) {
        p.validate();
        if (N < 3) throw InsufficientSamplesError("subdiffusion: N must be at least 3");
        if (M < min_levels) {
            throw InsufficientSamplesError("subdiffusion: M must be at least " +
                                           std::to_string(min_levels));
        }
        h = grid.h();
        tau = grid.tau();
        g = specfun::gamma(2.0 - p.alpha) * std::pow(tau, p.alpha);
        eta = g / (h * h);
        left.resize(M + 1);
        right.resize(M + 1);
        left[0] = p.u0(0.0);
        right[0] = p.u0(p.x_max);
        for (std::size_t m = 1; m <= M; ++m) {
            left[m] = p.uL(t(m));
            right[m] = p.uR(t(m));
        }
        auto r0 = grid.row(0);
        for (std::size_t n = 1; n < N; ++n) r0[n] = p.u0(x(n)) - lift(0, n);
    }

    double x(std::size_t n) const { return h * static_cast<double>(n); }
    double t(std::size_t m) const { return tau * static_cast<double>(m); }
    double frac(std::size_t n) const { return static_cast<double>(n) / static_cast<double>(N); }
    double lift(std::size_t m, std::size_t n) const {
        return left[m] + (right[m] - left[m]) * frac(n);
    }

    // Stores a full row of U values at level m in lifted form.
    void store_row(std::size_t m, std::span<const double> u) {
        auto row = grid.row(m);
        for (std::size_t n = 1; n < N; ++n) row[n] = u[n] - lift(m, n);
    }

    GridSolution finish() {
        for (std::size_t m = 0; m <= M; ++m) {
            auto row = grid.row(m);
            for (std::size_t n = 1; n < N; ++n) row[n] += lift(m, n);
            row[0] = left[m];
            row[N] = right[m];
        }
        return std::move(grid);
    }
};

// acc[n] = sum_{k=1}^{m} w_k V[m-k][n] over interior nodes, with w the
// level-m weight sequence.
void history_sums(const GridSolution& grid, std::span<const double> w, std::size_t m,
                  std::vector<double>& acc) {
    const std::size_t N = grid.nodes();
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t k = 1; k <= m; ++k) {
        const double wk = w[k];
        const auto prev = grid.row(m - k);
        for (std::size_t n = 1; n < N; ++n) acc[n - 1] += wk * prev[n];
    }
}

// sum_{k=0}^{m} w_k b[m-k] with Neumaier compensation; the terms are O(|b|)
// while the sum is O(Gamma(2-alpha) tau^alpha).
double boundary_sum(std::span<const double> w, const std::vector<double>& b, std::size_t m) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        const double term = w[k] * b[m - k];
        const double next = sum + term;
        comp += (std::abs(sum) >= std::abs(term)) ? (sum - next) + term : (term - next) + sum;
        sum = next;
    }
    return sum + comp;
}

// Right-side contribution sum_k w_k B[m-k][n] of the boundary interpolant.
struct BoundaryTerm {
    double at_left, at_right;
    double operator()(const Setup& s, std::size_t n) const {
        return at_left + (at_right - at_left) * s.frac(n);
    }
};

BoundaryTerm boundary_term(const Setup& s, std::span<const double> w, std::size_t m) {
    return {boundary_sum(w, s.left, m), boundary_sum(w, s.right, m)};
}

void level_weights(const IncrementalWeights& weights, std::size_t m, std::vector<double>& w) {
    w.resize(m + 1);
    for (std::size_t k = 0; k <= m; ++k) w[k] = weights.at(k, m);
}

// eta * (V[m][n-1] - 2 V[m][n] + V[m][n+1]) on the interior.
std::vector<double> direct_laplacian(const GridSolution& grid, std::size_t m, double eta) {
    const std::size_t N = grid.nodes();
    const auto v = grid.row(m);
    std::vector<double> lap(N - 1);
    for (std::size_t n = 1; n < N; ++n) lap[n - 1] = eta * (v[n - 1] - 2.0 * v[n] + v[n + 1]);
    return lap;
}

// Solves shift V - coupling D2 V = rhs into row m and returns eta D2 V there,
// read off the equation as (shift V - rhs) * eta / coupling.
std::vector<double> finish_level(GridSolution& grid, std::size_t m, const ShiftedLaplacian& K,
                                 double shift, double eta_over_coupling,
                                 const std::vector<double>& rhs) {
    std::vector<double> v = K.solve(rhs);
    std::copy(v.begin(), v.end(), grid.row(m).begin() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (shift * v[i] - rhs[i]) * eta_over_coupling;
    return v;
}

// One implicit level of the standard scheme with weights w (size m+1).
std::vector<double> standard_level(const SubdiffusionProblem& p, Setup& s,
                                   std::span<const double> w, std::size_t m,
                                   const ShiftedLaplacian& K, std::vector<double>& acc) {
    const std::size_t N = s.N;
    history_sums(s.grid, w, m, acc);
    const BoundaryTerm bt = boundary_term(s, w, m);
    std::vector<double> rhs(N - 1);
    const double tm = s.t(m);
    for (std::size_t n = 1; n < N; ++n) {
        rhs[n - 1] = s.g * p.forcing(s.x(n), tm) - acc[n - 1] - bt(s, n);
    }
    return finish_level(s.grid, m, K, w[0], 1.0, rhs);
}

}  // namespace

void SubdiffusionProblem::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("subdiffusion: alpha must lie in (0,1)");
    if (!(x_max > 0.0) || !(t_max > 0.0)) throw DomainError("subdiffusion: empty domain");
    if (!forcing || !u0 || !uL || !uR) throw DomainError("subdiffusion: missing problem data");
    if (std::abs(u0(0.0) - uL(0.0)) > 1e-10 || std::abs(u0(x_max) - uR(0.0)) > 1e-10) {
        throw DomainError("subdiffusion: initial and boundary data disagree at the corners");
    }
}

GridSolution::GridSolution(std::size_t N, std::size_t M, double h, double tau)
    : N_(N), M_(M), h_(h), tau_(tau), data_((N + 1) * (M + 1), 0.0) {}

double GridSolution::max_error(const SpaceTimeFn& exact, LevelNorm norm) const {
    double err = 0.0;
    for (std::size_t m = norm == LevelNorm::FinalLevel ? M_ : 0; m <= M_; ++m) {
        const double t = tau_ * static_cast<double>(m);
        for (std::size_t n = 1; n < N_; ++n) {
            err = std::max(err, std::abs(at(m, n) - exact(h_ * static_cast<double>(n), t)));
        }
    }
    return err;
}

double max_gap(const GridSolution& coarse, const GridSolution& fine, LevelNorm norm) {
    if (fine.nodes() % coarse.nodes() != 0 || fine.levels() % coarse.levels() != 0) {
        throw DomainError("max_gap: fine grid must refine the coarse grid");
    }
    const std::size_t rx = fine.nodes() / coarse.nodes();
    const std::size_t rt = fine.levels() / coarse.levels();
    double gap = 0.0;
    for (std::size_t m = norm == LevelNorm::FinalLevel ? coarse.levels() : 0;
         m <= coarse.levels(); ++m) {
        for (std::size_t n = 1; n < coarse.nodes(); ++n) {
            gap = std::max(gap, std::abs(coarse.at(m, n) - fine.at(m * rt, n * rx)));
        }
    }
    return gap;
}

GridSolution solve_subdiff(Scheme scheme, const SubdiffusionProblem& p, std::size_t N,
                           std::size_t M, const SubdiffOptions& opts) {
    if (scheme == Scheme::CML1) return solve_subdiff_cml1(p, N, M, std::nullopt, opts);
    Setup s(p, N, M, 2);
    IncrementalWeights l1(Family::L1, p.alpha);
    IncrementalWeights ml1(Family::ML1, p.alpha);
    l1.extend_to(M);
    ml1.extend_to(M);
    // sigma_0 at every level; delta_0 is the same for all levels m >= 2.
    const ShiftedLaplacian K_l1(N - 1, l1.at(0, 1), s.eta);
    const ShiftedLaplacian K_ml1(N - 1, ml1.at(0, 2), s.eta);
    std::vector<double> w;
    std::vector<double> acc(N - 1);
    for (std::size_t m = opts.zero_first_level ? 2 : 1; m <= M; ++m) {
        const bool modified = scheme == Scheme::ML1 && m >= 2;
        level_weights(modified ? ml1 : l1, m, w);
        standard_level(p, s, w, m, modified ? K_ml1 : K_l1, acc);
    }
    return s.finish();
}

GridSolution solve_subdiff_cml1(const SubdiffusionProblem& p, std::size_t N, std::size_t M,
                                std::optional<std::span<const double>> level1,
                                const SubdiffOptions& opts) {
    Setup s(p, N, M, 3);
    IncrementalWeights l1(Family::L1, p.alpha);
    IncrementalWeights ml1(Family::ML1, p.alpha);
    l1.extend_to(M);
    ml1.extend_to(M);
    std::vector<double> w;
    std::vector<double> acc(N - 1);
    const double eta = s.eta;

    // lap_older / lap_old hold eta * D2 U at levels m-2 and m-1.
    std::vector<double> lap_older = direct_laplacian(s.grid, 0, eta);
    std::vector<double> lap_old;
    if (level1) {
        if (level1->size() != N + 1) throw DomainError("solve_subdiff_cml1: level-1 row size");
        s.store_row(1, *level1);
        lap_old = direct_laplacian(s.grid, 1, eta);
    } else if (opts.zero_first_level) {
        lap_old = direct_laplacian(s.grid, 1, eta);
    } else {
        level_weights(l1, 1, w);
        lap_old = standard_level(p, s, w, 1, ShiftedLaplacian(N - 1, w[0], eta), acc);
    }

    const double c0 = 13.0 / 12.0, c1 = -1.0 / 6.0, c2 = 1.0 / 12.0;
    const double d0 = ml1.at(0, 2);
    const ShiftedLaplacian K(N - 1, d0, c0 * eta);
    std::vector<double> rhs(N - 1);
    for (std::size_t m = 2; m <= M; ++m) {
        level_weights(ml1, m, w);
        history_sums(s.grid, w, m, acc);
        const BoundaryTerm bt = boundary_term(s, w, m);
        const double t0 = s.t(m), t1 = s.t(m - 1), t2 = s.t(m - 2);
        for (std::size_t n = 1; n < N; ++n) {
            const double xn = s.x(n);
            const double G =
                c0 * p.forcing(xn, t0) + c1 * p.forcing(xn, t1) + c2 * p.forcing(xn, t2);
            rhs[n - 1] = s.g * G - acc[n - 1] - bt(s, n) + c1 * lap_old[n - 1] +
                         c2 * lap_older[n - 1];
        }
        auto lap = finish_level(s.grid, m, K, d0, 1.0 / c0, rhs);
        lap_older = std::move(lap_old);
        lap_old = std::move(lap);
    }
    return s.finish();
}

GridSolution solve(Scheme scheme, const SubdiffusionProblem& p, std::size_t N, std::size_t M,
                   const SubdiffOptions& opts) {
    return scheme == Scheme::CML1 ? solve_subdiff_cml1(p, N, M, std::nullopt, opts)
                                  : solve_subdiff(scheme, p, N, M, opts);
}

CatalogId parse_catalog_id(std::string_view name) {
    if (name == "S05" || name == "s05") return CatalogId::S05;
    if (name == "S06" || name == "s06") return CatalogId::S06;
    if (name == "S15" || name == "s15") return CatalogId::S15;
    if (name == "S16" || name == "s16") return CatalogId::S16;
    throw ConfigError("unknown subdiffusion problem '" + std::string(name) + "'");
}

std::string_view to_string(CatalogId id) {
    switch (id) {
        case CatalogId::S05: return "S05";
        case CatalogId::S06: return "S06";
        case CatalogId::S15: return "S15";
        case CatalogId::S16: return "S16";
    }
    return "?";
}

SubdiffusionProblem catalog_subdiff(CatalogId id, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("catalog_subdiff: alpha must lie in (0,1)");
    const double a = alpha;
    const double pi = std::numbers::pi;
    SubdiffusionProblem p;
    p.alpha = a;
    auto zero_t = [](double) { return 0.0; };
    switch (id) {
        case CatalogId::S05: {
            p.name = "S05";
            p.x_max = 1.0;
            p.t_max = 1.0;
            const double c = specfun::gamma(4.0 - a) / specfun::gamma(4.0 - 2.0 * a);
            p.forcing = [a, c](double x, double t) {
                const double shape = 1.0 + 2.0 * x * x + 3.0 * x * x * x;
                return c * shape * std::pow(t, 3.0 - 2.0 * a) -
                       (4.0 + 18.0 * x) * std::pow(t, 3.0 - a);
            };
            p.u0 = [](double) { return 0.0; };
            p.uL = [a](double t) { return std::pow(t, 3.0 - a); };
            p.uR = [a](double t) { return 6.0 * std::pow(t, 3.0 - a); };
            p.exact = [a](double x, double t) {
                return (1.0 + 2.0 * x * x + 3.0 * x * x * x) * std::pow(t, 3.0 - a);
            };
            break;
        }
        case CatalogId::S06: {
            p.name = "S06";
            p.x_max = pi;
            p.t_max = pi;
            p.forcing = [](double, double) { return 0.0; };
            p.u0 = [](double x) { return std::sin(x); };
            p.uL = zero_t;
            p.uR = zero_t;
            p.exact = [a](double x, double t) {
                return std::sin(x) * specfun::mittag_leffler({a, 1.0}, -std::pow(t, a));
            };
            break;
        }
        case CatalogId::S15:
        case CatalogId::S16: {
            if (a != 0.5) throw DomainError("catalog_subdiff: S15/S16 are defined for alpha = 0.5");
            const std::size_t m = (id == CatalogId::S15) ? 4 : 5;
            p.name = (id == CatalogId::S15) ? "S15" : "S16";
            p.x_max = pi;
            p.t_max = pi;
            // (-1)^(m+1) sin x t^(m alpha) / Gamma(m alpha + 1)
            const double sign = (m % 2 == 0) ? -1.0 : 1.0;
            const double scale = sign / specfun::gamma(0.5 * static_cast<double>(m) + 1.0);
            const double power = 0.5 * static_cast<double>(m);
            p.forcing = [scale, power](double x, double t) {
                return scale * std::pow(t, power) * std::sin(x);
            };
            p.u0 = [](double) { return 0.0; };
            p.uL = zero_t;
            p.uR = zero_t;
            p.exact = [m](double x, double t) {
                if (t == 0.0) return 0.0;
                return std::sin(x) *
                       specfun::mittag_leffler_tail({0.5, 1.0}, -std::sqrt(t), m + 1);
            };
            break;
        }
    }
    return p;
}

}  // namespace fracl1::subdiff
