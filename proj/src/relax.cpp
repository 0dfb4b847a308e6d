#include "fracl1/relax.hpp"

#include <cmath>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"
#include "fracl1/weights.hpp"

namespace fracl1::relax {
namespace {

using weights::Family;
using weights::IncrementalWeights;

void check_denominator(double den, double scale, const char* who) {
    if (!std::isfinite(den) || std::abs(den) <= 1e-14 * (1.0 + std::abs(scale))) {
        throw SingularError(std::string(who) + ": vanishing step denominator");
    }
}

struct Stepper {
    const RelaxationProblem& p;
    std::size_t N;
    double h;
    double g;  // Gamma(2-alpha) h^alpha
    std::vector<double> forcing;  // F(x_n)

    Stepper(const RelaxationProblem& prob, std::size_t n_steps, std::size_t min_steps)
        : p(prob), N(n_steps) {
        p.validate();
        if (N < min_steps) {
            throw InsufficientSamplesError("solve_relax: N must be at least " +
                                           std::to_string(min_steps));
        }
        h = p.horizon / static_cast<double>(N);
        g = specfun::gamma(2.0 - p.alpha) * std::pow(h, p.alpha);
        forcing.resize(N + 1);
        for (std::size_t n = 0; n <= N; ++n) forcing[n] = p.forcing(h * static_cast<double>(n));
    }

    // One L1 step at n = 1: (y0 + g F_1) / (1 + lambda g).
    double first_step(const SolveOptions& opts) const {
        if (opts.zero_first_step) return 0.0;
        const double den = 1.0 + p.lambda * g;
        check_denominator(den, p.lambda * g, "solve_relax");
        return (g * forcing[1] + p.y0) / den;
    }
};

}  // namespace

void RelaxationProblem::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("relaxation: alpha must lie in (0,1)");
    if (!(horizon > 0.0)) throw DomainError("relaxation: horizon must be positive");
    if (!forcing) throw DomainError("relaxation: forcing function missing");
}

double SolutionTrace::max_error(const ScalarFn& exact) const {
    double err = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        err = std::max(err, std::abs(values[i] - exact(step * static_cast<double>(i))));
    }
    return err;
}

SolutionTrace solve_relax_l1(const RelaxationProblem& p, std::size_t N, const SolveOptions&) {
    Stepper s(p, N, 2);
    IncrementalWeights w(Family::L1, p.alpha);
    w.extend_to(N);
    std::vector<double> u(N + 1);
    u[0] = p.y0;
    const double den = 1.0 + p.lambda * s.g;
    check_denominator(den, p.lambda * s.g, "solve_relax_l1");
    for (std::size_t n = 1; n <= N; ++n) {
        u[n] = (s.g * s.forcing[n] - w.history_sum(n, u)) / den;
    }
    return {std::move(u), s.h};
}

SolutionTrace solve_relax_ml1(const RelaxationProblem& p, std::size_t N, const SolveOptions& opts) {
    Stepper s(p, N, 2);
    IncrementalWeights w(Family::ML1, p.alpha);
    w.extend_to(N);
    std::vector<double> v(N + 1);
    v[0] = p.y0;
    v[1] = s.first_step(opts);
    const double den = w.at(0, 2) + p.lambda * s.g;
    check_denominator(den, p.lambda * s.g, "solve_relax_ml1");
    for (std::size_t n = 2; n <= N; ++n) {
        v[n] = (s.g * s.forcing[n] - w.history_sum(n, v)) / den;
    }
    return {std::move(v), s.h};
}

SolutionTrace solve_relax_cml1(const RelaxationProblem& p, std::size_t N,
                               const SolveOptions& opts) {
    Stepper s(p, N, 3);
    IncrementalWeights w(Family::ML1, p.alpha);
    w.extend_to(N);
    const double lam = p.lambda;
    const double g = s.g;
    const auto& F = s.forcing;
    std::vector<double> y(N + 1);
    y[0] = p.y0;
    y[1] = s.first_step(opts);
    const double den = 12.0 * w.at(0, 2) + 13.0 * lam * g;
    check_denominator(den, lam * g, "solve_relax_cml1");
    for (std::size_t n = 2; n <= N; ++n) {
        const double rhs = -12.0 * w.history_sum(n, y) +
                           g * (13.0 * F[n] - 2.0 * (F[n - 1] - lam * y[n - 1]) +
                                (F[n - 2] - lam * y[n - 2]));
        y[n] = rhs / den;
    }
    return {std::move(y), s.h};
}

SolutionTrace solve_relax(Scheme scheme, const RelaxationProblem& p, std::size_t N,
                          const SolveOptions& opts) {
    switch (scheme) {
        case Scheme::L1: return solve_relax_l1(p, N, opts);
        case Scheme::ML1: return solve_relax_ml1(p, N, opts);
        case Scheme::CML1: return solve_relax_cml1(p, N, opts);
    }
    throw DomainError("solve_relax: unknown scheme");
}

double fractional_taylor_eval(const FractionalTaylor& t, double x) {
    if (x < 0.0) throw DomainError("fractional_taylor_eval: x must be nonnegative");
    double sum = 0.0;
    for (std::size_t n = 0; n < t.coeffs.size(); ++n) {
        const double an = t.alpha * static_cast<double>(n);
        const double xp = (n == 0) ? 1.0 : std::pow(x, an);
        sum += t.coeffs[n] * xp / specfun::gamma(an + 1.0);
    }
    return sum;
}

FractionalTaylor r2_fractional_taylor(double alpha, std::size_t m) {
    FractionalTaylor t{alpha, {}};
    const double c = 1.0 + specfun::gamma(alpha + 1.0);
    for (std::size_t n = 0; n <= m; ++n) {
        if (n == 0) {
            t.coeffs.push_back(1.0);
        } else if (n == 1) {
            t.coeffs.push_back(-1.0);
        } else {
            t.coeffs.push_back((n % 2 == 0) ? c : -c);
        }
    }
    return t;
}

CatalogId parse_catalog_id(std::string_view name) {
    if (name == "R1" || name == "r1") return CatalogId::R1;
    if (name == "R2" || name == "r2") return CatalogId::R2;
    if (name == "R3" || name == "r3") return CatalogId::R3;
    throw ConfigError("unknown relaxation problem '" + std::string(name) + "'");
}

std::string_view to_string(CatalogId id) {
    switch (id) {
        case CatalogId::R1: return "R1";
        case CatalogId::R2: return "R2";
        case CatalogId::R3: return "R3";
    }
    return "?";
}

RelaxationProblem catalog_relax(CatalogId id, double alpha, std::optional<int> m) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("catalog_relax: alpha must lie in (0,1)");
    RelaxationProblem p;
    p.alpha = alpha;
    p.lambda = 1.0;
    p.horizon = 1.0;
    const double a = alpha;
    switch (id) {
        case CatalogId::R1: {
            p.name = "R1";
            const double c = specfun::gamma(4.0 - a) / specfun::gamma(4.0 - 2.0 * a);
            p.forcing = [a, c](double x) {
                return std::pow(x, 3.0 - a) + c * std::pow(x, 3.0 - 2.0 * a);
            };
            p.y0 = 0.0;
            p.exact = [a](double x) { return std::pow(x, 3.0 - a); };
            break;
        }
        case CatalogId::R2: {
            p.name = "R2";
            const double ga = specfun::gamma(a + 1.0);
            p.forcing = [a](double x) { return std::pow(x, a); };
            p.y0 = 1.0;
            p.exact = [a, ga](double x) {
                const double z = -std::pow(x, a);
                return specfun::mittag_leffler({a, 1.0}, z) +
                       ga * std::pow(x, 2.0 * a) * specfun::mittag_leffler({a, 2.0 * a + 1.0}, z);
            };
            break;
        }
        case CatalogId::R3: {
            if (!m || *m < 2) throw DomainError("catalog_relax: R3 requires m >= 2");
            const int order = *m;
            p.name = "R3(m=" + std::to_string(order) + ")";
            const double c = 1.0 + specfun::gamma(a + 1.0);
            const double sign = (order % 2 == 0) ? -1.0 : 1.0;  // (-1)^(m+1)
            const double gm = specfun::gamma(a * order + 1.0);
            p.forcing = [=](double x) { return sign * c * std::pow(x, a * order) / gm; };
            p.y0 = 0.0;
            // R2 solution minus T_m is c * sum_{n>m} (-x^a)^n / Gamma(a n + 1);
            // summing the tail directly avoids the cancellation of the difference.
            p.exact = [=](double x) {
                if (x == 0.0) return 0.0;
                return c * specfun::mittag_leffler_tail({a, 1.0}, -std::pow(x, a),
                                                        static_cast<std::size_t>(order) + 1);
            };
            break;
        }
    }
    return p;
}

}  // namespace fracl1::relax
