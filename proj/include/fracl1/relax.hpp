#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracl1/scheme.hpp"

namespace fracl1::relax {

using ScalarFn = std::function<double(double)>;

/// y^{(alpha)}(x) + lambda y(x) = F(x) on [0, horizon], y(0) = y0.
struct RelaxationProblem {
    std::string name = "custom";
    double alpha = 0.5;
    double lambda = 1.0;
    ScalarFn forcing;
    double y0 = 0.0;
    ScalarFn exact;  // empty when unknown
    double horizon = 1.0;

    bool has_exact() const { return static_cast<bool>(exact); }
    void validate() const;
};

/// Numerical solution on the uniform grid x_n = n * step.
struct SolutionTrace {
    std::vector<double> values;
    double step = 0.0;

    std::size_t n() const { return values.size() - 1; }
    /// Maximum of |values[n] - exact(n * step)| over all nodes.
    double max_error(const ScalarFn& exact) const;
};

using fracl1::Scheme;

struct SolveOptions {
    /// The caller certifies y(0) = y'(0) = 0, so the first step may be set
    /// to zero instead of taken with the one-step recurrence.
    bool zero_first_step = false;
};

SolutionTrace solve_relax_l1(const RelaxationProblem& p, std::size_t N,
                             const SolveOptions& opts = {});
SolutionTrace solve_relax_ml1(const RelaxationProblem& p, std::size_t N,
                              const SolveOptions& opts = {});
SolutionTrace solve_relax_cml1(const RelaxationProblem& p, std::size_t N,
                               const SolveOptions& opts = {});
SolutionTrace solve_relax(Scheme s, const RelaxationProblem& p, std::size_t N,
                          const SolveOptions& opts = {});

/// T_m(x) = sum_n coeffs[n] x^(alpha n) / Gamma(alpha n + 1), where coeffs[n]
/// are the sequential derivatives y^{[n alpha]}(0).
struct FractionalTaylor {
    double alpha = 0.5;
    std::vector<double> coeffs;
};

double fractional_taylor_eval(const FractionalTaylor& t, double x);

/// Taylor data of the R2 solution: 1, -1, then (-1)^n (1 + Gamma(alpha+1)).
FractionalTaylor r2_fractional_taylor(double alpha, std::size_t m);

enum class CatalogId { R1, R2, R3 };

CatalogId parse_catalog_id(std::string_view name);
std::string_view to_string(CatalogId id);

/// R1: smooth solution x^(3-alpha); R2: Mittag-Leffler solution with y(0)=1;
/// R3: R2 with its degree-m fractional Taylor polynomial removed (m >= 2).
RelaxationProblem catalog_relax(CatalogId id, double alpha, std::optional<int> m = std::nullopt);

}  // namespace fracl1::relax
