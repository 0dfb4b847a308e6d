#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>

#include "fracl1/catalog_function.hpp"
#include "fracl1/errors.hpp"
#include "fracl1/expr.hpp"
#include "fracl1/operators.hpp"
#include "fracl1/relax.hpp"
#include "fracl1/study.hpp"

namespace fracl1::harness {

namespace {

using operators::CatalogFunction;
using operators::SampledPath;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Evaluates `f` at every input, on worker threads when asked. Results keep
// the input order.
template <class In, class F>
auto map_levels(const std::vector<In>& inputs, bool parallel, F f) {
    using Out = decltype(f(inputs.front()));
    std::vector<Out> out;
    out.reserve(inputs.size());
    if (!parallel) {
        for (const auto& in : inputs) out.push_back(f(in));
        return out;
    }
    std::vector<std::future<Out>> pending;
    pending.reserve(inputs.size());
    for (const auto& in : inputs) {
        pending.push_back(std::async(std::launch::async, [&f, &in] { return f(in); }));
    }
    for (auto& p : pending) out.push_back(p.get());
    return out;
}

std::size_t intervals(double length, double h, const char* what) {
    const double n = length / h;
    const double r = std::round(n);
    if (r < 1.0 || std::abs(n - r) > 1e-9 * std::max(1.0, n)) {
        throw ConfigError(std::string(what) + ": step " + fmt(h) + " does not divide " + fmt(length));
    }
    return static_cast<std::size_t>(r);
}

// Which reference each row is measured against once the measure is resolved.
enum class Reference { Exact, Successive, Richardson };

Reference resolve(Measure m, bool has_exact) {
    switch (m) {
        case Measure::Exact:
            if (!has_exact) throw ConfigError("measure 'exact' needs an exact solution");
            return Reference::Exact;
        case Measure::Successive: return Reference::Successive;
        case Measure::Richardson: return Reference::Richardson;
        case Measure::Auto: break;
    }
    return has_exact ? Reference::Exact : Reference::Richardson;
}

std::string measure_meta(Reference r, const std::vector<double>& solved) {
    switch (r) {
        case Reference::Exact: return " measure=exact";
        case Reference::Successive:
            return " measure=successive(extra coarse step " + fmt(solved.front()) + ")";
        case Reference::Richardson:
            return " measure=richardson(self-refined reference at step " + fmt(solved.back()) +
                   "; no exact solution)";
    }
    return {};
}

// The steps that must actually be solved for the report rows `h`.
std::vector<double> solve_ladder(const std::vector<double>& h, Reference r) {
    std::vector<double> out = h;
    if (r == Reference::Successive) out.insert(out.begin(), 2.0 * h.front());
    if (r == Reference::Richardson) out.push_back(0.5 * h.back());
    return out;
}

// Turns per-level results into row errors. `exact_error(i)` is the error of
// solved level i against the exact solution, `gap(i, j)` the difference of
// solved levels i (coarser) and j.
template <class ExactErr, class Gap>
std::vector<double> row_errors(Reference r, std::size_t rows, ExactErr exact_error, Gap gap) {
    std::vector<double> e(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        switch (r) {
            case Reference::Exact: e[i] = exact_error(i); break;
            case Reference::Successive: e[i] = gap(i, i + 1); break;
            case Reference::Richardson: e[i] = gap(i, rows); break;
        }
    }
    return e;
}

// ---------------------------------------------------------------- point studies

struct PointTarget {
    std::optional<CatalogFunction> catalog;
    std::optional<expr::Expr> function;
    std::optional<expr::Expr> exact;
    double alpha;

    double sample(double t) const {
        return catalog ? (*catalog)(t) : function->eval(t, t, alpha);
    }
    bool has_exact() const { return catalog.has_value() || exact.has_value(); }
};

PointTarget make_target(const StudyConfig& c) {
    PointTarget t{std::nullopt, std::nullopt, std::nullopt, c.alpha};
    try {
        auto kind = operators::parse_catalog_kind(c.function);
        using K = CatalogFunction::Kind;
        switch (kind) {
            case K::Exp: t.catalog = CatalogFunction::exp(c.rate); break;
            case K::Sin: t.catalog = CatalogFunction::sin(c.rate); break;
            case K::Cos: t.catalog = CatalogFunction::cos(c.rate); break;
            case K::ExpMinusX: t.catalog = CatalogFunction::exp_minus_x(c.rate); break;
            case K::Power: t.catalog = CatalogFunction::power(c.power); break;
        }
    } catch (const ConfigError&) {
        t.function = expr::Expr::parse(c.function);
    }
    if (!c.exact.empty()) t.exact = expr::Expr::parse(c.exact);
    return t;
}

ConvergenceReport run_point(const StudyConfig& c) {
    const PointTarget target = make_target(c);
    const bool integral = c.kind == StudyKind::Integral;
    const bool needs_catalog =
        c.method == Method::L1Corrected || c.method == Method::TrapezoidCorrected;
    if (needs_catalog && !target.catalog) {
        throw ConfigError("method '" + std::string(to_string(c.method)) +
                          "' needs derivative data and only works with catalog functions");
    }
    const bool compact = c.method == Method::CML1 || c.method == Method::GrunwaldCompact;
    if (compact && !target.has_exact()) {
        throw ConfigError("compact identity studies need the exact derivative");
    }
    const double a = c.alpha;
    auto exact_at = [&](double x) {
        if (target.exact) return target.exact->eval(x, x, a);
        return integral ? operators::frac_integral_exact(*target.catalog, a, x)
                        : operators::caputo_exact(*target.catalog, a, x);
    };

    const auto rows = c.ladder();
    const Reference ref = resolve(c.measure, target.has_exact());
    if (compact && ref != Reference::Exact) {
        throw ConfigError("compact identity studies are measured against exact values only");
    }
    const auto solved = solve_ladder(rows, ref);

    // Value of the rule at step h; for compact studies, the identity residual.
    auto level = [&](double h) {
        const std::size_t n = intervals(c.x, h, "point study");
        if (compact && n < 3) throw ConfigError("compact identity needs x >= 3h");
        const auto path = SampledPath::from_function([&](double t) { return target.sample(t); }, c.x, n);
        switch (c.method) {
            case Method::L1: return operators::caputo_l1(path, a);
            case Method::ML1: return operators::caputo_ml1(path, a);
            case Method::Grunwald: return operators::caputo_grunwald(path, a);
            case Method::CML1:
                return operators::caputo_ml1(path, a) -
                       operators::compact_rhs3(exact_at(c.x), exact_at(c.x - h), exact_at(c.x - 2 * h));
            case Method::GrunwaldCompact:
                return operators::caputo_grunwald(path, a) -
                       operators::compact_grunwald_rhs3(a, exact_at(c.x), exact_at(c.x - h),
                                                        exact_at(c.x - 2 * h));
            case Method::L1Corrected:
                return operators::caputo_l1_corrected4(
                    path, a, operators::make_bundle(*target.catalog, c.x),
                    operators::caputo_second_shift_exact(*target.catalog, a, c.x));
            case Method::Trapezoid: return operators::frac_integral_trapezoid(path, a);
            case Method::TrapezoidCorrected:
                return operators::frac_integral_corrected4(
                    path, a, operators::make_bundle(*target.catalog, c.x));
        }
        return 0.0;
    };
    const auto values = map_levels(solved, c.parallel, level);
    const double exact = (ref == Reference::Exact && !compact) ? exact_at(c.x) : 0.0;
    auto errors = row_errors(
        ref, rows.size(), [&](std::size_t i) { return std::abs(values[i] - exact); },
        [&](std::size_t i, std::size_t j) { return std::abs(values[i] - values[j]); });

    std::string meta = std::string(to_string(c.kind)) + " " + std::string(to_string(c.method)) +
                       " function=" + c.function + " alpha=" + fmt(a) + " x=" + fmt(c.x);
    meta += measure_meta(ref, solved);
    return make_report(rows, std::move(errors), std::move(meta));
}

// ---------------------------------------------------------------- relaxation

relax::RelaxationProblem make_relax_problem(const StudyConfig& c) {
    if (c.problem != "custom") {
        return relax::catalog_relax(relax::parse_catalog_id(c.problem), c.alpha, c.taylor_order);
    }
    relax::RelaxationProblem p;
    p.name = "custom";
    p.alpha = c.alpha;
    p.lambda = c.lambda;
    p.y0 = c.y0;
    p.horizon = c.horizon;
    const double a = c.alpha;
    auto f = expr::Expr::parse(c.forcing);
    p.forcing = [f, a](double x) { return f.eval(x, x, a); };
    if (!c.exact.empty()) {
        auto e = expr::Expr::parse(c.exact);
        p.exact = [e, a](double x) { return e.eval(x, x, a); };
    }
    return p;
}

Scheme scheme_of(Method m) {
    switch (m) {
        case Method::L1: return Scheme::L1;
        case Method::ML1: return Scheme::ML1;
        case Method::CML1: return Scheme::CML1;
        default: break;
    }
    throw ConfigError("method '" + std::string(to_string(m)) + "' is not a time-stepping scheme");
}

// Max difference of two traces on the nodes of the coarser one.
double trace_gap(const relax::SolutionTrace& coarse, const relax::SolutionTrace& fine) {
    const std::size_t r = fine.n() / coarse.n();
    double g = 0.0;
    for (std::size_t i = 0; i <= coarse.n(); ++i) {
        g = std::max(g, std::abs(coarse.values[i] - fine.values[i * r]));
    }
    return g;
}

ConvergenceReport run_relax(const StudyConfig& c) {
    const auto p = make_relax_problem(c);
    const Scheme s = scheme_of(c.method);
    const auto rows = c.ladder();
    const Reference ref = resolve(c.measure, p.has_exact());
    const auto solved = solve_ladder(rows, ref);
    relax::SolveOptions opts;
    opts.zero_first_step = c.zero_first_step;

    const auto traces = map_levels(solved, c.parallel, [&](double h) {
        return relax::solve_relax(s, p, intervals(p.horizon, h, "relax study"), opts);
    });
    auto errors = row_errors(
        ref, rows.size(), [&](std::size_t i) { return traces[i].max_error(p.exact); },
        [&](std::size_t i, std::size_t j) { return trace_gap(traces[i], traces[j]); });

    std::string meta = "relax " + std::string(to_string(c.method)) + " problem=" + p.name +
                       " alpha=" + fmt(c.alpha);
    if (c.taylor_order && c.problem == "R3") meta += " m=" + std::to_string(*c.taylor_order);
    if (c.zero_first_step) meta += " zero_first_step";
    meta += measure_meta(ref, solved);
    return make_report(rows, std::move(errors), std::move(meta));
}

// ---------------------------------------------------------------- subdiffusion

subdiff::SubdiffusionProblem make_subdiff_problem(const StudyConfig& c) {
    if (c.problem != "custom") {
        return subdiff::catalog_subdiff(subdiff::parse_catalog_id(c.problem), c.alpha);
    }
    subdiff::SubdiffusionProblem p;
    p.name = "custom";
    p.alpha = c.alpha;
    p.x_max = c.x_max;
    p.t_max = c.t_max;
    const double a = c.alpha;
    const double X = c.x_max;
    auto f = expr::Expr::parse(c.forcing);
    auto u0 = expr::Expr::parse(c.u0);
    auto ul = expr::Expr::parse(c.u_left);
    auto ur = expr::Expr::parse(c.u_right);
    p.forcing = [f, a](double x, double t) { return f.eval(x, t, a); };
    p.u0 = [u0, a](double x) { return u0.eval(x, 0.0, a); };
    p.uL = [ul, a](double t) { return ul.eval(0.0, t, a); };
    p.uR = [ur, a, X](double t) { return ur.eval(X, t, a); };
    if (!c.exact.empty()) {
        auto e = expr::Expr::parse(c.exact);
        p.exact = [e, a](double x, double t) { return e.eval(x, t, a); };
    }
    p.validate();
    return p;
}

ConvergenceReport run_subdiff(const StudyConfig& c) {
    const auto p = make_subdiff_problem(c);
    const Scheme s = scheme_of(c.method);
    const auto rows = c.ladder();
    const Reference ref = resolve(c.measure, p.has_exact());
    const auto solved = solve_ladder(rows, ref);
    subdiff::SubdiffOptions opts;
    opts.zero_first_level = c.zero_first_step;
    const bool space = c.direction == Direction::Space;

    const auto grids = map_levels(solved, c.parallel, [&](double h) {
        const std::size_t N = space ? intervals(p.x_max, h, "subdiff study") : c.fixed;
        const std::size_t M = space ? c.fixed : intervals(p.t_max, h, "subdiff study");
        return subdiff::solve(s, p, N, M, opts);
    });
    auto errors = row_errors(
        ref, rows.size(), [&](std::size_t i) { return grids[i].max_error(p.exact, c.norm); },
        [&](std::size_t i, std::size_t j) { return subdiff::max_gap(grids[i], grids[j], c.norm); });

    std::string meta = "subdiff " + std::string(to_string(c.method)) + " problem=" + p.name +
                       " alpha=" + fmt(c.alpha) + " direction=" + std::string(to_string(c.direction)) +
                       (space ? " M=" : " N=") + std::to_string(c.fixed) +
                       (c.norm == subdiff::LevelNorm::FinalLevel ? " norm=final_level"
                                                                  : " norm=all_levels");
    if (c.zero_first_step) meta += " zero_first_level";
    meta += measure_meta(ref, solved);
    return make_report(rows, std::move(errors), std::move(meta));
}

}  // namespace

ConvergenceReport run_study(const StudyConfig& c) {
    c.validate();
    switch (c.kind) {
        case StudyKind::PointApprox:
        case StudyKind::Integral: return run_point(c);
        case StudyKind::Relax: return run_relax(c);
        case StudyKind::Subdiff: return run_subdiff(c);
    }
    throw ConfigError("unknown study kind");
}

}  // namespace fracl1::harness
