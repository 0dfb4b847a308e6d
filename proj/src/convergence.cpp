#include "fracl1/convergence.hpp"

#include <cmath>

#include "fracl1/errors.hpp"

namespace fracl1::harness {

std::vector<double> observed_orders(std::span<const double> errors) {
    if (errors.size() < 2) throw DomainError("observed_orders: need at least two errors");
    for (double e : errors) {
        if (!(e > 0.0) || !std::isfinite(e)) {
            throw DomainError("observed_orders: errors must be positive and finite");
        }
    }
    std::vector<double> orders(errors.size() - 1);
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        orders[i] = std::log2(errors[i] / errors[i + 1]);
    }
    return orders;
}

ConvergenceReport make_report(std::vector<double> steps, std::vector<double> errors,
                              std::string meta) {
    if (steps.size() != errors.size()) {
        throw DomainError("make_report: steps and errors differ in length");
    }
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (std::abs(steps[i] - 2.0 * steps[i + 1]) > 1e-9 * steps[i]) {
            throw DomainError("make_report: steps must halve from row to row");
        }
    }
    ConvergenceReport r;
    r.orders = observed_orders(errors);
    r.steps = std::move(steps);
    r.errors = std::move(errors);
    r.meta = std::move(meta);
    return r;
}

}  // namespace fracl1::harness
