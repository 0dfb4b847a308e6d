#pragma once

#include <span>
#include <string>
#include <vector>

namespace fracl1::harness {

/// Errors of a refinement study and the observed orders between successive
/// rows: orders[i] = log2(errors[i] / errors[i+1]). Steps halve row by row.
struct ConvergenceReport {
    std::vector<double> steps;
    std::vector<double> errors;
    std::vector<double> orders;
    std::string meta;
};

/// Componentwise log2 ratios of consecutive errors. Needs at least two
/// errors, all positive and finite; throws DomainError otherwise.
std::vector<double> observed_orders(std::span<const double> errors);

/// Fills `orders` from `errors` and checks the step ladder (strictly
/// decreasing by a factor of two, to 1e-9 relative).
ConvergenceReport make_report(std::vector<double> steps, std::vector<double> errors,
                              std::string meta);

}  // namespace fracl1::harness
