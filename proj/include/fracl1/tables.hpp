#pragma once

#include <string>
#include <vector>

#include "fracl1/convergence.hpp"
#include "fracl1/study.hpp"

namespace fracl1::harness {

/// How a table's panels are arranged when printed.
///   Panels            independent (step, error, order) panels side by side
///   SchemeErrorOrder  one (error, order) column pair per scheme, shared steps
///   SchemeSpaceTime   space and time orders per scheme, shared steps
enum class TableLayout { Panels, SchemeErrorOrder, SchemeSpaceTime };

struct TablePanel {
    std::string group;   // scheme name, or the panel's function description
    std::string column;  // "space" / "time" for SchemeSpaceTime, else empty
    /// Printed step = solved step * label_scale. The x = 2 panels of the
    /// fourth-order point tables label their rows by 1/N with N the number
    /// of subintervals, which is half the actual step.
    double label_scale = 1.0;
    StudyConfig config;
    ConvergenceReport report;

    std::string title() const;
    std::vector<double> labels() const;
};

struct TableReport {
    int id = 0;
    std::string caption;
    TableLayout layout = TableLayout::Panels;
    std::vector<TablePanel> panels;
};

/// Study configurations of table `id` (1..7) without running them.
/// Throws ConfigError for ids out of range.
std::vector<TablePanel> table_panels(int id);

/// Runs every panel of table `id`. With `parallel` the panels (and the
/// levels inside each panel) are solved concurrently; output order is fixed.
TableReport reproduce_table(int id, bool parallel = false);

}  // namespace fracl1::harness
