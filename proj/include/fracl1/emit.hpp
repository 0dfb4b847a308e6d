#pragma once

#include <string>
#include <string_view>

#include "fracl1/convergence.hpp"
#include "fracl1/tables.hpp"

namespace fracl1::harness {

enum class Format { Csv, Markdown };

Format parse_format(std::string_view s);

/// Six significant digits. Magnitudes below 1e-3 or from 1e6 up use
/// scientific notation with a bare exponent ("7.51014e-4"); others are
/// plain decimals ("0.05", "2.43714").
std::string format_number(double v);

/// One report. CSV is the header "step,error,order" followed by one row per
/// step, the first row's order left blank. Steps are multiplied by
/// `label_scale` before printing.
std::string emit(const ConvergenceReport& r, Format f, double label_scale = 1.0);

/// A whole table. CSV prints one "# panel: <title>" block per panel,
/// separated by blank lines; markdown follows the table's layout.
std::string emit(const TableReport& t, Format f);

}  // namespace fracl1::harness
