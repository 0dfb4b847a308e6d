#include "fracl1/emit.hpp"

#include <cmath>
#include <cstdio>

#include "fracl1/errors.hpp"

namespace fracl1::harness {

Format parse_format(std::string_view s) {
    if (s == "csv") return Format::Csv;
    if (s == "md" || s == "markdown") return Format::Markdown;
    throw ConfigError("unknown format '" + std::string(s) + "' (csv or md)");
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[48];
    const double a = std::abs(v);
    if (a >= 1e-3 && a < 1e6) {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.5e", v);
    std::string s = buf;
    const auto e = s.find('e');
    std::string mantissa = s.substr(0, e);
    if (mantissa.find('.') != std::string::npos) {
        while (mantissa.back() == '0') mantissa.pop_back();
        if (mantissa.back() == '.') mantissa.pop_back();
    }
    std::string exponent = s.substr(e + 1);
    std::string sign;
    if (exponent.front() == '-') sign = "-";
    exponent.erase(0, 1);
    while (exponent.size() > 1 && exponent.front() == '0') exponent.erase(0, 1);
    return mantissa + "e" + sign + exponent;
}

namespace {

std::string cell(const ConvergenceReport& r, std::size_t row, bool order) {
    if (row >= r.steps.size()) return "";
    if (!order) return format_number(r.errors[row]);
    return row == 0 ? "" : format_number(r.orders[row - 1]);
}

std::string csv(const ConvergenceReport& r, double scale) {
    std::string out = "step,error,order\n";
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        out += format_number(r.steps[i] * scale) + "," + cell(r, i, false) + "," + cell(r, i, true) +
               "\n";
    }
    return out;
}

std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
}

std::string md_rule(std::size_t n) {
    std::string out = "|";
    for (std::size_t i = 0; i < n; ++i) out += "---|";
    return out + "\n";
}

std::size_t max_rows(const TableReport& t) {
    std::size_t n = 0;
    for (const auto& p : t.panels) n = std::max(n, p.report.steps.size());
    return n;
}

std::string step_cell(const TablePanel& p, std::size_t row) {
    return row < p.report.steps.size() ? format_number(p.report.steps[row] * p.label_scale) : "";
}

std::string md_panels(const TableReport& t) {
    std::vector<std::string> head;
    for (const auto& p : t.panels) {
        head.push_back("h");
        head.push_back("Error (" + p.title() + ")");
        head.push_back("Order");
    }
    std::string out = md_row(head) + md_rule(head.size());
    for (std::size_t i = 0; i < max_rows(t); ++i) {
        std::vector<std::string> row;
        for (const auto& p : t.panels) {
            row.push_back(step_cell(p, i));
            row.push_back(cell(p.report, i, false));
            row.push_back(cell(p.report, i, true));
        }
        out += md_row(row);
    }
    return out;
}

std::string md_scheme_error_order(const TableReport& t) {
    std::vector<std::string> head{"h"};
    for (const auto& p : t.panels) {
        head.push_back(p.group + " Error");
        head.push_back(p.group + " Order");
    }
    std::string out = md_row(head) + md_rule(head.size());
    for (std::size_t i = 0; i < max_rows(t); ++i) {
        std::vector<std::string> row{step_cell(t.panels.front(), i)};
        for (const auto& p : t.panels) {
            row.push_back(cell(p.report, i, false));
            row.push_back(cell(p.report, i, true));
        }
        out += md_row(row);
    }
    return out;
}

// Orders only; the first row of each study has none and is left out.
std::string md_scheme_space_time(const TableReport& t) {
    std::vector<std::string> head{"h, tau"};
    for (const auto& p : t.panels) head.push_back(p.title());
    std::string out = md_row(head) + md_rule(head.size());
    for (std::size_t i = 1; i < max_rows(t); ++i) {
        std::vector<std::string> row{step_cell(t.panels.front(), i)};
        for (const auto& p : t.panels) row.push_back(cell(p.report, i, true));
        out += md_row(row);
    }
    return out;
}

}  // namespace

std::string emit(const ConvergenceReport& r, Format f, double label_scale) {
    if (f == Format::Csv) return csv(r, label_scale);
    std::string out = md_row({"h", "Error", "Order"}) + md_rule(3);
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        out += md_row({format_number(r.steps[i] * label_scale), cell(r, i, false), cell(r, i, true)});
    }
    return out;
}

std::string emit(const TableReport& t, Format f) {
    std::string out;
    if (f == Format::Csv) {
        for (std::size_t i = 0; i < t.panels.size(); ++i) {
            if (i) out += "\n";
            out += "# panel: " + t.panels[i].title() + "\n";
            out += csv(t.panels[i].report, t.panels[i].label_scale);
        }
        return out;
    }
    out = "**Table " + std::to_string(t.id) + ".** " + t.caption + "\n\n";
    switch (t.layout) {
        case TableLayout::Panels: return out + md_panels(t);
        case TableLayout::SchemeErrorOrder: return out + md_scheme_error_order(t);
        case TableLayout::SchemeSpaceTime: return out + md_scheme_space_time(t);
    }
    return out;
}

}  // namespace fracl1::harness
