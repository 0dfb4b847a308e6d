#include "fracl1/tables.hpp"

#include <cctype>
#include <cmath>
#include <future>
#include <numbers>

#include "fracl1/errors.hpp"

namespace fracl1::harness {

namespace {

std::string scheme_label(Method m) {
    std::string s(to_string(m));
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

StudyConfig point(StudyKind kind, Method m, std::string fn, double alpha, double x, double h0) {
    StudyConfig c;
    c.kind = kind;
    c.method = m;
    c.function = std::move(fn);
    c.alpha = alpha;
    c.x = x;
    c.base_step = h0;
    c.levels = 6;
    c.measure = Measure::Exact;
    return c;
}

StudyConfig relax_study(std::string problem, double alpha, Method m, bool zero_start) {
    StudyConfig c;
    c.kind = StudyKind::Relax;
    c.problem = std::move(problem);
    c.alpha = alpha;
    c.method = m;
    c.base_step = 0.1;
    c.levels = 6;
    c.measure = Measure::Exact;
    c.zero_first_step = zero_start;
    return c;
}

// Both refinement directions of one scheme. Rows are the steps L/40 .. L/1280
// with the other count fixed at 50; each row's error is the final-level gap
// to the grid with twice the step.
std::vector<TablePanel> space_time(const std::string& problem, double alpha, Method m,
                                   double length, bool zero_start) {
    std::vector<TablePanel> out;
    for (Direction d : {Direction::Space, Direction::Time}) {
        StudyConfig c;
        c.kind = StudyKind::Subdiff;
        c.problem = problem;
        c.alpha = alpha;
        c.method = m;
        c.direction = d;
        c.fixed = 50;
        c.base_step = length / 40.0;
        c.levels = 6;
        c.measure = Measure::Successive;
        c.norm = subdiff::LevelNorm::FinalLevel;
        c.zero_first_step = zero_start;
        TablePanel p;
        p.group = scheme_label(m);
        p.column = std::string(to_string(d));
        p.config = c;
        out.push_back(std::move(p));
    }
    return out;
}

TablePanel panel(std::string group, StudyConfig c, double label_scale = 1.0) {
    TablePanel p;
    p.group = std::move(group);
    p.label_scale = label_scale;
    p.config = std::move(c);
    return p;
}

}  // namespace

std::string TablePanel::title() const {
    return column.empty() ? group : group + " " + column;
}

std::vector<double> TablePanel::labels() const {
    std::vector<double> out;
    for (double h : report.steps) out.push_back(h * label_scale);
    return out;
}

std::vector<TablePanel> table_panels(int id) {
    using K = StudyKind;
    using M = Method;
    std::vector<TablePanel> t;
    switch (id) {
        case 1:
            t.push_back(panel("exp_minus_x, alpha=0.5, x=2",
                              point(K::PointApprox, M::CML1, "exp_minus_x", 0.5, 2.0, 0.1)));
            t.push_back(panel("cos, alpha=0.75, x=1",
                              point(K::PointApprox, M::CML1, "cos", 0.75, 1.0, 0.1)));
            break;
        case 2:
            t.push_back(panel("exp, alpha=0.75, x=2",
                              point(K::Integral, M::TrapezoidCorrected, "exp", 0.75, 2.0, 0.2), 0.5));
            t.push_back(panel("sin, alpha=0.25, x=1",
                              point(K::Integral, M::TrapezoidCorrected, "sin", 0.25, 1.0, 0.1)));
            break;
        case 3:
            t.push_back(panel("exp, alpha=0.4, x=2",
                              point(K::PointApprox, M::L1Corrected, "exp", 0.4, 2.0, 0.2), 0.5));
            t.push_back(panel("sin, alpha=0.6, x=1",
                              point(K::PointApprox, M::L1Corrected, "sin", 0.6, 1.0, 0.1)));
            break;
        case 4:
            t.push_back(panel("L1", relax_study("R1", 0.3, M::L1, false)));
            t.push_back(panel("ML1", relax_study("R1", 0.3, M::ML1, false)));
            t.push_back(panel("CML1", relax_study("R1", 0.3, M::CML1, true)));
            break;
        case 5:
            for (M m : {M::L1, M::ML1, M::CML1}) {
                auto c = relax_study("R3", 0.6, m, true);
                c.taylor_order = 4;
                t.push_back(panel(scheme_label(m), c));
            }
            break;
        case 6:
            for (M m : {M::L1, M::ML1, M::CML1}) {
                for (auto& p : space_time("S05", 0.4, m, 1.0, false)) t.push_back(std::move(p));
            }
            break;
        case 7:
            for (M m : {M::L1, M::ML1, M::CML1}) {
                const char* problem = m == M::CML1 ? "S16" : "S15";
                for (auto& p : space_time(problem, 0.5, m, std::numbers::pi, true)) {
                    t.push_back(std::move(p));
                }
            }
            break;
        default:
            throw ConfigError("table id must be 1..7, got " + std::to_string(id));
    }
    return t;
}

TableReport reproduce_table(int id, bool parallel) {
    static const char* const kCaptions[] = {
        "",
        "Error and order of the compact ML1 identity",
        "Error and order of the corrected trapezoidal fractional integral",
        "Error and order of the corrected L1 approximation",
        "Maximum error and order, relaxation equation R1, alpha = 0.3",
        "Maximum error and order, relaxation equation R3, alpha = 0.6, m = 4",
        "Space and time orders, subdiffusion equation S05, alpha = 0.4",
        "Space and time orders, S15 (L1, ML1) and S16 (CML1), alpha = 0.5",
    };
    TableReport r;
    r.panels = table_panels(id);
    r.id = id;
    r.caption = kCaptions[id];
    r.layout = id <= 3 ? TableLayout::Panels
               : id <= 5 ? TableLayout::SchemeErrorOrder
                         : TableLayout::SchemeSpaceTime;
    if (parallel) {
        std::vector<std::future<ConvergenceReport>> pending;
        for (auto& p : r.panels) {
            p.config.parallel = true;
            pending.push_back(std::async(std::launch::async, [&p] { return run_study(p.config); }));
        }
        for (std::size_t i = 0; i < pending.size(); ++i) r.panels[i].report = pending[i].get();
    } else {
        for (auto& p : r.panels) p.report = run_study(p.config);
    }
    return r;
}

}  // namespace fracl1::harness
