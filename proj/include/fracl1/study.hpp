#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracl1/convergence.hpp"
#include "fracl1/subdiff.hpp"

namespace fracl1::harness {

enum class StudyKind { PointApprox, Integral, Relax, Subdiff };

/// POINT_APPROX:
///   l1, ml1, grunwald      error of the rule against the exact Caputo value
///   cml1                   ML1 sum against the compact combination
///                          (13/12, -1/6, 1/12) of exact Caputo values
///   grunwald_compact       Grunwald sum against its three-point compact
///                          combination of exact Caputo values
///   l1_corrected           L1 with the expansion terms through h^(4-alpha)
///                          removed, against the exact Caputo value
/// INTEGRAL: trapezoid, trapezoid_corrected
/// RELAX and SUBDIFF: l1, ml1, cml1
enum class Method {
    L1,
    ML1,
    CML1,
    Grunwald,
    GrunwaldCompact,
    L1Corrected,
    Trapezoid,
    TrapezoidCorrected
};

/// How each row's error is measured.
///   exact       against the exact solution
///   successive  against the next coarser level (one extra coarse solve)
///   richardson  against one extra finer level (used when no exact solution)
///   auto        exact if available, richardson otherwise
enum class Measure { Auto, Exact, Successive, Richardson };

enum class Direction { Space, Time };

std::string_view to_string(StudyKind k);
std::string_view to_string(Method m);
std::string_view to_string(Measure m);
std::string_view to_string(Direction d);
StudyKind parse_study_kind(std::string_view s);
Method parse_method(std::string_view s);
Measure parse_measure(std::string_view s);
Direction parse_direction(std::string_view s);

/// One refinement study. Text-valued problem fields hold either a catalog
/// name or an expression (variables x, t, alpha).
struct StudyConfig {
    StudyKind kind = StudyKind::PointApprox;
    double alpha = 0.5;
    Method method = Method::L1;

    /// Step ladder: explicit `steps`, or `base_step` halved `levels - 1` times.
    std::vector<double> steps;
    double base_step = 0.05;
    std::size_t levels = 5;

    Measure measure = Measure::Auto;
    bool parallel = false;

    // POINT_APPROX / INTEGRAL: `function` is a catalog name (exp, sin, cos,
    // exp_minus_x, power) or an expression in t; `exact` is an optional
    // expression in x for the exact Caputo derivative / integral.
    std::string function = "exp";
    double rate = 1.0;   // lambda of the catalog function
    double power = 2.0;  // exponent for the power catalog function
    double x = 1.0;

    // RELAX: `problem` is R1, R2, R3 or custom. Custom problems read forcing
    // (in x), exact (in x), lambda, y0 and horizon.
    // SUBDIFF: `problem` is S05, S06, S15, S16 or custom. Custom problems read
    // forcing (in x, t), u0 (in x), u_left / u_right (in t), exact (in x, t),
    // x_max and t_max.
    std::string problem = "R1";
    std::optional<int> taylor_order;  // m of R3
    std::string forcing;
    std::string exact;
    double lambda = 1.0;
    double y0 = 0.0;
    double horizon = 1.0;
    bool zero_first_step = false;

    std::string u0, u_left, u_right;
    double x_max = 1.0;
    double t_max = 1.0;
    Direction direction = Direction::Time;
    std::size_t fixed = 50;  // the count held fixed (M for space studies, N for time)
    subdiff::LevelNorm norm = subdiff::LevelNorm::AllLevels;

    /// The effective ladder (explicit steps or base_step / levels).
    std::vector<double> ladder() const;
    /// Throws ConfigError on inconsistent settings.
    void validate() const;
};

/// Flat `key = value` text, one entry per line, `#` starts a comment;
/// expression values are double-quoted. Unknown keys are errors.
StudyConfig parse_config(std::string_view text);
std::string serialize_config(const StudyConfig& c);

/// Runs the study. Errors from solvers and expressions propagate.
ConvergenceReport run_study(const StudyConfig& c);

}  // namespace fracl1::harness
