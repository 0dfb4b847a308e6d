#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "fracl1/emit.hpp"
#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"
#include "fracl1/study.hpp"
#include "fracl1/tables.hpp"

namespace {

using namespace fracl1;
using namespace fracl1::harness;

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Flags {
    double alpha = 0.5;
    double x = 1.0;
    double h = 0.05;
    std::size_t n = 50;
    std::size_t m = 50;
    std::size_t levels = 5;
    int taylor_order = 4;
    int table_id = 1;
    std::string method;
    std::string problem;
    std::string exact;
    std::string measure = "auto";
    std::string direction = "time";
    std::string norm = "all_levels";
    std::string config;
    std::string format = "csv";
    std::string out;
    bool parallel = false;
    bool zero_start = false;
};

struct Options {
    CLI::Option* alpha = nullptr;
    CLI::Option* x = nullptr;
    CLI::Option* h = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* m = nullptr;
    CLI::Option* levels = nullptr;
    CLI::Option* method = nullptr;
    CLI::Option* problem = nullptr;
    CLI::Option* exact = nullptr;
    CLI::Option* measure = nullptr;
    CLI::Option* direction = nullptr;
    CLI::Option* norm = nullptr;
    CLI::Option* taylor = nullptr;
    CLI::Option* zero = nullptr;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

void add_output_flags(CLI::App* app, Flags& f) {
    app->add_option("--format", f.format, "Output format: csv or md")->capture_default_str();
    app->add_option("--out", f.out, "Write the output to this file instead of stdout");
    app->add_flag("--parallel", f.parallel, "Solve refinement levels concurrently");
}

Options add_study_flags(CLI::App* app, Flags& f, StudyKind kind) {
    Options o;
    o.alpha = app->add_option("--alpha", f.alpha, "Fractional order in (0,1)");
    o.h = app->add_option("--h", f.h, "Coarsest step of the ladder");
    o.levels = app->add_option("--levels", f.levels, "Number of refinement levels");
    o.method = app->add_option("--method", f.method, "Approximation or scheme");
    o.measure = app->add_option("--measure", f.measure, "auto, exact, successive or richardson");
    app->add_option("--config", f.config, "Load the study from a key = value file");
    switch (kind) {
        case StudyKind::PointApprox:
        case StudyKind::Integral:
            o.x = app->add_option("--x", f.x, "Evaluation point");
            o.problem = app->add_option("--problem", f.problem,
                                        "Catalog function (exp, sin, cos, exp_minus_x, power) "
                                        "or an expression in t");
            o.exact = app->add_option("--exact", f.exact, "Exact value as an expression in x");
            break;
        case StudyKind::Relax:
            o.problem = app->add_option("--problem", f.problem, "R1, R2 or R3");
            o.taylor = app->add_option("--taylor-order", f.taylor_order, "m of R3");
            o.zero = app->add_flag("--zero-start", f.zero_start, "Set the first step to zero");
            break;
        case StudyKind::Subdiff:
            o.problem = app->add_option("--problem", f.problem, "S05, S06, S15 or S16");
            o.n = app->add_option("--n", f.n, "Space intervals, fixed in time studies");
            o.m = app->add_option("--m", f.m, "Time levels, fixed in space studies");
            o.direction = app->add_option("--direction", f.direction, "space or time");
            o.norm = app->add_option("--norm", f.norm, "all_levels or final_level");
            o.zero = app->add_flag("--zero-start", f.zero_start, "Set time level 1 to zero");
            break;
    }
    add_output_flags(app, f);
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StudyConfig build_config(StudyKind kind, const Flags& f, const Options& o) {
    StudyConfig c;
    if (!f.config.empty()) {
        c = parse_config(read_file(f.config));
        if (c.kind != kind) {
            throw ConfigError("config file describes a '" + std::string(to_string(c.kind)) +
                              "' study");
        }
    } else {
        c.kind = kind;
        switch (kind) {
            case StudyKind::PointApprox: c.method = Method::L1; break;
            case StudyKind::Integral: c.method = Method::Trapezoid; break;
            case StudyKind::Relax: c.method = Method::CML1; break;
            case StudyKind::Subdiff:
                c.method = Method::CML1;
                c.problem = "S05";
                break;
        }
    }
    if (given(o.alpha)) c.alpha = f.alpha;
    if (given(o.h)) {
        c.steps.clear();
        c.base_step = f.h;
    }
    if (given(o.levels)) {
        c.steps.clear();
        c.levels = f.levels;
    }
    if (given(o.method)) c.method = parse_method(f.method);
    if (given(o.measure)) c.measure = parse_measure(f.measure);
    if (given(o.x)) c.x = f.x;
    if (given(o.exact)) c.exact = f.exact;
    if (given(o.problem)) {
        if (kind == StudyKind::PointApprox || kind == StudyKind::Integral) {
            c.function = f.problem;
        } else {
            c.problem = f.problem;
        }
    }
    if (given(o.taylor)) c.taylor_order = f.taylor_order;
    if (kind == StudyKind::Relax && c.problem == "R3" && !c.taylor_order) c.taylor_order = 4;
    if (given(o.zero)) c.zero_first_step = f.zero_start;
    if (given(o.direction)) c.direction = parse_direction(f.direction);
    if (kind == StudyKind::Subdiff) {
        // The catalog domains are [0,1]^2 (S05) and [0,pi]^2; default to 40 intervals.
        if (f.config.empty() && !given(o.h)) {
            c.base_step = (c.problem == "S05" ? 1.0 : std::numbers::pi) / 40.0;
        }
        const bool space = c.direction == Direction::Space;
        if (space && given(o.m)) c.fixed = f.m;
        if (!space && given(o.n)) c.fixed = f.n;
        if (given(o.norm)) {
            if (f.norm == "all_levels") c.norm = subdiff::LevelNorm::AllLevels;
            else if (f.norm == "final_level") c.norm = subdiff::LevelNorm::FinalLevel;
            else throw ConfigError("unknown norm '" + f.norm + "'");
        }
    }
    if (f.parallel) c.parallel = true;
    c.validate();
    return c;
}

void write_output(const Flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.out);
    if (!out) throw ConfigError("cannot write '" + f.out + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Fractional L1-type approximations: convergence studies and table reproduction"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Flags f;

    struct StudyCommand {
        CLI::App* app;
        StudyKind kind;
        Options opts;
    };
    std::vector<StudyCommand> studies;
    auto add_study = [&](const char* name, const char* help, StudyKind kind) {
        CLI::App* sub = app.add_subcommand(name, help);
        studies.push_back({sub, kind, add_study_flags(sub, f, kind)});
    };
    add_study("approx", "Caputo derivative approximation at a point", StudyKind::PointApprox);
    add_study("integral", "Fractional integral approximation at a point", StudyKind::Integral);
    add_study("relax", "Fractional relaxation equation", StudyKind::Relax);
    add_study("subdiff", "Time-fractional subdiffusion equation", StudyKind::Subdiff);

    CLI::App* table = app.add_subcommand("table", "Reproduce one of the reference tables 1..7");
    table->add_option("--id", f.table_id, "Table id")->required()->check(CLI::Range(1, 7));
    add_output_flags(table, f);

    CLI::App* sf = app.add_subcommand("specfun", "Evaluate a special function");
    std::string fn;
    std::vector<double> args;
    sf->add_option("function", fn, "gamma, zeta, eta or ml")->required();
    sf->add_option("args", args, "gamma/zeta/eta: s; ml: alpha beta z")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (table->parsed()) {
            const auto report = reproduce_table(f.table_id, f.parallel);
            write_output(f, emit(report, parse_format(f.format)));
            return 0;
        }
        if (sf->parsed()) {
            auto need = [&](std::size_t k) {
                if (args.size() != k) {
                    throw ConfigError(fn + " takes " + std::to_string(k) + " argument(s)");
                }
            };
            double v = 0.0;
            if (fn == "ml") {
                need(3);
                v = specfun::mittag_leffler({args[0], args[1]}, args[2]);
            } else {
                need(1);
                if (fn == "gamma") v = specfun::gamma(args[0]);
                else if (fn == "zeta") v = specfun::zeta(args[0]);
                else if (fn == "eta") v = specfun::eta(args[0]);
                else throw ConfigError("unknown function '" + fn + "'");
            }
            std::printf("%.15g\n", v);
            return 0;
        }
        for (const auto& s : studies) {
            if (!s.app->parsed()) continue;
            const Format fmt = parse_format(f.format);
            const auto config = build_config(s.kind, f, s.opts);
            const auto report = run_study(config);
            if (report.meta.find("richardson") != std::string::npos) {
                std::cerr << "note: no exact solution; errors are measured against a finer solve\n";
            }
            write_output(f, emit(report, fmt));
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
