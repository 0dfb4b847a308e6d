#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "fracl1/catalog_function.hpp"
#include "fracl1/errors.hpp"
#include "fracl1/expr.hpp"
#include "fracl1/relax.hpp"
#include "fracl1/study.hpp"

namespace fracl1::harness {

namespace {

template <class E, std::size_t N>
E lookup(std::string_view s, const std::pair<std::string_view, E> (&table)[N], const char* what) {
    for (const auto& [name, value] : table) {
        if (name == s) return value;
    }
    throw ConfigError(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

template <class E, std::size_t N>
std::string_view reverse(E e, const std::pair<std::string_view, E> (&table)[N]) {
    for (const auto& [name, value] : table) {
        if (value == e) return name;
    }
    return "?";
}

constexpr std::pair<std::string_view, StudyKind> kKinds[] = {
    {"point_approx", StudyKind::PointApprox},
    {"integral", StudyKind::Integral},
    {"relax", StudyKind::Relax},
    {"subdiff", StudyKind::Subdiff},
};

constexpr std::pair<std::string_view, Method> kMethods[] = {
    {"l1", Method::L1},
    {"ml1", Method::ML1},
    {"cml1", Method::CML1},
    {"grunwald", Method::Grunwald},
    {"grunwald_compact", Method::GrunwaldCompact},
    {"l1_corrected", Method::L1Corrected},
    {"trapezoid", Method::Trapezoid},
    {"trapezoid_corrected", Method::TrapezoidCorrected},
};

constexpr std::pair<std::string_view, Measure> kMeasures[] = {
    {"auto", Measure::Auto},
    {"exact", Measure::Exact},
    {"successive", Measure::Successive},
    {"richardson", Measure::Richardson},
};

constexpr std::pair<std::string_view, Direction> kDirections[] = {
    {"space", Direction::Space},
    {"time", Direction::Time},
};

constexpr std::pair<std::string_view, subdiff::LevelNorm> kNorms[] = {
    {"all_levels", subdiff::LevelNorm::AllLevels},
    {"final_level", subdiff::LevelNorm::FinalLevel},
};

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw ConfigError("key '" + std::string(key) + "': not a number: '" + std::string(v) + "'");
    }
    return out;
}

std::size_t to_count(std::string_view key, std::string_view v) {
    std::size_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
        throw ConfigError("key '" + std::string(key) + "': not a count: '" + std::string(v) + "'");
    }
    return out;
}

bool to_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + std::string(key) + "': not a boolean: '" + std::string(v) + "'");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

bool is_catalog_function(std::string_view s) {
    try {
        operators::parse_catalog_kind(s);
        return true;
    } catch (const ConfigError&) {
        return false;
    }
}

void check_expression(std::string_view key, const std::string& text) {
    if (text.empty()) return;
    try {
        (void)expr::Expr::parse(text);
    } catch (const ParseError& e) {
        throw ConfigError("key '" + std::string(key) + "': " + e.what());
    }
}

bool method_fits(StudyKind k, Method m) {
    switch (k) {
        case StudyKind::PointApprox:
            return m == Method::L1 || m == Method::ML1 || m == Method::CML1 ||
                   m == Method::Grunwald || m == Method::GrunwaldCompact ||
                   m == Method::L1Corrected;
        case StudyKind::Integral:
            return m == Method::Trapezoid || m == Method::TrapezoidCorrected;
        case StudyKind::Relax:
        case StudyKind::Subdiff:
            return m == Method::L1 || m == Method::ML1 || m == Method::CML1;
    }
    return false;
}

}  // namespace

std::string_view to_string(StudyKind k) { return reverse(k, kKinds); }
std::string_view to_string(Method m) { return reverse(m, kMethods); }
std::string_view to_string(Measure m) { return reverse(m, kMeasures); }
std::string_view to_string(Direction d) { return reverse(d, kDirections); }
StudyKind parse_study_kind(std::string_view s) { return lookup(s, kKinds, "study kind"); }
Method parse_method(std::string_view s) { return lookup(s, kMethods, "method"); }
Measure parse_measure(std::string_view s) { return lookup(s, kMeasures, "measure"); }
Direction parse_direction(std::string_view s) { return lookup(s, kDirections, "direction"); }

std::vector<double> StudyConfig::ladder() const {
    if (!steps.empty()) return steps;
    std::vector<double> out;
    double h = base_step;
    for (std::size_t i = 0; i < levels; ++i, h *= 0.5) out.push_back(h);
    return out;
}

void StudyConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0,1)");
    if (!method_fits(kind, method)) {
        throw ConfigError("method '" + std::string(to_string(method)) +
                          "' does not apply to study kind '" + std::string(to_string(kind)) + "'");
    }
    const auto h = ladder();
    if (h.size() < 2) throw ConfigError("a study needs at least 2 refinement levels");
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!(h[i] > 0.0) || !std::isfinite(h[i])) throw ConfigError("steps must be positive");
        if (i > 0 && std::abs(h[i - 1] - 2.0 * h[i]) > 1e-9 * h[i - 1]) {
            throw ConfigError("steps must halve from one level to the next");
        }
    }
    auto catalog_or_expr = [](std::string_view key, const std::string& v) {
        if (v.empty()) throw ConfigError("key '" + std::string(key) + "' is required");
        if (!is_catalog_function(v)) check_expression(key, v);
    };
    switch (kind) {
        case StudyKind::PointApprox:
        case StudyKind::Integral:
            if (!(x > 0.0)) throw ConfigError("x must be positive");
            catalog_or_expr("function", function);
            check_expression("exact", exact);
            if (function == "power" && !(power > 0.0)) throw ConfigError("power must be positive");
            break;
        case StudyKind::Relax:
            if (problem == "custom") {
                if (forcing.empty()) throw ConfigError("custom relax problem needs 'forcing'");
                check_expression("forcing", forcing);
                check_expression("exact", exact);
                if (!(horizon > 0.0)) throw ConfigError("horizon must be positive");
            } else {
                relax::parse_catalog_id(problem);
                if (problem == "R3" && (!taylor_order || *taylor_order < 2)) {
                    throw ConfigError("R3 needs taylor_order >= 2");
                }
            }
            break;
        case StudyKind::Subdiff:
            if (fixed < 3) throw ConfigError("fixed count must be at least 3");
            if (problem == "custom") {
                for (auto [key, val] : {std::pair<std::string_view, const std::string*>{"forcing", &forcing},
                                        {"u0", &u0},
                                        {"u_left", &u_left},
                                        {"u_right", &u_right}}) {
                    if (val->empty()) {
                        throw ConfigError("custom subdiff problem needs '" + std::string(key) + "'");
                    }
                    check_expression(key, *val);
                }
                check_expression("exact", exact);
                if (!(x_max > 0.0) || !(t_max > 0.0)) throw ConfigError("x_max and t_max must be positive");
            } else {
                subdiff::parse_catalog_id(problem);
            }
            break;
    }
}

StudyConfig parse_config(std::string_view text) {
    StudyConfig c;
    bool problem_set = false;
    std::map<std::string, std::function<void(std::string_view, std::string_view)>> setters;
    auto text_key = [&](std::string* field) {
        return [field](std::string_view, std::string_view v) { *field = std::string(v); };
    };
    auto real_key = [&](double* field) {
        return [field](std::string_view k, std::string_view v) { *field = to_double(k, v); };
    };
    setters["kind"] = [&](std::string_view, std::string_view v) { c.kind = parse_study_kind(v); };
    setters["method"] = [&](std::string_view, std::string_view v) { c.method = parse_method(v); };
    setters["measure"] = [&](std::string_view, std::string_view v) { c.measure = parse_measure(v); };
    setters["direction"] = [&](std::string_view, std::string_view v) {
        c.direction = parse_direction(v);
    };
    setters["norm"] = [&](std::string_view, std::string_view v) { c.norm = lookup(v, kNorms, "norm"); };
    setters["alpha"] = real_key(&c.alpha);
    setters["base_step"] = real_key(&c.base_step);
    setters["rate"] = real_key(&c.rate);
    setters["power"] = real_key(&c.power);
    setters["x"] = real_key(&c.x);
    setters["lambda"] = real_key(&c.lambda);
    setters["y0"] = real_key(&c.y0);
    setters["horizon"] = real_key(&c.horizon);
    setters["x_max"] = real_key(&c.x_max);
    setters["t_max"] = real_key(&c.t_max);
    setters["levels"] = [&](std::string_view k, std::string_view v) { c.levels = to_count(k, v); };
    setters["fixed"] = [&](std::string_view k, std::string_view v) { c.fixed = to_count(k, v); };
    setters["taylor_order"] = [&](std::string_view k, std::string_view v) {
        c.taylor_order = static_cast<int>(to_count(k, v));
    };
    setters["parallel"] = [&](std::string_view k, std::string_view v) { c.parallel = to_bool(k, v); };
    setters["zero_first_step"] = [&](std::string_view k, std::string_view v) {
        c.zero_first_step = to_bool(k, v);
    };
    setters["steps"] = [&](std::string_view k, std::string_view v) {
        c.steps.clear();
        while (!v.empty()) {
            const auto comma = v.find(',');
            c.steps.push_back(to_double(k, trim(v.substr(0, comma))));
            if (comma == std::string_view::npos) break;
            v.remove_prefix(comma + 1);
        }
    };
    setters["function"] = text_key(&c.function);
    setters["problem"] = [&](std::string_view, std::string_view v) {
        c.problem = std::string(v);
        problem_set = true;
    };
    setters["forcing"] = text_key(&c.forcing);
    setters["exact"] = text_key(&c.exact);
    setters["u0"] = text_key(&c.u0);
    setters["u_left"] = text_key(&c.u_left);
    setters["u_right"] = text_key(&c.u_right);

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        // A '#' inside a quoted value is part of the value.
        bool in_quotes = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_quotes = !in_quotes;
            if (line[i] == '#' && !in_quotes) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (!value.empty() && value.front() == '"') {
            if (value.size() < 2 || value.back() != '"') {
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated quote");
            }
            value = value.substr(1, value.size() - 2);
        }
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        it->second(key, value);
    }
    if (!problem_set && c.kind == StudyKind::Subdiff) c.problem = "S05";
    c.validate();
    return c;
}

std::string serialize_config(const StudyConfig& c) {
    std::string out;
    auto put = [&](std::string_view key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    auto put_expr = [&](std::string_view key, const std::string& value) {
        if (!value.empty()) put(key, quoted(value));
    };
    put("kind", std::string(to_string(c.kind)));
    put("alpha", fmt(c.alpha));
    put("method", std::string(to_string(c.method)));
    if (!c.steps.empty()) {
        std::string list;
        for (std::size_t i = 0; i < c.steps.size(); ++i) {
            if (i) list += ", ";
            list += fmt(c.steps[i]);
        }
        put("steps", list);
    } else {
        put("base_step", fmt(c.base_step));
        put("levels", std::to_string(c.levels));
    }
    put("measure", std::string(to_string(c.measure)));
    put("parallel", c.parallel ? "true" : "false");
    switch (c.kind) {
        case StudyKind::PointApprox:
        case StudyKind::Integral:
            put("function", is_catalog_function(c.function) ? c.function : quoted(c.function));
            put("rate", fmt(c.rate));
            put("power", fmt(c.power));
            put("x", fmt(c.x));
            put_expr("exact", c.exact);
            break;
        case StudyKind::Relax:
            put("problem", c.problem);
            if (c.taylor_order) put("taylor_order", std::to_string(*c.taylor_order));
            put_expr("forcing", c.forcing);
            put_expr("exact", c.exact);
            put("lambda", fmt(c.lambda));
            put("y0", fmt(c.y0));
            put("horizon", fmt(c.horizon));
            put("zero_first_step", c.zero_first_step ? "true" : "false");
            break;
        case StudyKind::Subdiff:
            put("problem", c.problem);
            put_expr("forcing", c.forcing);
            put_expr("u0", c.u0);
            put_expr("u_left", c.u_left);
            put_expr("u_right", c.u_right);
            put_expr("exact", c.exact);
            put("x_max", fmt(c.x_max));
            put("t_max", fmt(c.t_max));
            put("direction", std::string(to_string(c.direction)));
            put("fixed", std::to_string(c.fixed));
            put("norm", std::string(reverse(c.norm, kNorms)));
            put("zero_first_step", c.zero_first_step ? "true" : "false");
            break;
    }
    return out;
}

}  // namespace fracl1::harness
