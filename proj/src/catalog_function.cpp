#include "fracl1/catalog_function.hpp"

#include <cmath>
#include <sstream>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"

namespace fracl1::operators {
namespace {

using specfun::ComplexValue;
using specfun::gamma;
using specfun::mittag_leffler;

void require_point(double alpha, double x, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError(std::string(who) + ": alpha must lie in (0,1)");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(who) + ": x must be positive");
    }
}

// D^alpha e^{mu t} = mu x^{1-alpha} E_{1,2-alpha}(mu x), mu complex.
ComplexValue caputo_exp(ComplexValue mu, double alpha, double x) {
    return mu * std::pow(x, 1.0 - alpha) * mittag_leffler({1.0, 2.0 - alpha}, mu * x);
}

// J^alpha e^{mu t} = Gamma(1+alpha) x^{1+alpha} E_{1,2+alpha}(mu x).
ComplexValue integral_exp(ComplexValue mu, double alpha, double x) {
    return gamma(1.0 + alpha) * std::pow(x, 1.0 + alpha) *
           mittag_leffler({1.0, 2.0 + alpha}, mu * x);
}

}  // namespace

CatalogFunction CatalogFunction::power(double p) {
    if (!(p > 0.0)) throw DomainError("CatalogFunction::power: exponent must be positive");
    return {Kind::Power, 1.0, p, 1.0};
}

std::string_view to_string(CatalogFunction::Kind k) {
    switch (k) {
        case CatalogFunction::Kind::Exp: return "exp";
        case CatalogFunction::Kind::Sin: return "sin";
        case CatalogFunction::Kind::Cos: return "cos";
        case CatalogFunction::Kind::Power: return "power";
        case CatalogFunction::Kind::ExpMinusX: return "exp_minus_x";
    }
    return "?";
}

CatalogFunction::Kind parse_catalog_kind(std::string_view name) {
    using K = CatalogFunction::Kind;
    if (name == "exp") return K::Exp;
    if (name == "sin") return K::Sin;
    if (name == "cos") return K::Cos;
    if (name == "power") return K::Power;
    if (name == "exp_minus_x") return K::ExpMinusX;
    throw ConfigError("unknown catalog function '" + std::string(name) + "'");
}

double CatalogFunction::derivative(int order, double t) const {
    if (order < 0 || order > 4) throw DomainError("CatalogFunction: derivative order 0..4");
    const double l = lambda;
    const double lk = std::pow(l, order);
    switch (kind) {
        case Kind::Exp: return coeff * lk * std::exp(l * t);
        case Kind::Sin: {
            // d^k sin(l t) = l^k sin(l t + k pi/2)
            static constexpr double s[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            const auto& r = s[order % 4];
            return coeff * lk * (r[0] * std::sin(l * t) + r[1] * std::cos(l * t));
        }
        case Kind::Cos: {
            static constexpr double c[4][2] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
            const auto& r = c[order % 4];
            return coeff * lk * (r[0] * std::cos(l * t) + r[1] * std::sin(l * t));
        }
        case Kind::Power: {
            double factor = 1.0;
            for (int j = 0; j < order; ++j) factor *= (p - j);
            if (factor == 0.0) return 0.0;
            return coeff * factor * std::pow(t, p - order);
        }
        case Kind::ExpMinusX: {
            double v = lk * std::exp(l * t);
            if (order == 0) v -= l * t;
            if (order == 1) v -= l;
            return coeff * v;
        }
    }
    return 0.0;
}

bool CatalogFunction::second_derivative_vanishes() const {
    if (coeff == 0.0) return true;
    switch (kind) {
        case Kind::Power: return p == 1.0;
        case Kind::Exp:
        case Kind::Sin:
        case Kind::Cos:
        case Kind::ExpMinusX: return lambda == 0.0;
    }
    return false;
}

CatalogFunction CatalogFunction::second_derivative() const {
    CatalogFunction d = *this;
    switch (kind) {
        case Kind::Exp: d.coeff = coeff * lambda * lambda; break;
        case Kind::Sin:
        case Kind::Cos: d.coeff = -coeff * lambda * lambda; break;
        case Kind::ExpMinusX:
            d.kind = Kind::Exp;
            d.coeff = coeff * lambda * lambda;
            break;
        case Kind::Power:
            if (p == 1.0) {
                d.coeff = 0.0;
            } else if (p == 2.0) {
                // constant 2c, represented as exp with zero rate
                d = {Kind::Exp, 0.0, 1.0, 2.0 * coeff};
            } else if (p > 2.0) {
                d.p = p - 2.0;
                d.coeff = coeff * p * (p - 1.0);
            } else {
                throw DomainError("CatalogFunction: t^p with p < 2 has a singular second derivative");
            }
            break;
    }
    return d;
}

std::string CatalogFunction::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind == Kind::Power) {
        os << "(p=" << p << ")";
    } else {
        os << "(lambda=" << lambda << ")";
    }
    if (coeff != 1.0) os << "*" << coeff;
    return os.str();
}

double caputo_exact(const CatalogFunction& f, double alpha, double x) {
    require_point(alpha, x, "caputo_exact");
    using K = CatalogFunction::Kind;
    const double l = f.lambda;
    double v = 0.0;
    switch (f.kind) {
        case K::Exp: v = caputo_exp({l, 0.0}, alpha, x).real(); break;
        // sin = Im e^{i l t}, cos = Re e^{i l t}; D^alpha commutes with Re/Im.
        case K::Sin: v = caputo_exp({0.0, l}, alpha, x).imag(); break;
        case K::Cos: v = caputo_exp({0.0, l}, alpha, x).real(); break;
        case K::Power:
            v = gamma(f.p + 1.0) / gamma(f.p + 1.0 - alpha) * std::pow(x, f.p - alpha);
            break;
        case K::ExpMinusX:
            v = caputo_exp({l, 0.0}, alpha, x).real() -
                l * std::pow(x, 1.0 - alpha) / gamma(2.0 - alpha);
            break;
    }
    return f.coeff * v;
}

double frac_integral_exact(const CatalogFunction& f, double alpha, double x) {
    require_point(alpha, x, "frac_integral_exact");
    using K = CatalogFunction::Kind;
    const double l = f.lambda;
    double v = 0.0;
    switch (f.kind) {
        case K::Exp: v = integral_exp({l, 0.0}, alpha, x).real(); break;
        case K::Sin: v = integral_exp({0.0, l}, alpha, x).imag(); break;
        case K::Cos: v = integral_exp({0.0, l}, alpha, x).real(); break;
        case K::Power:
            // int_0^x (x-t)^a t^p dt = x^{p+1+a} B(a+1, p+1)
            v = gamma(alpha + 1.0) * gamma(f.p + 1.0) / gamma(f.p + alpha + 2.0) *
                std::pow(x, f.p + 1.0 + alpha);
            break;
        case K::ExpMinusX:
            v = integral_exp({l, 0.0}, alpha, x).real() -
                l * std::pow(x, 2.0 + alpha) / ((1.0 + alpha) * (2.0 + alpha));
            break;
    }
    return f.coeff * v;
}

double caputo_second_shift_exact(const CatalogFunction& f, double alpha, double x) {
    require_point(alpha, x, "caputo_second_shift_exact");
    double v = 0.0;
    if (!f.second_derivative_vanishes()) v = caputo_exact(f.second_derivative(), alpha, x);
    v += f.derivative(1, 0.0) / (gamma(-alpha) * std::pow(x, 1.0 + alpha));
    v += f.derivative(2, 0.0) / (gamma(1.0 - alpha) * std::pow(x, alpha));
    return v;
}

DerivativeBundle make_bundle(const CatalogFunction& f, double x) {
    DerivativeBundle b;
    b.x = x;
    b.y_at_x = f.derivative(0, x);
    b.y1 = f.derivative(1, x);
    b.y2 = f.derivative(2, x);
    b.y3 = f.derivative(3, x);
    b.y4 = f.derivative(4, x);
    b.y_at_0 = f.derivative(0, 0.0);
    b.y1_at_0 = f.derivative(1, 0.0);
    b.y2_at_0 = f.derivative(2, 0.0);
    b.y3_at_0 = f.derivative(3, 0.0);
    return b;
}

}  // namespace fracl1::operators
