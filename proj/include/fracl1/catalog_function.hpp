#pragma once

#include <string>
#include <string_view>

#include "fracl1/operators.hpp"

namespace fracl1::operators {

/// Closed-form test functions with exact Caputo derivatives and fractional
/// integrals:
///   EXP          c e^{lambda t}
///   SIN          c sin(lambda t)
///   COS          c cos(lambda t)
///   POWER        c t^p           (p > 0)
///   EXP_MINUS_X  c (e^{lambda t} - lambda t)   (zero slope at the origin)
struct CatalogFunction {
    enum class Kind { Exp, Sin, Cos, Power, ExpMinusX };

    Kind kind = Kind::Exp;
    double lambda = 1.0;
    double p = 1.0;
    double coeff = 1.0;

    static CatalogFunction exp(double lambda = 1.0) { return {Kind::Exp, lambda, 1.0, 1.0}; }
    static CatalogFunction sin(double lambda = 1.0) { return {Kind::Sin, lambda, 1.0, 1.0}; }
    static CatalogFunction cos(double lambda = 1.0) { return {Kind::Cos, lambda, 1.0, 1.0}; }
    static CatalogFunction power(double p);
    static CatalogFunction exp_minus_x(double lambda = 1.0) {
        return {Kind::ExpMinusX, lambda, 1.0, 1.0};
    }

    /// Value of the order-th derivative at t (order 0..4).
    double derivative(int order, double t) const;
    double operator()(double t) const { return derivative(0, t); }

    /// Second derivative as a catalog function (scaling folded into coeff).
    CatalogFunction second_derivative() const;

    /// True if the second derivative is identically zero.
    bool second_derivative_vanishes() const;

    std::string describe() const;
};

std::string_view to_string(CatalogFunction::Kind k);
CatalogFunction::Kind parse_catalog_kind(std::string_view name);

/// Exact Caputo derivative of order alpha at x > 0.
double caputo_exact(const CatalogFunction& f, double alpha, double x);

/// Exact J^alpha f(x) = int_0^x (x-t)^alpha f(t) dt at x > 0.
double frac_integral_exact(const CatalogFunction& f, double alpha, double x);

/// y^{[2+alpha]}(x), the second ordinary derivative of the Caputo derivative,
/// from the Caputo derivative of y'' plus the two singular origin terms
///   y'(0) / (Gamma(-alpha) x^(1+alpha)) + y''(0) / (Gamma(1-alpha) x^alpha).
double caputo_second_shift_exact(const CatalogFunction& f, double alpha, double x);

/// Derivative bundle of f at x.
DerivativeBundle make_bundle(const CatalogFunction& f, double x);

}  // namespace fracl1::operators
