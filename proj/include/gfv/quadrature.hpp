#pragma once

#include "gfv/types.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>

namespace gfv {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 12;

    void validate() const
    {
        require(abs_tol > 0.0 && rel_tol > 0.0, "quadrature tolerances must be positive");
        require(max_subdivisions >= 1, "max_subdivisions must be at least 1");
    }
};

namespace detail {

inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule(int levels)
{
    thread_local std::map<int, boost::math::quadrature::tanh_sinh<double>> rules;
    auto it = rules.find(levels);
    if (it == rules.end()) it = rules.emplace(levels, boost::math::quadrature::tanh_sinh<double>(levels)).first;
    return it->second;
}

inline void check_quadrature(double value, double error, const QuadratureSpec& spec)
{
    if (!std::isfinite(value) || !(error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))))
        {
        char buf[96];
        std::snprintf(buf, sizeof buf, "quadrature did not reach tolerance: value %.6g, error %.3g", value, error);
        throw QuadratureFailure(buf);
    }
}

}  // namespace detail

/// ∫_0^1 f(u, 1-u) du, where the second argument is the complement 1-u
/// computed without cancellation near u = 1. Algebraic endpoint singularities
/// are absorbed by the double-exponential map.
template <class F>
double integrate_unit(F f, const QuadratureSpec& spec = {})
{
    spec.validate();
    auto g = [&](double x, double xc) {
        // xc is the signed distance to the nearer endpoint
        const double u = xc < 0.0 ? -xc : x;
        const double v = xc > 0.0 ? xc : 1.0 - x;
        return f(u, v);
    };
    double error = 0.0;
    double l1 = 0.0;
    // the rule's own stopping test is looser than ours, so ask for more
    const double value =
        detail::tanh_sinh_rule(spec.max_subdivisions).integrate(g, 0.0, 1.0, 1e-2 * spec.rel_tol, &error, &l1);
    detail::check_quadrature(value, error, spec);
    return value;
}

/// ∫_a^b f(x) dx on a finite interval.
template <class F>
double integrate(F f, double a, double b, const QuadratureSpec& spec = {})
{
    require(a <= b, "integration bounds must be ordered");
    if (a == b) return 0.0;
    const double w = b - a;
    return w * integrate_unit([&](double u, double) { return f(a + w * u); }, spec);
}

inline double log_beta(double p, double q) { return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q); }

/// ∫ B_{p,q}(du) h(u, 1-u) against the beta probability law.
template <class H>
double integrate_beta(H h, double p, double q, const QuadratureSpec& spec = {})
{
    require(p > 0.0 && q > 0.0, "beta parameters must be positive");
    const double norm = std::exp(-log_beta(p, q));
    auto g = [&](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        return std::exp((p - 1.0) * std::log(u) + (q - 1.0) * std::log(v)) * h(u, v);
    };
    return norm * integrate_unit(g, spec);
}

}  // namespace gfv
