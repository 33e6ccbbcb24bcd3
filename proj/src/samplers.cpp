#include "gfv/samplers.hpp"

#include <cmath>
#include <numbers>

namespace gfv {

namespace {

// Marsaglia & Tsang for shape >= 1, returning log of the variate.
double log_gamma_ge1(double shape, RngStream& rng)
{
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d * v);
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return std::log(d * v);
    }
}

}  // namespace

double sample_stable(double alpha, double scale, RngStream& rng)
{
    require_alpha(alpha);
    require(scale >= 0.0 && std::isfinite(scale), "stable scale must be finite and nonnegative");
    if (scale == 0.0) return 0.0;

    const double u = std::numbers::pi * rng.uniform_open();
    const double e = rng.exponential();
    const double one_minus = 1.0 - alpha;
    // log A(u) with A(u) = sin(αu)^{α/(1-α)} sin((1-α)u) / sin(u)^{1/(1-α)}
    const double log_a = (alpha / one_minus) * std::log(std::sin(alpha * u)) + std::log(std::sin(one_minus * u)) -
                         std::log(std::sin(u)) / one_minus;
    const double log_y = (one_minus / alpha) * (log_a - std::log(e)) + std::log(scale) / alpha;
    return std::exp(log_y);
}

double sample_log_gamma(double shape, RngStream& rng)
{
    require(shape > 0.0 && std::isfinite(shape), "gamma shape must be positive");
    if (shape >= 1.0) return log_gamma_ge1(shape, rng);
    const double boosted = log_gamma_ge1(shape + 1.0, rng);
    return boosted + std::log(rng.uniform_open()) / shape;
}

double sample_gamma(double shape, RngStream& rng)
{
    require(shape >= 0.0, "gamma shape must be nonnegative");
    if (shape == 0.0) return 0.0;
    return std::exp(sample_log_gamma(shape, rng));
}

double sample_beta(double a, double b, RngStream& rng)
{
    require(a > 0.0 && b > 0.0, "beta parameters must be positive");
    const double la = sample_log_gamma(a, rng);
    const double lb = sample_log_gamma(b, rng);
    return 1.0 / (1.0 + std::exp(lb - la));
}

ProbabilityVector sample_dirichlet(const FiniteMeasure& m, RngStream& rng)
{
    require(!m.is_null(), "Dirichlet parameter must be a nonnull measure");
    const Index k = m.size();
    Vector logs(k);
    double top = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < k; ++i) {
        logs[i] = m[i] > 0.0 ? sample_log_gamma(m[i], rng) : -std::numeric_limits<double>::infinity();
        top = std::max(top, logs[i]);
    }
    Vector w(k);
    for (Index i = 0; i < k; ++i) w[i] = m[i] > 0.0 ? std::exp(logs[i] - top) : 0.0;
    return ProbabilityVector::normalize(std::move(w));
}

double sample_linnik(double alpha, double c, RngStream& rng)
{
    require_alpha(alpha);
    require(c > 0.0, "Linnik shape must be positive");
    const double g = sample_gamma(c, rng);
    return sample_stable(alpha, g, rng);
}

FiniteMeasure sample_stable_random_measure(double alpha, const FiniteMeasure& m, RngStream& rng)
{
    require_alpha(alpha);
    Vector eta(m.size());
    for (Index i = 0; i < m.size(); ++i) eta[i] = sample_stable(alpha, m[i], rng);
    return FiniteMeasure(std::move(eta));
}

FiniteMeasure sample_gamma_random_measure(const FiniteMeasure& m, RngStream& rng)
{
    Vector eta(m.size());
    for (Index i = 0; i < m.size(); ++i) eta[i] = sample_gamma(m[i], rng);
    return FiniteMeasure(std::move(eta));
}

}  // namespace gfv
