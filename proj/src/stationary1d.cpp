#include "gfv/stationary1d.hpp"

#include "gfv/analytic.hpp"
#include "gfv/samplers.hpp"

#include <cmath>
#include <numbers>

namespace gfv {

namespace {

constexpr double kTinyMass = 1e-300;

WeightedSample ratio_sample(double a, double b, double alpha)
{
    const double s = a + b;
    return {a / s, std::pow(s, -alpha)};
}

std::vector<WeightedSample> collect(std::int64_t n, RngStream& rng, WeightedSample (*draw)(const ModelParams1D&, RngStream&),
                                    const ModelParams1D& p)
{
    require(n >= 1, "sample count must be positive");
    std::vector<WeightedSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) out.push_back(draw(p, rng));
    return out;
}

struct RatioSet {
    std::vector<RatioAccumulator> acc;
    void merge(const RatioSet& o)
    {
        if (acc.empty()) acc.resize(o.acc.size());
        for (std::size_t j = 0; j < o.acc.size(); ++j) acc[j].merge(o.acc[j]);
    }
};

}  // namespace

WeightedSample draw_P_tilted(const ModelParams1D& p, RngStream& rng)
{
    for (;;) {
        const double y = sample_beta(p.c1, p.c2, rng);
        const double y1 = sample_stable(p.alpha, y, rng);
        const double y2 = sample_stable(p.alpha, 1.0 - y, rng);
        if (y1 + y2 >= kTinyMass) return ratio_sample(y1, y2, p.alpha);
    }
}

WeightedSample draw_P_linnik(const ModelParams1D& p, RngStream& rng)
{
    for (;;) {
        const double z1 = sample_linnik(p.alpha, p.c1, rng);
        const double z2 = sample_linnik(p.alpha, p.c2, rng);
        if (z1 + z2 >= kTinyMass) return ratio_sample(z1, z2, p.alpha);
    }
}

std::vector<WeightedSample> sample_P_tilted(const ModelParams1D& p, std::int64_t n, RngStream& rng)
{
    p.validate();
    return collect(n, rng, draw_P_tilted, p);
}

std::vector<WeightedSample> sample_P_linnik(const ModelParams1D& p, std::int64_t n, RngStream& rng)
{
    p.validate();
    require(p.c1 + p.c2 > 1.0, "the Linnik representation needs c1 + c2 > 1");
    return collect(n, rng, draw_P_linnik, p);
}

std::vector<EstimateWithError> stationary_expectations(const ModelParams1D& p, Representation rep,
                                                       const std::vector<std::function<double(double)>>& h,
                                                       std::int64_t n, RngStream& rng)
{
    p.validate();
    if (rep == Representation::linnik) require(p.c1 + p.c2 > 1.0, "the Linnik representation needs c1 + c2 > 1");
    const auto draw = rep == Representation::tilted ? draw_P_tilted : draw_P_linnik;
    const RatioSet total = parallel_chunks<RatioSet>(n, rng, [&](RngStream& s, std::int64_t count, RatioSet& out) {
        out.acc.resize(h.size());
        for (std::int64_t i = 0; i < count; ++i) {
            const WeightedSample w = draw(p, s);
            for (std::size_t j = 0; j < h.size(); ++j) out.acc[j].add(h[j](w.value), w.weight);
        }
    });
    std::vector<EstimateWithError> out;
    for (const auto& a : total.acc) out.push_back(a.result());
    return out;
}

std::vector<EstimateWithError> stationary_moments(const ModelParams1D& p, Representation rep, int orders,
                                                  std::int64_t n, RngStream& rng)
{
    std::vector<std::function<double(double)>> h;
    for (int j = 1; j <= orders; ++j) h.emplace_back([j](double x) { return std::pow(x, j); });
    return stationary_expectations(p, rep, h, n, rng);
}

Vector moment_recursion(const ModelParams1D& p, int n_max)
{
    p.validate();
    require(n_max >= 1, "n_max must be positive");
    const double a = p.alpha;
    const double theta = p.theta();
    const double pr = p.c1 / theta;
    // m[0] = 1 is the total mass
    Vector m(n_max + 1);
    m[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        const double gn = std::tgamma(static_cast<double>(n));
        double rhs = 0.0;
        double binom = n;  // C(n,1)
        for (int k = 1; k <= n; ++k) {
            if (k >= 2) rhs += binom * pochhammer(1.0 - a, k - 2) * pochhammer(a + 1.0, n - k) / gn * m[n - k + 1];
            rhs += theta * binom * pochhammer(1.0 - a, k - 1) * pochhammer(a, n - k) / ((a + 1.0) * gn) * pr * m[n - k];
            binom = binom * (n - k) / (k + 1);
        }
        const double diag = pochhammer(a + 1.0, n - 1) * (theta + n - 1.0) / ((a + 1.0) * gn);
        m[n] = rhs / diag;
    }
    return m.tail(n_max);
}

double ratio_cdf_y(double x, double y, double alpha, const QuadratureSpec& q)
{
    require_alpha(alpha);
    require(x >= 0.0 && x <= 1.0, "x must lie in [0,1]");
    require(y > 0.0 && y < 1.0, "y must lie in (0,1)");
    if (x == 0.0) return 0.0;
    const double ca = std::cos(alpha * std::numbers::pi);
    const double yc = 1.0 - y;
    // u = x v; the factor x^{2α} collects x·x^{α-1}·x^α
    const double integral = integrate_unit(
        [&](double v, double vc) {
            const double u = x * v;
            const double ua = std::pow(u, alpha);
            const double wa = std::pow(1.0 - u, alpha);
            const double den = yc * yc * ua * ua + y * y * wa * wa + 2.0 * y * yc * ua * wa * ca;
            return yc * std::pow(vc, alpha - 1.0) * std::pow(v, alpha) / den;
        },
        q);
    return std::sin(alpha * std::numbers::pi) / std::numbers::pi * std::pow(x, 2.0 * alpha) * integral;
}

EstimateWithError tilted_ratio_expectation(double t, double y, double alpha, std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(t >= 0.0, "t must be nonnegative");
    require(y >= 0.0 && y <= 1.0, "y must lie in [0,1]");
    const MeanAccumulator acc = parallel_chunks<MeanAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, MeanAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i) {
            const double v = t * sample_stable(alpha, y, s) + sample_stable(alpha, 1.0 - y, s);
            out.add(std::pow(v, -alpha));
        }
    });
    return acc.result();
}

double tilted_ratio_closed_form(double t, double y, double alpha)
{
    return 1.0 / (std::tgamma(alpha + 1.0) * (1.0 + (std::pow(t, alpha) - 1.0) * y));
}

}  // namespace gfv
