#include "gfv/irreversibility.hpp"

#include "gfv/random_measures.hpp"

#include <cmath>

namespace gfv {

namespace {

struct RatioSet {
    std::vector<RatioAccumulator> acc;
    void merge(const RatioSet& o)
    {
        if (acc.empty()) acc.resize(o.acc.size());
        for (std::size_t j = 0; j < o.acc.size(); ++j) acc[j].merge(o.acc[j]);
    }
};

}  // namespace

CenteredFunction centered_indicator(const ProbabilityVector& nu, const std::vector<int>& E0)
{
    Vector g = Vector::Zero(nu.size());
    for (int r : E0) {
        require(r >= 0 && r < nu.size(), "type index out of range");
        g[r] = 1.0;
    }
    const double p = nu.pair(g);
    require(p > 0.0 && p < 0.5, "nu(E0) must lie in (0, 1/2)");
    return {(g.array() - p).matrix(), p * (1.0 - p) * (1.0 - 2.0 * p)};
}

double delta_closed_form(double alpha, double theta, double cube_moment)
{
    require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0,1]");
    require(theta > 0.0, "theta must be positive");
    return alpha * (1.0 - alpha) * theta * theta * ((alpha + 4.0) + (2.0 - alpha) * theta) * cube_moment /
           ((alpha + 1.0) * (alpha + 1.0) * (alpha + 2.0) * (theta + 1.0) * (theta + 2.0));
}

double delta_polynomial_U(double alpha, double theta)
{
    return -(alpha + 1.0) * (2.0 * theta + 1.0) * ((alpha + 1.0) + (1.0 - alpha) * theta) +
           ((alpha + 1.0) + alpha * theta) * (theta + 1.0) * ((alpha + 1.0) + (2.0 - alpha) * theta);
}

double delta_polynomial_V(double alpha, double theta)
{
    return alpha * theta * theta * ((alpha + 4.0) + (2.0 - alpha) * theta);
}

EstimateWithError delta_monte_carlo(double alpha, double theta, const ProbabilityVector& nu, const Vector& f,
                                    std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(theta > 0.0, "theta must be positive");
    require(f.size() == nu.size(), "f and nu must have the same number of types");
    const MomentExpansion a1 = generator_moment_action(MomentFunction::power(f, 1), theta, nu, alpha);
    const MomentExpansion a2 = generator_moment_action(MomentFunction::power(f, 2), theta, nu, alpha);
    const FiniteMeasure m = theta * nu;
    const RatioAccumulator acc = parallel_chunks<RatioAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, RatioAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i) {
            const WeightedMeasure w = draw_P_alpha_m(alpha, m, s);
            const double x = w.value.dot(f);
            out.add(x * x * evaluate(a1, w.value) - x * evaluate(a2, w.value), w.weight);
        }
    });
    return acc.result();
}

AsymmetryVerdict classify_asymmetry(const EstimateWithError& delta, double k)
{
    return delta.mean > k * delta.std_error ? AsymmetryVerdict::irreversible : AsymmetryVerdict::inconclusive;
}

const char* to_string(AsymmetryVerdict v)
{
    return v == AsymmetryVerdict::irreversible ? "irreversible" : "inconclusive";
}

std::vector<IdentityRow> moment_identity_checks(double alpha, double theta, const ProbabilityVector& nu,
                                                const Vector& f, const Vector& g, std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(theta > 0.0, "theta must be positive");
    const double nf = nu.pair(f);
    const double ng = nu.pair(g);
    const Vector fg = f.cwiseProduct(g);
    const Vector f2 = f.cwiseProduct(f);
    const double nf3 = nu.pair(f2.cwiseProduct(f));

    const std::vector<MomentFunction> phi{MomentFunction({f, g}), MomentFunction({f, f2}), MomentFunction::power(f, 3)};
    const std::vector<EstimateWithError> est = P_alpha_m_expectations(alpha, theta * nu, phi, n, rng);

    const double bilinear =
        (2.0 * alpha * theta / (alpha + 1.0) * nf * ng + (1.0 + (1.0 - alpha) * theta / (alpha + 1.0)) * nu.pair(fg)) /
        (theta + 1.0);
    const bool centered = std::abs(nf) < 1e-14;
    const double m12 = ((alpha + 1.0) + (1.0 - alpha) * theta) / ((alpha + 1.0) * (theta + 1.0)) * nf3;
    const double cube =
        (3.0 * (alpha + 1.0) * m12 + (1.0 - alpha) * (1.0 + (2.0 - alpha) / (alpha + 1.0) * theta) * nf3) /
        ((alpha + 2.0) * (theta + 2.0));

    std::vector<IdentityRow> rows{{"bilinear second moment", est[0], bilinear}};
    if (centered) {
        rows.push_back({"mixed moment M12", est[1], m12});
        rows.push_back({"third moment", est[2], cube});
    }
    return rows;
}

}  // namespace gfv
