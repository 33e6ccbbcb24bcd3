#include "gfv/samplers.hpp"
#include "gfv/estimate.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfv;

namespace {

template <class Draw>
EstimateWithError mc(std::int64_t n, std::uint64_t stream, Draw draw)
{
    RngStream rng(99, stream);
    MeanAccumulator acc;
    for (std::int64_t i = 0; i < n; ++i) acc.add(draw(rng));
    return acc.result();
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct")
{
    RngStream a(1, 0), b(1, 0), c(1, 1);
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x != c.uniform());
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform_open();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("stable variates have Laplace transform exp(-scale λ^α)")
{
    for (double alpha : {0.3, 0.5, 0.8})
        for (double lambda : {0.5, 2.0}) {
            const double scale = 1.7;
            const auto e = mc(200000, 1, [&](RngStream& r) { return std::exp(-lambda * sample_stable(alpha, scale, r)); });
            CHECK(e.within(std::exp(-scale * std::pow(lambda, alpha))));
        }
    RngStream rng(1, 1);
    CHECK(sample_stable(0.5, 0.0, rng) == 0.0);
    CHECK_THROWS_AS(sample_stable(1.0, 1.0, rng), InvalidParameter);
}

TEST_CASE("gamma variates: mean and variance equal the shape")
{
    for (double shape : {0.05, 0.7, 3.5}) {
        const auto m = mc(200000, 2, [&](RngStream& r) { return sample_gamma(shape, r); });
        CHECK(m.within(shape));
        const auto v = mc(200000, 3, [&](RngStream& r) {
            const double g = sample_gamma(shape, r);
            return (g - shape) * (g - shape);
        });
        CHECK(v.within(shape));
    }
    RngStream rng(1, 2);
    CHECK(sample_gamma(0.0, rng) == 0.0);
    // tiny shapes stay finite in log space
    CHECK(std::isfinite(sample_log_gamma(1e-3, rng)));
}

TEST_CASE("beta and Dirichlet means")
{
    const auto b = mc(200000, 4, [](RngStream& r) { return sample_beta(0.3, 1.2, r); });
    CHECK(b.within(0.3 / 1.5));

    const FiniteMeasure m{0.5, 0.0, 1.5};
    RngStream rng(3, 0);
    MeanAccumulator first;
    for (int i = 0; i < 100000; ++i) {
        const ProbabilityVector p = sample_dirichlet(m, rng);
        CHECK(p[1] == 0.0);
        first.add(p[0]);
    }
    CHECK(first.result().within(0.25));
}

TEST_CASE("Linnik variates have Laplace transform (1+λ^α)^{-c}")
{
    for (double alpha : {0.3, 0.7})
        for (double c : {0.4, 2.0}) {
            const double lambda = 1.3;
            const auto e = mc(200000, 5, [&](RngStream& r) { return std::exp(-lambda * sample_linnik(alpha, c, r)); });
            CHECK(e.within(std::pow(1.0 + std::pow(lambda, alpha), -c)));
        }
}

TEST_CASE("random measures have the stated Laplace functionals")
{
    const FiniteMeasure m{0.4, 1.1};
    const double f0 = 0.7, f1 = 2.0;
    const auto stable = mc(200000, 6, [&](RngStream& r) {
        const FiniteMeasure eta = sample_stable_random_measure(0.6, m, r);
        return std::exp(-(f0 * eta[0] + f1 * eta[1]));
    });
    CHECK(stable.within(std::exp(-(0.4 * std::pow(f0, 0.6) + 1.1 * std::pow(f1, 0.6)))));

    const auto gamma = mc(200000, 7, [&](RngStream& r) {
        const FiniteMeasure eta = sample_gamma_random_measure(m, r);
        return std::exp(-(f0 * eta[0] + f1 * eta[1]));
    });
    CHECK(gamma.within(std::pow(1.0 + f0, -0.4) * std::pow(1.0 + f1, -1.1)));
}
