#include "gfv/irreversibility.hpp"
#include "gfv/estimate.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfv;

TEST_CASE("centered indicators")
{
    const CenteredFunction a = centered_indicator(ProbabilityVector{0.2, 0.3, 0.5}, {0});
    CHECK(a.cube_moment == doctest::Approx(0.2 * 0.8 * 0.6));
    CHECK(std::abs(ProbabilityVector{0.2, 0.3, 0.5}.pair(a.f)) < 1e-14);
    const CenteredFunction b = centered_indicator(ProbabilityVector{0.4, 0.6}, {0});
    CHECK(b.cube_moment == doctest::Approx(0.048));
    CHECK_THROWS_AS(centered_indicator(ProbabilityVector{0.5, 0.5}, {0}), InvalidParameter);
    CHECK_THROWS_AS(centered_indicator(ProbabilityVector{0.7, 0.3}, {0}), InvalidParameter);
}

TEST_CASE("closed form of the asymmetry")
{
    CHECK(delta_closed_form(0.5, 2.0, 0.096) == doctest::Approx(0.096 / 9.0).epsilon(1e-14));
    CHECK(delta_closed_form(0.5, 2.0, 0.0) == 0.0);
    CHECK(std::abs(delta_closed_form(1e-12, 2.0, 0.1)) < 1e-12);
    CHECK(std::abs(delta_closed_form(1.0 - 1e-12, 2.0, 0.1)) < 1e-12);
}

TEST_CASE("polynomial identity U = V")
{
    for (double theta : {0.5, 1.0, 3.0}) {
        CHECK(delta_polynomial_U(-1.0, theta) == doctest::Approx(-3.0 * theta * theta * (theta + 1.0)));
        CHECK(delta_polynomial_U(0.0, theta) == doctest::Approx(0.0));
        CHECK(delta_polynomial_U(1.0, theta) == doctest::Approx(theta * theta * (theta + 5.0)));
        CHECK(delta_polynomial_V(1.0, theta) == doctest::Approx(theta * theta * (theta + 5.0)));
    }
    RngStream rng(41, 0);
    for (int i = 0; i < 100; ++i) {
        const double alpha = rng.uniform(), theta = 10.0 * rng.uniform();
        const double u = delta_polynomial_U(alpha, theta), v = delta_polynomial_V(alpha, theta);
        CHECK(std::abs(u - v) <= 1e-12 * (1.0 + std::abs(v)));
    }
}

TEST_CASE("Monte Carlo asymmetry")
{
    const ProbabilityVector nu{0.3, 0.7};
    const CenteredFunction f = centered_indicator(nu, {0});
    RngStream rng(42, 0);
    const EstimateWithError d = delta_monte_carlo(0.8, 0.5, nu, f.f, 400000, rng);
    CHECK(d.within(delta_closed_form(0.8, 0.5, f.cube_moment)));

    SUBCASE("symmetric case is never declared reversible")
    {
        Vector g(2);
        g << 0.5, -0.5;
        RngStream r(43, 0);
        const EstimateWithError s = delta_monte_carlo(0.5, 2.0, ProbabilityVector{0.5, 0.5}, g, 200000, r);
        CHECK(s.within(0.0));
        CHECK(classify_asymmetry(s) == AsymmetryVerdict::inconclusive);
        CHECK(std::string(to_string(classify_asymmetry(s))) == "inconclusive");
    }
}

TEST_CASE("classification thresholds")
{
    CHECK(classify_asymmetry({1.0, 0.2, 10}) == AsymmetryVerdict::irreversible);
    CHECK(classify_asymmetry({0.7, 0.2, 10}) == AsymmetryVerdict::inconclusive);
    CHECK(classify_asymmetry({-1.0, 0.2, 10}) == AsymmetryVerdict::inconclusive);
}

TEST_CASE("moment identities")
{
    SUBCASE("bilinear identity with uncentered f = g")
    {
        Vector f(2);
        f << 1.0, 0.0;
        RngStream rng(44, 0);
        const auto rows = moment_identity_checks(0.5, 2.0, ProbabilityVector{0.5, 0.5}, f, f, 200000, rng);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].closed_form == doctest::Approx(7.0 / 18.0));
        CHECK(rows[0].estimate.within(rows[0].closed_form));
    }
    SUBCASE("centered f adds the third-moment rows")
    {
        const ProbabilityVector nu{0.2, 0.3, 0.5};
        const CenteredFunction f = centered_indicator(nu, {0});
        Vector g(3);
        g << 0.3, 1.0, -0.4;
        RngStream rng(45, 0);
        const auto rows = moment_identity_checks(0.5, 2.0, nu, f.f, g, 200000, rng);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].closed_form == doctest::Approx(2.5 / 4.5 * 0.096));
        for (const auto& r : rows) CHECK(r.estimate.within(r.closed_form));
    }
}
