#include "gfv/stationary1d.hpp"
#include "gfv/estimate.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfv;

namespace {

// E[X^n] for X ~ Beta(a, b)
double beta_moment(double a, double b, int n)
{
    double m = 1.0;
    for (int k = 0; k < n; ++k) m *= (a + k) / (a + b + k);
    return m;
}

}  // namespace

TEST_CASE("moment recursion")
{
    SUBCASE("symmetric example")
    {
        const Vector m = moment_recursion({0.5, 1.0, 1.0}, 2);
        CHECK(m[0] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(m[1] == doctest::Approx(7.0 / 18.0).epsilon(1e-13));
    }
    SUBCASE("first moment is c1/(c1+c2)")
    {
        for (double alpha : {0.2, 0.7}) CHECK(moment_recursion({alpha, 0.3, 2.1}, 1)[0] == doctest::Approx(0.3 / 2.4));
    }
    SUBCASE("c1+c2 = 1 reproduces the Beta(αc1, αc2) moments")
    {
        const double alpha = 0.6, c1 = 0.35, c2 = 0.65;
        const Vector m = moment_recursion({alpha, c1, c2}, 6);
        for (int n = 1; n <= 6; ++n)
            CHECK(m[n - 1] == doctest::Approx(beta_moment(alpha * c1, alpha * c2, n)).epsilon(1e-12));
    }
    SUBCASE("moments decrease and stay in (0,1)")
    {
        const Vector m = moment_recursion({0.4, 1.2, 0.9}, 8);
        for (Index i = 0; i < m.size(); ++i) {
            CHECK(m[i] > 0.0);
            CHECK(m[i] < 1.0);
            if (i > 0) CHECK(m[i] < m[i - 1]);
        }
    }
}

TEST_CASE("samplers return points of [0,1] with positive weights")
{
    RngStream rng(4, 0);
    const ModelParams1D p{0.5, 1.5, 1.0};
    for (const auto& s : sample_P_tilted(p, 2000, rng)) {
        CHECK(s.value >= 0.0);
        CHECK(s.value <= 1.0);
        CHECK(s.weight > 0.0);
    }
    for (const auto& s : sample_P_linnik(p, 2000, rng)) {
        CHECK(s.value >= 0.0);
        CHECK(s.value <= 1.0);
        CHECK(s.weight > 0.0);
    }
    CHECK_THROWS_AS(sample_P_linnik({0.5, 0.3, 0.4}, 10, rng), InvalidParameter);
    CHECK_THROWS_AS(sample_P_tilted({1.2, 1.0, 1.0}, 10, rng), InvalidParameter);
}

TEST_CASE("both representations reproduce the recursion moments")
{
    const ModelParams1D p{0.4, 2.0, 1.5};
    const Vector exact = moment_recursion(p, 3);
    RngStream r1(8, 0), r2(8, 1);
    const auto tilted = stationary_moments(p, Representation::tilted, 3, 200000, r1);
    const auto linnik = stationary_moments(p, Representation::linnik, 3, 200000, r2);
    for (int k = 0; k < 3; ++k) {
        CHECK(tilted[k].within(exact[k]));
        CHECK(linnik[k].within(exact[k]));
    }
}

TEST_CASE("general expectations use the same weighted sample")
{
    const ModelParams1D p{0.5, 1.0, 1.0};
    RngStream rng(9, 0);
    const auto e = stationary_expectations(p, Representation::tilted,
                                           {[](double x) { return 1.0 - x; }, [](double) { return 1.0; }}, 100000, rng);
    CHECK(e[0].within(0.5));
    CHECK(e[1].mean == doctest::Approx(1.0));
}

TEST_CASE("tilted ratio expectation")
{
    for (double t : {0.3, 2.0})
        for (double y : {0.25, 0.8}) {
            RngStream rng(10, 0);
            const double alpha = 0.6;
            CHECK(tilted_ratio_closed_form(t, y, alpha) ==
                  doctest::Approx(1.0 / (std::tgamma(1.0 + alpha) * (1.0 + (std::pow(t, alpha) - 1.0) * y))));
            CHECK(tilted_ratio_expectation(t, y, alpha, 200000, rng).within(tilted_ratio_closed_form(t, y, alpha)));
        }
}

TEST_CASE("ratio distribution function")
{
    const double alpha = 0.5, y = 0.3;
    // Y1 + Y2 is standard stable, so Γ(α+1)E[(Y1+Y2)^{-α}] = 1
    CHECK(ratio_cdf_y(1.0, y, alpha) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ratio_cdf_y(0.0, y, alpha) == doctest::Approx(0.0));
    double prev = 0.0;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double v = ratio_cdf_y(x, y, alpha);
        CHECK(v > prev);
        prev = v;
    }
}
