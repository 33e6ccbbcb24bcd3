#include "gfv/analytic.hpp"
#include "gfv/estimate.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfv;

TEST_CASE("pochhammer agrees with the gamma ratio")
{
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
    CHECK(pochhammer(2.0, 0) == 1.0);
    for (double a : {0.3, 1.7, 4.2})
        for (double b : {0.5, 2.0, 7.3})
            CHECK(pochhammer(a, b) == doctest::Approx(std::tgamma(a + b) / std::tgamma(a)).epsilon(1e-12));
    CHECK_THROWS_AS(pochhammer(-1.0, 1.0), InvalidParameter);
}

TEST_CASE("one-dimensional Markov-Krein identity")
{
    // ∫B_{θ1,θ2}(du)(au+b)^{-θ1-θ2} = (a+b)^{-θ1} b^{-θ2}
    const IdentityCheck c = markov_krein_1d(1.0, 1.0, 0.3, 0.7);
    CHECK(c.rhs == doctest::Approx(std::pow(2.0, -0.3)).epsilon(1e-15));
    CHECK(c.lhs == doctest::Approx(0.812252396356236).epsilon(1e-13));
    for (double a : {-0.7, 0.2, 5.0}) {
        const IdentityCheck d = markov_krein_1d(a, 2.0, 1.4, 0.6);
        CHECK(d.gap() < 1e-10 * std::abs(d.rhs));
        CHECK(d.rhs == doctest::Approx(std::pow(a + 2.0, -1.4) * std::pow(2.0, -0.6)).epsilon(1e-14));
    }
}

TEST_CASE("beta-kernel lemma")
{
    for (double alpha : {0.2, 0.5, 0.9}) {
        const double a = 2.0, ap = 1.0, b = 1.0;
        const IdentityCheck c = lemma21_ii(a, ap, b, alpha);
        const double oracle =
            (std::pow(a + b, alpha) - std::pow(ap + b, alpha)) / (alpha * (a - ap) * std::pow(b, 1.0 + alpha));
        CHECK(c.rhs == doctest::Approx(oracle).epsilon(1e-14));
        CHECK(c.gap() < 1e-10 * std::abs(oracle));
    }
    CHECK_THROWS_AS(lemma21_ii(1.0, 1.0, 1.0, 0.5), InvalidParameter);
}

TEST_CASE("psi semigroup: initial value, flow property, ODE")
{
    const double alpha = 0.4;
    for (double lambda : {0.0, 0.3, 2.0, 10.0}) {
        CHECK(psi_semigroup(0.0, lambda, alpha) == doctest::Approx(lambda));
        const double t = 0.7, s = 1.9;
        CHECK(psi_semigroup(t + s, lambda, alpha) ==
              doctest::Approx(psi_semigroup(t, psi_semigroup(s, lambda, alpha), alpha)).epsilon(1e-13));
        if (lambda > 0.0) {
            const double h = 1e-5;
            const double dpsi = (psi_semigroup(t + h, lambda, alpha) - psi_semigroup(t - h, lambda, alpha)) / (2 * h);
            const double psi = psi_semigroup(t, lambda, alpha);
            CHECK(dpsi == doctest::Approx(-(std::pow(psi, 1.0 + alpha) + psi) / alpha).epsilon(1e-7));
        }
    }
}

TEST_CASE("v_flow acts componentwise and keeps the scalar type")
{
    Eigen::Vector3d f(0.5, 1.0, 0.0);
    const Eigen::Vector3d v = v_flow(1.2, f, 0.6);
    for (int i = 0; i < 3; ++i) CHECK(v[i] == doctest::Approx(psi_semigroup(1.2, f[i], 0.6)));
    Eigen::Matrix<long double, 2, 1> g(0.5L, 2.0L);
    const auto w = v_flow(0.3L, g, 0.5L);
    CHECK(static_cast<double>(w[1]) == doctest::Approx(psi_semigroup(0.3, 2.0, 0.5)).epsilon(1e-14));
}

TEST_CASE("closed-form transform")
{
    // c = (1,1): the mixing law is uniform and S = log(1+a)/a with a = (1+t)^α - 1
    CHECK(closed_form_S(3.0, 0.5, 1.0, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    for (double t : {0.1, 1.0, 7.0}) {
        const double a = std::pow(1.0 + t, 0.3) - 1.0;
        CHECK(closed_form_S(t, 0.3, 1.0, 1.0) == doctest::Approx(std::log1p(a) / a).epsilon(1e-11));
    }
    CHECK(closed_form_S(0.0, 0.5, 2.0, 3.0) == doctest::Approx(1.0));
}

TEST_CASE("stationary transform: c1+c2 = 1 gives the Beta(αc1, αc2) law")
{
    // E(1+tX)^{-(a+b)} = (1+t)^{-a} for X ~ Beta(a,b)
    const double alpha = 0.6, c1 = 0.3, c2 = 0.7;
    const StieltjesTransform S = stationary_transform(alpha, c1, c2);
    for (double t : {0.2, 1.0, 9.0}) CHECK(S(t) == doctest::Approx(std::pow(1.0 + t, -alpha * c1)).epsilon(1e-10));
}

TEST_CASE("stationarity ODE residuals")
{
    const double alpha = 0.5, c1 = 0.5, c2 = 2.0;
    const StieltjesTransform S = stationary_transform(alpha, c1, c2);
    for (double t : {0.1, 1.0, 10.0}) {
        CHECK(std::abs(ode_residual_2_8(S, t, alpha, c1, c2)) < 1e-6);
        const double u = std::pow(1.0 + t, alpha) - 1.0;
        CHECK(std::abs(ode_residual_2_11(S, u, alpha, c1, c2)) < 1e-6);
    }
    // the transform of another law does not solve the equation
    const StieltjesTransform wrong = stationary_transform(alpha, 2.0, 0.5);
    CHECK(std::abs(ode_residual_2_8(wrong, 1.0, alpha, c1, c2)) > 1e-3);
}

TEST_CASE("beta representation of the transform")
{
    for (double t : {0.5, 3.0}) CHECK(identity_2_15_gap(t, 0.4, 1.5, 0.8) < 1e-9);
    CHECK_THROWS_AS(identity_2_15_gap(1.0, 0.4, 0.5, 0.3), InvalidParameter);
}
