#include "gfv/mbi.hpp"
#include "gfv/estimate.hpp"
#include "gfv/samplers.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfv;

namespace {

Vector vec(std::initializer_list<double> xs)
{
    Vector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("generator on a scale-invariant functional")
{
    const FiniteMeasure eta{1.0, 1.0}, m{1.0, 1.0};
    const RatioMomentFunctional psi = RatioMomentFunctional::power(vec({1.0, 0.0}), 2);
    const GeneratorParts parts = generator_L_apply(psi, eta, m, 0.5);
    CHECK(parts.drift == 0.0);
    // Γ(α+2)η(E)^{-α} times A x² at x = 1/2, which is 5/12
    CHECK(parts.total() == doctest::Approx(std::tgamma(2.5) * std::pow(2.0, -0.5) * 5.0 / 12.0).epsilon(1e-9));
    CHECK(parts.total() == doctest::Approx(0.391660667911).epsilon(1e-10));

    RngStream rng(31, 0);
    for (int i = 0; i < 5; ++i) {
        const FiniteMeasure e{0.1 + rng.uniform(), 0.1 + rng.uniform(), 0.1 + rng.uniform()};
        const RatioMomentFunctional p{MomentFunction({vec({rng.uniform(), -1.0, 0.5}), vec({0.2, 0.3, rng.uniform()})})};
        CHECK(generator_L_apply(p, e, FiniteMeasure{0.5, 0.5, 0.5}, 0.3).drift == 0.0);
        // ⟨η, δΨ/δη⟩ = 0
        CHECK(std::abs(e.weights().dot(p.derivative(e))) < 1e-14);
    }
}

TEST_CASE("derivative of the ratio functional")
{
    const FiniteMeasure eta{0.4, 1.1, 0.7};
    const RatioMomentFunctional psi = RatioMomentFunctional::power(vec({1.0, -0.5, 2.0}), 3);
    const Vector d = psi.derivative(eta);
    for (Index r = 0; r < 3; ++r) {
        const double h = 1e-6;
        Vector up = eta.weights(), dn = eta.weights();
        up[r] += h;
        dn[r] -= h;
        CHECK(d[r] == doctest::Approx((psi(FiniteMeasure(up)) - psi(FiniteMeasure(dn))) / (2 * h)).epsilon(1e-7));
    }
}

TEST_CASE("unnormalized moments")
{
    const FiniteMeasure eta{1.0, 2.0};
    const GeneratorParts p = generator_L_apply(PowerMomentFunctional{vec({1.0, 1.0}), 1}, eta, FiniteMeasure{0.0, 0.0}, 0.5);
    CHECK(p.drift == doctest::Approx(-3.0 / 0.5));
    CHECK(p.branching == 0.0);
    CHECK_THROWS_AS(generator_L_apply(PowerMomentFunctional{vec({1.0, 1.0}), 2}, eta, FiniteMeasure{0.0, 0.0}, 0.5),
                    DivergentIntegral);
    CHECK_THROWS_AS(generator_L_apply(PowerMomentFunctional{vec({1.0, 1.0}), 1}, eta, FiniteMeasure{1.0, 0.0}, 0.5),
                    DivergentIntegral);
}

TEST_CASE("factorization")
{
    const FiniteMeasure eta{0.7, 1.9, 0.4}, m{0.3, 1.0, 0.6};
    CHECK(check_factorization_3_2(MomentFunction(), eta, m, 0.5).lhs == doctest::Approx(0.0));
    const IdentityCheck c = check_factorization_3_2(
        MomentFunction({vec({1.0, 0.0, -1.0}), vec({0.5, 0.5, 2.0}), vec({-1.0, 1.0, 0.0})}), eta, m, 0.7);
    CHECK(c.gap() <= 1e-6 * (1.0 + std::abs(c.rhs)));
}

TEST_CASE("transition Laplace functional")
{
    const FiniteMeasure eta0{1.0, 0.5}, m{0.5, 1.5};
    const Vector f = vec({0.8, 1.7});
    CHECK(transition_laplace_3_10(eta0, f, 0.0, m, 0.5) == doctest::Approx(std::exp(-(0.8 + 0.85))));
    CHECK(transition_laplace_3_10(FiniteMeasure{1.0}, vec({1.0}), 40.0, FiniteMeasure{1.0}, 0.5) ==
          doctest::Approx(0.5).epsilon(1e-9));

    SUBCASE("Chapman-Kolmogorov at the Laplace level")
    {
        // P_{t+s}f = exp(-⟨η,V_t V_s f⟩ - ∫_0^t⟨m,(V_r V_s f)^α⟩dr - ∫_0^s⟨m,(V_r f)^α⟩dr)
        const double t = 0.8, s = 1.3, alpha = 0.6;
        const Vector vs = v_flow(s, f, alpha);
        const FiniteMeasure null_eta{0.0, 0.0};
        const double immigration_s = transition_laplace_3_10(null_eta, f, s, m, alpha);
        CHECK(transition_laplace_3_10(eta0, f, t + s, m, alpha) ==
              doctest::Approx(transition_laplace_3_10(eta0, vs, t, m, alpha) * immigration_s).epsilon(1e-10));
    }
    SUBCASE("monotone approach to the stationary value")
    {
        const double stat = stationary_laplace_3_8(m, f, 0.5);
        double prev = std::abs(transition_laplace_3_10(eta0, f, 0.5, m, 0.5) - stat);
        for (double t : {1.0, 2.0, 5.0, 10.0, 40.0}) {
            const double gap = std::abs(transition_laplace_3_10(eta0, f, t, m, 0.5) - stat);
            CHECK(gap <= prev);
            prev = gap;
        }
        CHECK(prev < 1e-6);
    }
}

TEST_CASE("stationary Laplace functional")
{
    CHECK(stationary_laplace_3_8(FiniteMeasure{1.0, 2.0}, vec({0.0, 0.0}), 0.5) == 1.0);
    CHECK(stationary_laplace_3_8(FiniteMeasure{1.0}, vec({1.0}), 0.5) == doctest::Approx(0.5));

    const FiniteMeasure m{0.6, 1.4};
    const Vector f = vec({0.5, 2.0});
    RngStream r1(32, 0), r2(32, 1);
    CHECK(linnik_laplace_estimate(0.5, m, f, 200000, r1).within(stationary_laplace_3_8(m, f, 0.5)));

    // gamma random measure subordinated by per-atom stable variates
    MeanAccumulator acc;
    for (int i = 0; i < 200000; ++i) {
        const FiniteMeasure g = sample_gamma_random_measure(m, r2);
        acc.add(std::exp(-(f[0] * sample_stable(0.5, g[0], r2) + f[1] * sample_stable(0.5, g[1], r2))));
    }
    CHECK(acc.result().within(stationary_laplace_3_8(m, f, 0.5)));
}

TEST_CASE("negative moment of the Linnik measure")
{
    RngStream rng(33, 0);
    const NegativeMomentCheck c = neg_alpha_moment_prop34(0.5, FiniteMeasure{1.0, 2.0}, 200000, rng);
    CHECK(c.closed_form == doctest::Approx(1.0 / (2.0 * std::tgamma(1.5))));
    CHECK_FALSE(c.heavy_tailed);
    CHECK(c.estimate.within(c.closed_form));
    CHECK(neg_alpha_moment_prop34(0.5, FiniteMeasure{1.0, 1.0}, 1000, rng).closed_form ==
          doctest::Approx(1.0 / std::tgamma(1.5)));
    CHECK(neg_alpha_moment_prop34(0.5, FiniteMeasure{1.0, 1.0}, 1000, rng).heavy_tailed);
    CHECK_THROWS_AS(neg_alpha_moment_prop34(0.5, FiniteMeasure{0.5, 0.5}, 1000, rng), InvalidParameter);
}

TEST_CASE("Galton-Watson laws")
{
    const double alpha = 0.5, c = 0.4, d = 0.7;
    const GWILaws laws(alpha, c, d);
    // p0 = c and p1 = 1 - c(1+α); q0 = 1 - d and q1 = dα
    CHECK(laws.offspring_survival(0) == doctest::Approx(1.0 - c).epsilon(1e-14));
    CHECK(laws.offspring_survival(1) == doctest::Approx(c * alpha).epsilon(1e-14));
    CHECK(laws.immigration_survival(0) == doctest::Approx(d).epsilon(1e-14));
    CHECK(laws.immigration_survival(1) == doctest::Approx(d * (1.0 - alpha)).epsilon(1e-14));
    double prev = 1.0;
    for (double k : {2.0, 10.0, 1e3, 1e6, 1e7}) {
        const double s = laws.offspring_survival(k);
        CHECK(s < prev);
        CHECK(s > 0.0);
        prev = s;
    }
    // critical: E ξ = Σ_k P(ξ > k) = 1; the tail beyond K is about cα K^{-α}/Γ(1-α)·(1/α)
    double mean = 0.0;
    for (int k = 0; k < 1000000; ++k) mean += laws.offspring_survival(k);
    CHECK(mean == doctest::Approx(1.0 - c / std::tgamma(1.0 - alpha) * std::pow(1e6, -alpha)).epsilon(1e-5));

    GWIConfig bad;
    bad.c = 0.9;
    CHECK_THROWS_AS(bad.validate(alpha), InvalidParameter);
}

TEST_CASE("stable sums used beyond the tables")
{
    RngStream rng(34, 0);
    for (double lambda : {0.3, 1.0}) {
        MeanAccumulator acc;
        for (int i = 0; i < 200000; ++i) acc.add(std::exp(-lambda * sample_positive_stable_sum(0.5, rng)));
        CHECK(acc.result().within(std::exp(std::pow(lambda, 1.5))));
    }
}

TEST_CASE("Galton-Watson chain")
{
    SUBCASE("no immigration: absorbed at zero")
    {
        GWIConfig cfg;
        cfg.d = 0.0;
        cfg.N = 100;
        cfg.steps = 2000;
        RngStream rng(35, 0);
        const EmpiricalLaplace l = gwi_chain(cfg, 0.5, rng);
        CHECK(l(1.0) == 1.0);
        CHECK(l.states().maxCoeff() == 0.0);
    }
    SUBCASE("the stationary law is close to the Linnik limit at moderate N")
    {
        GWIConfig cfg;
        cfg.N = 100;
        cfg.steps = static_cast<std::int64_t>(2000 * cfg.time_unit(0.5));
        cfg.thin = 4;
        RngStream rng(36, 0);
        const EmpiricalLaplace l = gwi_chain(cfg, 0.5, rng);
        // (1+λ^α)^{-d/(αc)} with d/(αc) = 2
        for (double lambda : {0.5, 2.0}) {
            const EstimateWithError e = l.estimate(lambda);
            CHECK(std::abs(e.mean - std::pow(1.0 + std::sqrt(lambda), -2.0)) < 4.0 * e.std_error + 5e-3);
        }
    }
}

TEST_CASE("two-point Linnik fit")
{
    const double alpha = 0.6, kappa = 1.3, gamma = 1.7;
    const Vector lambdas = vec({0.5, 1.0, 2.0});
    Vector values(3);
    for (Index i = 0; i < 3; ++i) values[i] = std::pow(1.0 + std::pow(kappa * lambdas[i], alpha), -gamma);
    const LinnikFit fit = fit_linnik(lambdas, values, alpha);
    CHECK(fit.converged);
    CHECK(fit.kappa == doctest::Approx(kappa).epsilon(1e-9));
    CHECK(fit.gamma == doctest::Approx(gamma).epsilon(1e-9));
    CHECK(fit.max_error < 1e-12);

    Vector flat = Vector::Constant(3, 1.0);
    CHECK_FALSE(fit_linnik(lambdas, flat, alpha).converged);
}
