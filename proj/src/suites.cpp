#include "gfv/suites.hpp"

#include "gfv/analytic.hpp"
#include "gfv/fv_simulator.hpp"
#include "gfv/irreversibility.hpp"
#include "gfv/mbi.hpp"
#include "gfv/random_measures.hpp"
#include "gfv/stationary1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace gfv {

CheckRow make_row(std::string name, double value, double target, double tolerance, double std_error)
{
    return {std::move(name), value, std_error, target, tolerance, std::abs(value - target) <= tolerance};
}

namespace {

std::string fmt(const char* pattern, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

std::string vec_str(const Vector& v)
{
    std::string s = "(";
    for (Index i = 0; i < v.size(); ++i) s += fmt(i ? ",%g" : "%g", v[i]);
    return s + ")";
}

Vector vec(std::initializer_list<double> xs)
{
    Vector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

/// Row comparing a Monte Carlo estimate with an exact target at 4 SE.
CheckRow mc_row(std::string name, const EstimateWithError& e, double target)
{
    return make_row(std::move(name), e.mean, target, 4.0 * e.std_error, e.std_error);
}

/// Row comparing two independent estimates at 4 combined SE.
CheckRow mc_mc_row(std::string name, const EstimateWithError& a, const EstimateWithError& b)
{
    const double se = combined_se(a, b);
    return make_row(std::move(name), a.mean, b.mean, 4.0 * se, se);
}

/// Deterministic stream per (criterion, case).
RngStream stream(const SuiteOptions& opt, int criterion, int item)
{
    return RngStream(opt.seed, static_cast<std::uint64_t>(criterion) * 1000 + static_cast<std::uint64_t>(item));
}

std::vector<CheckRow> markov_krein_rows()
{
    std::vector<CheckRow> rows;
    for (double a : {-0.5, 1.0, 3.0})
        for (auto [t1, t2] : {std::pair{0.3, 0.7}, std::pair{1.0, 1.0}, std::pair{2.5, 0.5}}) {
            const IdentityCheck c = markov_krein_1d(a, 1.0, t1, t2);
            rows.push_back(make_row(fmt("markov-krein a=%g b=1 theta=(%g,%g) rel gap", a, t1, t2),
                                    c.gap() / std::abs(c.rhs), 0.0, 1e-8));
        }
    for (double alpha : {0.3, 0.5, 0.8})
        for (auto [a, ap] : {std::pair{2.0, 1.0}, std::pair{0.5, 4.0}, std::pair{-0.4, 1.5}}) {
            const IdentityCheck c = lemma21_ii(a, ap, 1.0, alpha);
            rows.push_back(make_row(fmt("beta-kernel lemma alpha=%g a=%g a'=%g b=1 rel gap", alpha, a, ap),
                                    c.gap() / std::abs(c.rhs), 0.0, 1e-8));
        }
    return rows;
}

std::vector<CheckRow> generator_rows(const SuiteOptions& opt)
{
    RngStream rng = stream(opt, 2, 0);
    std::vector<CheckRow> rows;
    for (int i = 0; i < 27; ++i) {
        const double alpha = 0.1 + 0.8 * rng.uniform();
        const double t = 0.1 + 9.9 * rng.uniform();
        const double x = 0.02 + 0.96 * rng.uniform();
        const ModelParams1D p{alpha, 0.2 + 2.8 * rng.uniform(), 0.2 + 2.8 * rng.uniform()};
        const double closed = generator_apply_Gt(t, x, p);
        const double direct = generator_apply_direct(stieltjes_function(t), x, p);
        rows.push_back(make_row(
            fmt("A G_t closed vs quadrature alpha=%.3f t=%.3f x=%.3f c=(%.3f,%.3f)", alpha, t, x, p.c1, p.c2), closed,
            direct, 1e-7));
    }
    return rows;
}

std::vector<CheckRow> ode_rows()
{
    std::vector<CheckRow> rows;
    for (double alpha : {0.3, 0.5, 0.8})
        for (auto [c1, c2] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{2.0, 0.5}}) {
            const StieltjesTransform S = stationary_transform(alpha, c1, c2);
            double worst_t = 0.0, worst_u = 0.0;
            for (int i = 0; i < 20; ++i) {
                const double t = 0.1 * std::pow(100.0, i / 19.0);
                worst_t = std::max(worst_t, std::abs(ode_residual_2_8(S, t, alpha, c1, c2)));
                const double u = std::pow(1.0 + t, alpha) - 1.0;
                worst_u = std::max(worst_u, std::abs(ode_residual_2_11(S, u, alpha, c1, c2)));
            }
            rows.push_back(make_row(fmt("transform ODE in t alpha=%g c=(%g,%g) max residual", alpha, c1, c2),
                                    worst_t, 0.0, 1e-6));
            rows.push_back(make_row(fmt("transform ODE in u alpha=%g c=(%g,%g) max residual", alpha, c1, c2),
                                    worst_u, 0.0, 1e-6));
        }
    return rows;
}

std::vector<CheckRow> representation_rows(const SuiteOptions& opt)
{
    std::vector<CheckRow> rows;
    // c1 + c2 > 2 keeps the Linnik weights square integrable
    const ModelParams1D cases[] = {{0.5, 1.5, 1.0}, {0.3, 1.0, 2.0}, {0.8, 2.0, 2.0}};
    int item = 0;
    for (const ModelParams1D& p : cases) {
        RngStream r1 = stream(opt, 4, item++);
        RngStream r2 = stream(opt, 4, item++);
        const auto tilted = stationary_moments(p, Representation::tilted, 3, opt.samples, r1);
        const auto linnik = stationary_moments(p, Representation::linnik, 3, opt.samples, r2);
        for (int k = 0; k < 3; ++k)
            rows.push_back(mc_mc_row(fmt("tilted vs linnik m%d alpha=%g c=(%g,%g)", k + 1, p.alpha, p.c1, p.c2),
                                     tilted[k], linnik[k]));
    }
    return rows;
}

std::vector<CheckRow> beta_case_rows(const SuiteOptions& opt)
{
    std::vector<CheckRow> rows;
    const ModelParams1D cases[] = {{0.5, 0.5, 0.5}, {0.3, 0.2, 0.8}, {0.8, 0.7, 0.3}};
    int item = 0;
    for (const ModelParams1D& p : cases) {
        RngStream rng = stream(opt, 5, item++);
        const auto est = stationary_moments(p, Representation::tilted, 4, opt.samples, rng);
        const double a = p.alpha * p.c1;
        const double b = p.alpha * p.c2;
        double exact = 1.0;
        for (int k = 0; k < 4; ++k) {
            exact *= (a + k) / (a + b + k);
            rows.push_back(mc_row(fmt("m%d vs Beta(%g,%g) alpha=%g", k + 1, a, b, p.alpha), est[k], exact));
        }
    }
    return rows;
}

std::vector<CheckRow> recursion_rows(const SuiteOptions& opt)
{
    const ModelParams1D p{0.5, 1.0, 1.0};
    RngStream rng = stream(opt, 6, 0);
    const Vector m = moment_recursion(p, 2);
    const auto est = stationary_moments(p, Representation::tilted, 2, opt.samples, rng);
    return {make_row("moment recursion m2 alpha=0.5 c=(1,1)", m[1], 7.0 / 18.0, 1e-12),
            mc_row("sampler m2 alpha=0.5 c=(1,1)", est[1], 7.0 / 18.0)};
}

std::vector<CheckRow> factorization_rows(const SuiteOptions& opt)
{
    std::vector<CheckRow> rows;
    int item = 0;
    for (double alpha : {0.3, 0.5, 0.8})
        for (int n : {1, 2, 3})
            for (int k : {2, 3}) {
                RngStream rng = stream(opt, 7, item++);
                double worst = 0.0;
                for (int rep = 0; rep < 5; ++rep) {
                    Vector eta(k), m(k);
                    for (int i = 0; i < k; ++i) {
                        eta[i] = 0.2 + 2.8 * rng.uniform();
                        m[i] = 0.2 + 1.8 * rng.uniform();
                    }
                    std::vector<Vector> f;
                    for (int j = 0; j < n; ++j) {
                        Vector fj(k);
                        for (int i = 0; i < k; ++i) fj[i] = 2.0 * rng.uniform() - 1.0;
                        f.push_back(fj);
                    }
                    const IdentityCheck c =
                        check_factorization_3_2(MomentFunction(f), FiniteMeasure(eta), FiniteMeasure(m), alpha);
                    worst = std::max(worst, c.gap() / (1.0 + std::abs(c.rhs)));
                }
                rows.push_back(
                    make_row(fmt("branching factorization alpha=%g n=%d k=%d max rel gap", alpha, n, k), worst, 0.0, 1e-6));
            }
    return rows;
}

std::vector<CheckRow> negative_moment_rows(const SuiteOptions& opt)
{
    std::vector<CheckRow> rows;
    int item = 0;
    for (double alpha : {0.3, 0.5, 0.8})
        for (const FiniteMeasure& m : {FiniteMeasure{1.0, 1.0}, FiniteMeasure{1.0, 2.0}}) {
            RngStream rng = stream(opt, 8, item++);
            const NegativeMomentCheck c = neg_alpha_moment_prop34(alpha, m, opt.samples, rng);
            rows.push_back(mc_row(fmt("E eta(E)^-alpha alpha=%g m(E)=%g%s", alpha, m.total(),
                                      c.heavy_tailed ? " (infinite variance)" : ""),
                                  c.estimate, c.closed_form));
        }
    return rows;
}

std::vector<CheckRow> ergodic_rows()
{
    struct Case {
        double alpha;
        FiniteMeasure eta0;
        FiniteMeasure m;
        Vector f;
    };
    const Case cases[] = {
        {0.5, {1.0}, {1.0}, vec({1.0})},
        {0.3, {2.0}, {0.5}, vec({2.0})},
        {0.8, {1.0, 0.5}, {0.5, 1.0}, vec({0.5, 2.0})},
        {0.5, {3.0, 1.0}, {1.0, 1.0}, vec({1.0, 0.0})},
        {0.3, {1.0, 1.0, 1.0}, {0.2, 0.3, 0.5}, vec({2.0, 1.0, 0.5})},
        {0.8, {0.5, 2.0, 1.0}, {1.0, 2.0, 0.5}, vec({0.1, 0.2, 1.5})},
    };
    std::vector<CheckRow> rows;
    for (const Case& c : cases) {
        const double t40 = transition_laplace_3_10(c.eta0, c.f, 40.0, c.m, c.alpha);
        rows.push_back(make_row(fmt("laplace at t=40 vs stationary alpha=%g f=%s", c.alpha, vec_str(c.f).c_str()), t40,
                                stationary_laplace_3_8(c.m, c.f, c.alpha), 1e-6));
    }
    return rows;
}

std::vector<CheckRow> identity_suite_rows(const SuiteOptions& opt)
{
    struct Case {
        double alpha;
        FiniteMeasure m;
        Vector f;
    };
    const Case cases[] = {
        {0.5, {1.0, 1.0}, vec({1.0, 0.0})},
        {0.3, {0.5, 1.5}, vec({0.5, 2.0})},
        {0.8, {2.0, 1.0}, vec({3.0, 0.2})},
        {0.5, {0.3, 0.3, 0.4}, vec({1.0, 0.0, 2.0})},
        {0.3, {1.0, 2.0, 0.5}, vec({0.1, 1.0, 0.5})},
        {0.8, {0.5, 1.0, 1.5}, vec({2.0, 0.5, 0.0})},
    };
    std::vector<CheckRow> rows;
    int item = 0;
    for (const Case& c : cases) {
        const std::string tag = fmt("alpha=%g m=%s f=%s", c.alpha, vec_str(c.m.weights()).c_str(), vec_str(c.f).c_str());
        RngStream r1 = stream(opt, 10, item++);
        const McVsClosedForm a = check_3_5(c.m, c.f, opt.samples, r1);
        rows.push_back(mc_row("dirichlet markov-krein " + tag, a.estimate, a.closed_form));
        RngStream r2 = stream(opt, 10, item++);
        const McVsClosedForm b = check_3_19(c.alpha, c.m, c.f, opt.samples, r2);
        rows.push_back(mc_row("stable measure negative moment " + tag, b.estimate, b.closed_form));
        RngStream r3 = stream(opt, 10, item++);
        const McVsMc d = check_3_20(c.alpha, c.m, c.f, opt.samples, r3);
        rows.push_back(mc_mc_row("tilted vs dirichlet transform " + tag, d.lhs, d.rhs));
    }
    return rows;
}

/// Nondecreasing index tuples of length n over k types, one per multiset.
std::vector<std::vector<int>> sorted_indices(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> idx(n, 0);
    while (true) {
        out.push_back(idx);
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == k - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < n; ++j) idx[j] = idx[pos];
    }
    return out;
}

std::vector<CheckRow> three_route_rows(const SuiteOptions& opt)
{
    const double alpha = 0.5;
    const double theta = 1.5;
    const ProbabilityVector nu{0.2, 0.3, 0.5};
    const int k = 3;
    const int n_max = 6;
    const std::vector<MomentTensor> tensors = stationary_moment_tensors(theta, nu, alpha, n_max);

    std::vector<CheckRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        double worst = 0.0;
        for (const std::vector<int>& idx : sorted_indices(n, k)) {
            std::vector<Vector> f;
            for (int i : idx) f.push_back(Vector::Unit(k, i));
            const double part = partition_coefficient_3_27(theta, nu, alpha, f) / pochhammer(alpha, n);
            worst = std::max(worst, std::abs(tensors[n - 1](idx) - part));
        }
        rows.push_back(make_row(fmt("tensor vs partition sum n=%d max gap", n), worst, 0.0, 1e-10));
    }

    RngStream frng = stream(opt, 11, 0);
    std::vector<MomentFunction> phi;
    std::vector<std::vector<Vector>> factors;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Vector> f;
        for (int j = 0; j < n; ++j) {
            Vector fj(k);
            for (int i = 0; i < k; ++i) fj[i] = frng.uniform();
            f.push_back(fj);
        }
        factors.push_back(f);
        phi.emplace_back(f);
    }
    RngStream rng = stream(opt, 11, 1);
    const auto est = P_alpha_m_expectations(alpha, theta * nu, phi, opt.samples, rng);
    for (int n = 1; n <= n_max; ++n) {
        const double tensor = tensors[n - 1].pair(factors[n - 1]);
        const double part = partition_coefficient_3_27(theta, nu, alpha, factors[n - 1]) / pochhammer(alpha, n);
        rows.push_back(mc_row(fmt("tilted sampler vs tensor n=%d", n), est[n - 1], tensor));
        rows.push_back(mc_row(fmt("tilted sampler vs partition sum n=%d", n), est[n - 1], part));
    }
    return rows;
}

std::vector<CheckRow> simulator_rows(const SuiteOptions& opt)
{
    const double alpha = 0.5;
    const ProbabilityVector nu{0.5, 0.5};
    const double theta = 2.0;
    const double m1 = 0.5;
    const double m2 = 7.0 / 18.0;
    const double burn_in = 50.0;
    const Vector f = Vector::Unit(2, 0);
    const MomentFunction x = MomentFunction::power(f, 1);
    const MomentFunction x2 = MomentFunction::power(f, 2);

    auto run = [&](double eps, int item) {
        SimConfig cfg;
        cfg.epsilon = eps;
        cfg.t_end = 2000.0;
        cfg.record_dt = 0.1;
        RngStream rng = stream(opt, 12, item);
        const PathRecord path = simulate_path(nu, theta, nu, alpha, cfg, rng);
        return std::pair{ergodic_moment_estimate(path, x, burn_in),
                         ergodic_control_variate_estimate(path, x2, x, m1, burn_in)};
    };
    const auto [a1, a2] = run(1e-4, 0);
    const auto [b1, b2] = run(5e-5, 1);
    const double gap_a = std::abs(a2.mean - m2);
    const double gap_b = std::abs(b2.mean - m2);
    const double se = combined_se(a2, b2);

    CheckRow halved{"m2 gap at eps=5e-5 vs gap at eps=1e-4", gap_b, se, gap_a, 4.0 * se, gap_b <= gap_a + 4.0 * se};
    return {mc_row("time average of x at eps=1e-4", a1, m1),
            make_row("time average of x^2 at eps=1e-4", a2.mean, m2, 2e-2, a2.std_error),
            mc_row("time average of x at eps=5e-5", b1, m1),
            make_row("time average of x^2 at eps=5e-5", b2.mean, m2, 2e-2, b2.std_error),
            halved};
}

std::vector<CheckRow> irreversibility_rows(const SuiteOptions& opt)
{
    struct Case {
        double alpha;
        double theta;
        ProbabilityVector nu;
        std::vector<int> E0;
    };
    std::vector<Case> cases;
    if (opt.alpha || opt.theta) {
        cases.push_back({opt.alpha.value_or(0.5), opt.theta.value_or(2.0), {0.2, 0.3, 0.5}, {0}});
    } else {
        cases = {{0.5, 2.0, {0.2, 0.3, 0.5}, {0}}, {0.8, 0.5, {0.3, 0.7}, {0}},   {0.3, 1.0, {0.4, 0.6}, {0}},
                 {0.5, 4.0, {0.1, 0.9}, {0}},      {0.7, 3.0, {0.25, 0.25, 0.5}, {0}}, {0.2, 1.5, {0.3, 0.3, 0.4}, {1}}};
    }
    std::vector<CheckRow> rows;
    int item = 0;
    for (const Case& c : cases) {
        const CenteredFunction f = centered_indicator(c.nu, c.E0);
        RngStream rng = stream(opt, 13, item++);
        const EstimateWithError d = delta_monte_carlo(c.alpha, c.theta, c.nu, f.f, opt.samples, rng);
        const double closed = delta_closed_form(c.alpha, c.theta, f.cube_moment);
        const std::string tag =
            fmt("alpha=%g theta=%g nu=%s cube=%g", c.alpha, c.theta, vec_str(c.nu.weights()).c_str(), f.cube_moment);
        rows.push_back(mc_row("delta MC vs closed form " + tag, d, closed));
        rows.push_back({"delta positive beyond 4 SE " + tag, d.mean, d.std_error, 0.0, 4.0 * d.std_error,
                        classify_asymmetry(d) == AsymmetryVerdict::irreversible});
    }

    // two equal types: the centered indicator has zero third moment
    {
        const double alpha = opt.alpha.value_or(0.5);
        const double theta = opt.theta.value_or(2.0);
        const ProbabilityVector nu{0.5, 0.5};
        RngStream rng = stream(opt, 13, 100);
        const EstimateWithError d = delta_monte_carlo(alpha, theta, nu, vec({0.5, -0.5}), opt.samples, rng);
        const AsymmetryVerdict v = classify_asymmetry(d);
        rows.push_back({fmt("symmetric case alpha=%g theta=%g verdict %s", alpha, theta, to_string(v)), d.mean,
                        d.std_error, 0.0, 4.0 * d.std_error, v == AsymmetryVerdict::inconclusive});
    }

    const Case& c0 = cases.front();
    const CenteredFunction f0 = centered_indicator(c0.nu, c0.E0);
    RngStream gr = stream(opt, 13, 200);
    Vector g(c0.nu.size());
    for (Index i = 0; i < g.size(); ++i) g[i] = gr.uniform();
    RngStream rng = stream(opt, 13, 201);
    for (const IdentityRow& r : moment_identity_checks(c0.alpha, c0.theta, c0.nu, f0.f, g, opt.samples, rng))
        rows.push_back(mc_row(fmt("%s alpha=%g theta=%g", r.name, c0.alpha, c0.theta), r.estimate, r.closed_form));
    return rows;
}

std::vector<CheckRow> gwi_rows(const SuiteOptions& opt)
{
    const double alpha = 0.5;
    const Vector lambdas = vec({0.5, 1.0, 2.0});
    // equal length in units of the limiting time scale for every N
    const double horizon = 10000.0;
    std::vector<CheckRow> rows;
    std::vector<EstimateWithError> errors;
    int item = 0;
    for (double N : {1e2, 1e3, 1e4}) {
        GWIConfig cfg;
        cfg.N = N;
        const double unit = cfg.time_unit(alpha);
        cfg.steps = static_cast<std::int64_t>(horizon * unit);
        cfg.thin = std::max<std::int64_t>(1, static_cast<std::int64_t>(unit / 10.0));
        RngStream rng = stream(opt, 14, item++);
        const EmpiricalLaplace laplace = gwi_chain(cfg, alpha, rng);
        const EstimateWithError r = fit_residual(laplace, alpha, lambdas);
        errors.push_back({std::abs(r.mean), r.std_error, r.n});
        if (N == 1e4) {
            const LinnikFit fit = fit_linnik(laplace, alpha, lambdas);
            for (Index i = 0; i < 3; ++i)
                rows.push_back(make_row(fmt("N=1e4 fitted vs empirical laplace at lambda=%g (kappa=%.4f gamma=%.4f)",
                                            lambdas[i], fit.kappa, fit.gamma),
                                        fit.fitted[i], fit.empirical[i], 5e-3));
        }
    }
    const char* names[] = {"1e2", "1e3", "1e4"};
    for (int i = 0; i + 1 < 3; ++i) {
        const double se = combined_se(errors[i], errors[i + 1]);
        rows.push_back({fmt("fit error N=%s vs N=%s", names[i + 1], names[i]), errors[i + 1].mean, se, errors[i].mean,
                        4.0 * se, errors[i + 1].mean <= errors[i].mean + 4.0 * se});
    }
    return rows;
}

}  // namespace

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list{
        {1, "one-dimensional Markov-Krein and beta-kernel identities", 1.0},
        {2, "generator on G_t: closed form vs quadrature", 10.0},
        {3, "stationarity ODE residuals", 10.0},
        {4, "tilted and Linnik representations agree", 60.0},
        {5, "c1+c2=1 stationary law is Beta", 60.0},
        {6, "moment recursion vs sampler", 60.0},
        {7, "branching generator factorization", 120.0},
        {8, "negative alpha-moment of the Linnik measure", 60.0},
        {9, "ergodicity of the branching semigroup", 10.0},
        {10, "random-measure identity suite", 180.0},
        {11, "three-route moment equality", 120.0},
        {12, "truncated jump simulator", 300.0},
        {13, "irreversibility functional", 120.0},
        {14, "Galton-Watson scaling to a Linnik law", 300.0},
    };
    return list;
}

std::vector<CheckRow> criterion_rows(int id, const SuiteOptions& opt)
{
    switch (id) {
    case 1: return markov_krein_rows();
    case 2: return generator_rows(opt);
    case 3: return ode_rows();
    case 4: return representation_rows(opt);
    case 5: return beta_case_rows(opt);
    case 6: return recursion_rows(opt);
    case 7: return factorization_rows(opt);
    case 8: return negative_moment_rows(opt);
    case 9: return ergodic_rows();
    case 10: return identity_suite_rows(opt);
    case 11: return three_route_rows(opt);
    case 12: return simulator_rows(opt);
    case 13: return irreversibility_rows(opt);
    case 14: return gwi_rows(opt);
    default: throw InvalidParameter("criterion id must lie in 1..14");
    }
}

namespace {

const std::map<std::string, std::vector<int>>& suite_members()
{
    static const std::map<std::string, std::vector<int>> m{
        {"identities", {1, 10}}, {"factorization", {7}}, {"ode", {2, 3}},
        {"moments", {4, 5, 6, 11}}, {"mbi", {8, 9}},     {"irreversibility", {13}},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"identities", "factorization", "ode", "moments", "mbi", "irreversibility"};
    return names;
}

std::vector<CheckRow> run_suite(const std::string& name, const SuiteOptions& opt)
{
    std::vector<CheckRow> rows;
    if (name == "all") {
        for (const std::string& s : suite_names()) {
            auto part = run_suite(s, opt);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        return rows;
    }
    const auto it = suite_members().find(name);
    if (it == suite_members().end()) throw InvalidParameter("unknown suite: " + name);
    for (int id : it->second) {
        auto part = criterion_rows(id, opt);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

}  // namespace gfv
