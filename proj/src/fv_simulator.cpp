#include "gfv/fv_simulator.hpp"

#include "gfv/analytic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include <cmath>

namespace gfv {

namespace {

double beta_moment(double a, double b, double p, double q)
{
    return std::exp(log_beta(a + p, b + q) - log_beta(a, b));
}

// ∫_0^1 h(τ) dτ for the smooth remainder integrands; adaptive because G'
// and G'' vary by orders of magnitude across [0,1] when t is large
template <class F>
double unit_gauss(F h)
{
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(h, 0.0, 1.0, 15, 1e-13);
}

}  // namespace

void SimConfig::validate() const
{
    require(epsilon > 0.0 && epsilon < 0.5, "epsilon must lie in (0, 0.5)");
    require(t_end > 0.0, "t_end must be positive");
    require(record_dt > 0.0, "record_dt must be positive");
    require(rate_budget > 0.0, "rate budget must be positive");
}

TestFunction1D power_function(int n)
{
    require(n >= 0, "power must be nonnegative");
    return {[n](double x) { return std::pow(x, n); },
            [n](double x) { return n >= 1 ? n * std::pow(x, n - 1) : 0.0; },
            [n](double x) { return n >= 2 ? n * (n - 1.0) * std::pow(x, n - 2) : 0.0; }};
}

TestFunction1D stieltjes_function(double t)
{
    return {[t](double x) { return 1.0 / (1.0 + t * x); }, [t](double x) { return -t / std::pow(1.0 + t * x, 2); },
            [t](double x) { return 2.0 * t * t / std::pow(1.0 + t * x, 3); }};
}

double generator_apply_poly(int n, double x, const ModelParams1D& p)
{
    p.validate();
    require(n >= 1, "n must be positive");
    require(x >= 0.0 && x <= 1.0, "x must lie in [0,1]");
    const double a = p.alpha;
    const double xn = std::pow(x, n);
    double rep = 0.0;
    double mut = 0.0;
    double binom = n;
    for (int k = 1; k <= n; ++k) {
        if (k >= 2) rep += binom * (std::pow(x, n - k + 1) - xn) * beta_moment(1.0 - a, 1.0 + a, k - 2, n - k);
        mut += binom * (p.c1 * std::pow(x, n - k) - p.theta() * xn) * beta_moment(1.0 - a, a, k - 1, n - k);
        binom = binom * (n - k) / (k + 1);
    }
    return rep + mut / (a + 1.0);
}

double generator_apply_Gt(double t, double x, const ModelParams1D& p)
{
    p.validate();
    require(t > 0.0, "t must be positive");
    const double a = p.alpha;
    const double s = 1.0 + t * x;
    return t * std::expm1(a * std::log1p(t)) / a * x * (1.0 - x) / std::pow(s, 2.0 + a) -
           t / (a + 1.0) * (p.c1 * (1.0 - x) * std::pow(1.0 + t, a - 1.0) - p.c2 * x) / std::pow(s, 1.0 + a);
}

double generator_apply_direct(const TestFunction1D& G, double x, const ModelParams1D& p, const QuadratureSpec& q)
{
    p.validate();
    require(x >= 0.0 && x <= 1.0, "x must lie in [0,1]");
    const double a = p.alpha;
    const double y = 1.0 - x;
    // [xG(x+uy) + yG(x-ux) - G(x)]/u² = ∫_0^1 (1-τ) g''(τu) dτ
    auto rep = [&](double u, double) {
        return unit_gauss([&](double tau) {
            const double v = tau * u;
            return (1.0 - tau) * (x * y * y * G.d2g(x + v * y) + y * x * x * G.d2g(x - v * x));
        });
    };
    // [c1 G(x+uy) + c2 G(x-ux) - θG(x)]/u = ∫_0^1 h'(τu) dτ
    auto mut = [&](double u, double) {
        return unit_gauss([&](double tau) {
            const double v = tau * u;
            return p.c1 * y * G.dg(x + v * y) - p.c2 * x * G.dg(x - v * x);
        });
    };
    return integrate_beta(rep, 1.0 - a, 1.0 + a, q) + integrate_beta(mut, 1.0 - a, a, q) / (a + 1.0);
}

JumpRates jump_rates(double alpha, double theta, double epsilon, const QuadratureSpec& q)
{
    require_alpha(alpha);
    require(theta >= 0.0, "theta must be nonnegative");
    require(epsilon > 0.0 && epsilon < 0.5, "epsilon must lie in (0, 0.5)");
    // u = e^w with w = log(ε)·v, v ∈ (0,1); 1-u = -expm1(w)
    const double le = std::log(epsilon);
    const double rep = -le * integrate_unit(
                                 [&](double, double v) {
                                     const double w = le * v;
                                     return std::exp(-(1.0 + alpha) * w) * std::pow(-std::expm1(w), alpha);
                                 },
                                 q);
    const double mut = -le * integrate_unit(
                                 [&](double, double v) {
                                     const double w = le * v;
                                     return std::exp(-alpha * w) * std::pow(-std::expm1(w), alpha - 1.0);
                                 },
                                 q);
    JumpRates r{};
    r.reproduction = rep * std::exp(-log_beta(1.0 - alpha, 1.0 + alpha));
    r.mutation = theta * mut * std::exp(-log_beta(1.0 - alpha, alpha)) / (alpha + 1.0);
    r.kappa = boost::math::ibeta(1.0 - alpha, alpha, epsilon);
    r.drift = r.kappa * theta / (alpha + 1.0);
    return r;
}

TruncatedJumps::TruncatedJumps(double alpha, double epsilon) : alpha_(alpha), epsilon_(epsilon)
{
    require_alpha(alpha);
    require(epsilon > 0.0 && epsilon < 0.5, "epsilon must lie in (0, 0.5)");
    rep_top_ = std::pow(epsilon, -1.0 - alpha);
    mut_top_ = std::pow(epsilon, -alpha);
    // envelope masses: 2^{1-α}(ε^{-α} - 2^α)/α on [ε,1/2] and 2/α on [1/2,1]
    const double lower = std::pow(2.0, 1.0 - alpha) * (mut_top_ - std::pow(2.0, alpha)) / alpha;
    mut_split_ = lower / (lower + 2.0 / alpha);
}

double TruncatedJumps::reproduction(RngStream& rng) const
{
    for (;;) {
        const double u = std::pow(rep_top_ - rng.uniform() * (rep_top_ - 1.0), -1.0 / (1.0 + alpha_));
        const double v = rng.uniform();
        // (1-u)^α >= 1-u squeezes almost every draw
        if (v <= 1.0 - u || v <= std::pow(1.0 - u, alpha_)) return u;
    }
}

double TruncatedJumps::mutation(RngStream& rng) const
{
    for (;;) {
        if (rng.uniform() < mut_split_) {
            const double u =
                std::pow(mut_top_ - rng.uniform() * (mut_top_ - std::pow(2.0, alpha_)), -1.0 / alpha_);
            if (rng.uniform() <= std::pow(2.0 * (1.0 - u), alpha_ - 1.0)) return u;
        } else {
            const double w = 0.5 * std::pow(rng.uniform_open(), 1.0 / alpha_);
            const double u = 1.0 - w;
            if (rng.uniform() <= std::pow(2.0 * u, -1.0 - alpha_)) return u;
        }
    }
}

namespace {

// e^{-x} for the tiny per-event relaxation exponents
inline double decay(double x) { return x < 1e-4 ? 1.0 - x * (1.0 - 0.5 * x) : std::exp(-x); }

}  // namespace

PathRecord simulate_path(const ProbabilityVector& mu0, double theta, const ProbabilityVector& nu, double alpha,
                         const SimConfig& cfg, RngStream& rng)
{
    cfg.validate();
    require_alpha(alpha);
    require(theta >= 0.0, "theta must be nonnegative");
    require(mu0.size() == nu.size(), "mu0 and nu must have the same number of types");

    const JumpRates rates = jump_rates(alpha, theta, cfg.epsilon);
    const double total = rates.total();
    if (total > cfg.rate_budget) throw RateOverflow("event rate " + std::to_string(total) + " exceeds the budget");
    const double p_rep = rates.reproduction / total;
    const double drift = cfg.drift_compensation ? rates.drift : 0.0;
    const TruncatedJumps jumps(alpha, cfg.epsilon);

    const Index k = nu.size();
    const Index records = static_cast<Index>(std::floor(cfg.t_end / cfg.record_dt + 1e-9)) + 1;
    PathRecord path;
    path.times = Vector::LinSpaced(records, 0.0, cfg.record_dt * static_cast<double>(records - 1));
    path.states.resize(records, k);

    double t = 0.0;
    Index next = 0;

    if (k == 2) {
        // scalar fast path on the type-0 frequency
        double x = mu0[0];
        const double target = nu[0];
        auto relax = [&](double dt) {
            if (drift > 0.0) x = target + (x - target) * decay(drift * dt);
        };
        for (;;) {
            const double t_event = t + rng.exponential() / total;
            while (next < records && path.times[next] <= t_event) {
                relax(path.times[next] - t);
                t = path.times[next];
                path.states(next, 0) = x;
                path.states(next, 1) = 1.0 - x;
                ++next;
            }
            if (next == records) break;
            relax(t_event - t);
            t = t_event;
            if (rng.uniform() < p_rep) {
                const double u = jumps.reproduction(rng);
                const double parent = rng.uniform() < x ? 1.0 : 0.0;
                x = (1.0 - u) * x + u * parent;
            } else {
                const double u = jumps.mutation(rng);
                const double parent = rng.uniform() < target ? 1.0 : 0.0;
                x = (1.0 - u) * x + u * parent;
            }
        }
        return path;
    }

    Vector mu = mu0.weights();
    const Vector& target = nu.weights();
    auto relax = [&](double dt) {
        if (drift > 0.0) mu = target + (mu - target) * decay(drift * dt);
    };
    auto pick = [&](const Vector& w, double v) {
        Index r = 0;
        double c = w[0];
        while (v >= c && r + 1 < k) c += w[++r];
        return r;
    };
    for (;;) {
        const double t_event = t + rng.exponential() / total;
        while (next < records && path.times[next] <= t_event) {
            relax(path.times[next] - t);
            t = path.times[next];
            path.states.row(next) = mu.transpose();
            ++next;
        }
        if (next == records) break;
        relax(t_event - t);
        t = t_event;
        const bool reproduction = rng.uniform() < p_rep;
        const double u = reproduction ? jumps.reproduction(rng) : jumps.mutation(rng);
        const Index r = pick(reproduction ? mu : target, rng.uniform());
        mu *= 1.0 - u;
        mu[r] += u;
        const double s = mu.sum();
        if (std::abs(s - 1.0) > 1e-12) mu /= s;
    }
    return path;
}

EstimateWithError ergodic_moment_estimate(const PathRecord& path, const MomentFunction& phi, double burn_in)
{
    require(path.size() >= 1, "empty path");
    require(burn_in < path.times[path.size() - 1], "burn_in must precede the end of the path");
    Index first = 0;
    while (first < path.size() && path.times[first] < burn_in) ++first;
    Vector series(path.size() - first);
    for (Index i = first; i < path.size(); ++i) series[i - first] = phi(path.states.row(i).transpose().eval());
    return batch_means(series);
}

EstimateWithError ergodic_control_variate_estimate(const PathRecord& path, const MomentFunction& phi,
                                                   const MomentFunction& control, double control_mean,
                                                   double burn_in, int batches)
{
    require(path.size() >= 1, "empty path");
    require(burn_in < path.times[path.size() - 1], "burn_in must precede the end of the path");
    require(batches >= 3, "the regression needs at least three batches");
    Index first = 0;
    while (first < path.size() && path.times[first] < burn_in) ++first;
    const Index n = path.size() - first;
    if (n < batches) throw InsufficientPath("too few observations for batch means");
    const Index len = n / batches;
    const Index start = path.size() - batches * len;

    Vector a(batches), c(batches);
    for (Index j = 0; j < batches; ++j) {
        double sa = 0.0, sc = 0.0;
        for (Index i = start + j * len; i < start + (j + 1) * len; ++i) {
            const Vector mu = path.states.row(i).transpose();
            sa += phi(mu);
            sc += control(mu);
        }
        a[j] = sa / static_cast<double>(len);
        c[j] = sc / static_cast<double>(len);
    }
    const double ma = a.mean();
    const double mc = c.mean();
    const double var_c = (c.array() - mc).square().sum();
    const double b = var_c > 0.0 ? ((a.array() - ma) * (c.array() - mc)).sum() / var_c : 0.0;
    const Vector resid = a - b * c;
    const double mr = resid.mean();
    // one degree of freedom goes to the slope
    const double var = (resid.array() - mr).square().sum() / static_cast<double>(batches - 2);
    return {ma - b * (mc - control_mean), std::sqrt(var / static_cast<double>(batches)), static_cast<std::int64_t>(n)};
}

}  // namespace gfv
