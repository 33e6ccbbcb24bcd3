#include "gfv/mbi.hpp"

#include "gfv/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gfv {

namespace {

// Coefficients q_0..q_n of u ↦ ∏_i (a_i + u b_i).
Vector product_polynomial(const Vector& a, const Vector& b)
{
    Vector q = Vector::Zero(a.size() + 1);
    q[0] = 1.0;
    for (Index i = 0; i < a.size(); ++i) {
        for (Index j = i + 1; j >= 1; --j) q[j] = q[j] * a[i] + q[j - 1] * b[i];
        q[0] *= a[i];
    }
    return q;
}

double horner(const Vector& q, Index from, double u)
{
    double s = 0.0;
    for (Index j = q.size() - 1; j >= from; --j) s = s * u + q[j];
    return s;
}

constexpr double kTableSize = 1e6;

}  // namespace

Vector RatioMomentFunctional::derivative(const FiniteMeasure& eta) const
{
    const double s = eta.total();
    const Vector mu = eta.weights() / s;
    const auto& f = phi.factors();
    Vector d = Vector::Zero(eta.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        double others = 1.0;
        for (std::size_t l = 0; l < f.size(); ++l)
            if (l != i) others *= mu.dot(f[l]);
        d += others * (f[i].array() - mu.dot(f[i])).matrix();
    }
    return d / s;
}

GeneratorParts generator_L_apply(const RatioMomentFunctional& psi, const FiniteMeasure& eta, const FiniteMeasure& m,
                                 double alpha, const QuadratureSpec& q)
{
    require_alpha(alpha);
    require(!eta.is_null(), "eta must be nonnull");
    require(eta.size() == m.size(), "eta and m must have the same number of types");
    const int n = psi.phi.order();
    GeneratorParts out;
    if (n == 0) return out;
    require(psi.phi.types() == eta.size(), "test function length must match the type count");

    const double s = eta.total();
    const Vector mu = eta.weights() / s;
    const auto& f = psi.phi.factors();
    Vector means(n);
    for (int i = 0; i < n; ++i) means[i] = mu.dot(f[static_cast<std::size_t>(i)]);

    // A_j = Σ_r η_r q_j(r), B_j = Σ_r m_r q_j(r)
    Vector A = Vector::Zero(n + 1);
    Vector B = Vector::Zero(n + 1);
    for (Index r = 0; r < eta.size(); ++r) {
        if (eta[r] == 0.0 && m[r] == 0.0) continue;
        Vector slope(n);
        for (int i = 0; i < n; ++i) slope[i] = f[static_cast<std::size_t>(i)][r] - means[i];
        const Vector qr = product_polynomial(means, slope);
        A += eta[r] * qr;
        B += m[r] * qr;
    }

    const double g1a = std::tgamma(1.0 - alpha);
    // z^{-2-α}dz [Q(u) - q_0 - q_1 z/s] = s^{-1-α} u^{-α}(1-u)^α [Σ_{j>=2} q_j u^{j-2} - q_1/(1-u)] du
    const double branch = integrate_unit(
        [&](double u, double v) {
            const double w = std::pow(u, -alpha) * std::pow(v, alpha);
            const double high = n >= 2 ? horner(A, 2, u) : 0.0;
            return w * (high - A[1] / v);
        },
        q);
    out.branching = (alpha + 1.0) / g1a * std::pow(s, -1.0 - alpha) * branch;

    // z^{-1-α}dz [Q(u) - q_0] = s^{-α} u^{-α}(1-u)^{α-1} Σ_{j>=1} q_j u^{j-1} du
    if (m.total() > 0.0) {
        const double imm = integrate_unit(
            [&](double u, double v) { return std::pow(u, -alpha) * std::pow(v, alpha - 1.0) * horner(B, 1, u); }, q);
        out.immigration = alpha / g1a * std::pow(s, -alpha) * imm;
    }

    // ⟨η,δΨ/δη⟩ = Σ_i ∏_{l≠i}⟨μ,f_l⟩ (⟨μ,f_i⟩ - ⟨μ,f_i⟩), zero by construction
    double radial = 0.0;
    for (int i = 0; i < n; ++i) {
        double others = 1.0;
        for (int l = 0; l < n; ++l)
            if (l != i) others *= means[l];
        radial += others * (mu.dot(f[static_cast<std::size_t>(i)]) - means[i]);
    }
    out.drift = -radial / alpha;
    return out;
}

GeneratorParts generator_L_apply(const PowerMomentFunctional& psi, const FiniteMeasure& eta, const FiniteMeasure& m,
                                 double alpha)
{
    require_alpha(alpha);
    require(psi.n >= 1, "n must be positive");
    require(psi.f.size() == eta.size() && eta.size() == m.size(), "type counts must agree");
    GeneratorParts out;
    if ((psi.f.array() == 0.0).all()) return out;
    const bool immigration_finite = m.weights().dot(psi.f.cwiseAbs()) == 0.0;
    if (psi.n == 1 && immigration_finite) {
        out.drift = -eta.weights().dot(psi.f) / alpha;
        return out;
    }
    throw DivergentIntegral("jump integrals of an unnormalized moment diverge at large z");
}

IdentityCheck check_factorization_3_2(const MomentFunction& phi, const FiniteMeasure& eta, const FiniteMeasure& m,
                                      double alpha, const QuadratureSpec& q)
{
    require(!m.is_null(), "m must be nonnull");
    const double lhs = generator_L_apply(RatioMomentFunctional{phi}, eta, m, alpha, q).total();
    if (phi.order() == 0) return {lhs, 0.0};
    const Vector mu = eta.weights() / eta.total();
    const MomentExpansion terms = generator_moment_action(phi, m.total(), m.normalized(), alpha);
    const double rhs = std::tgamma(alpha + 2.0) * std::pow(eta.total(), -alpha) * evaluate(terms, mu);
    return {lhs, rhs};
}

double transition_laplace_3_10(const FiniteMeasure& eta0, const Vector& f, double t, const FiniteMeasure& m,
                               double alpha, const QuadratureSpec& q)
{
    require_alpha(alpha);
    require(t >= 0.0, "t must be nonnegative");
    require((f.array() >= 0.0).all(), "f must be nonnegative");
    require(f.size() == eta0.size() && f.size() == m.size(), "type counts must agree");
    const double head = eta0.weights().dot(v_flow(t, f, alpha));
    const double tail = t == 0.0 ? 0.0
                                 : integrate(
                                       [&](double s) {
                                           return m.weights().dot(v_flow(s, f, alpha).array().pow(alpha).matrix());
                                       },
                                       0.0, t, q);
    return std::exp(-head - tail);
}

double stationary_laplace_3_8(const FiniteMeasure& m, const Vector& f, double alpha)
{
    require_alpha(alpha);
    require((f.array() >= 0.0).all(), "f must be nonnegative");
    return std::exp(-m.weights().dot(f.array().pow(alpha).log1p().matrix()));
}

FiniteMeasure sample_linnik_random_measure(double alpha, const FiniteMeasure& m, RngStream& rng)
{
    require_alpha(alpha);
    Vector eta(m.size());
    for (Index r = 0; r < m.size(); ++r) eta[r] = m[r] > 0.0 ? sample_linnik(alpha, m[r], rng) : 0.0;
    return FiniteMeasure(std::move(eta));
}

EstimateWithError linnik_laplace_estimate(double alpha, const FiniteMeasure& m, const Vector& f, std::int64_t n,
                                          RngStream& rng)
{
    const MeanAccumulator acc = parallel_chunks<MeanAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, MeanAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i)
            out.add(std::exp(-sample_linnik_random_measure(alpha, m, s).weights().dot(f)));
    });
    return acc.result();
}

NegativeMomentCheck neg_alpha_moment_prop34(double alpha, const FiniteMeasure& m, std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(m.total() > 1.0, "the negative moment is finite only for m(E) > 1");
    const MeanAccumulator acc = parallel_chunks<MeanAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, MeanAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i)
            out.add(std::pow(sample_linnik_random_measure(alpha, m, s).total(), -alpha));
    });
    return {acc.result(), 1.0 / (std::tgamma(alpha + 1.0) * (m.total() - 1.0)), m.total() <= 2.0};
}

void GWIConfig::validate(double alpha) const
{
    require_alpha(alpha);
    require(c > 0.0 && c <= 1.0 / (1.0 + alpha), "c must lie in (0, 1/(1+alpha)] for nonnegative offspring weights");
    require(d >= 0.0 && d <= 1.0, "d must lie in [0,1] for nonnegative immigration weights");
    require(N >= 1.0, "population scale must be at least 1");
    require(c * std::pow(N, -alpha) < 1.0, "survival probability must be positive");
    require(steps >= 1 && thin >= 1, "steps and thin must be positive");
}

double GWIConfig::time_unit(double alpha) const { return std::pow(N, alpha) / (alpha * c); }

GWILaws::GWILaws(double alpha, double c, double d) : alpha_(alpha), c_(c), d_(d)
{
    const auto size = static_cast<std::size_t>(kTableSize) + 1;
    xi_survival_.resize(size);
    imm_survival_.resize(size);
    // P(ξ > k): 1-c, cα, then ratios (k-1-α)/k
    xi_survival_[0] = 1.0 - c;
    xi_survival_[1] = c * alpha;
    for (std::size_t k = 2; k < size; ++k) xi_survival_[k] = xi_survival_[k - 1] * (k - 1.0 - alpha) / k;
    // P(I > k): d, then ratios (k-α)/k
    imm_survival_[0] = d;
    for (std::size_t k = 1; k < size; ++k) imm_survival_[k] = imm_survival_[k - 1] * (k - alpha) / k;
}

double GWILaws::offspring_survival(double k) const
{
    if (k < 0.0) return 1.0;
    if (k <= kTableSize) return xi_survival_[static_cast<std::size_t>(k)];
    return c_ * alpha_ / std::tgamma(1.0 - alpha_) * std::exp(std::lgamma(k - alpha_) - std::lgamma(k + 1.0));
}

double GWILaws::immigration_survival(double k) const
{
    if (k < 0.0) return 1.0;
    if (k <= kTableSize) return imm_survival_[static_cast<std::size_t>(k)];
    return d_ / std::tgamma(1.0 - alpha_) * std::exp(std::lgamma(k + 1.0 - alpha_) - std::lgamma(k + 1.0));
}

namespace {

// Smallest k with survival(k) < target, for a decreasing survival function.
template <class Survival>
double invert_survival(const std::vector<double>& table, double target, Survival survival)
{
    if (table.back() < target) {
        auto it = std::upper_bound(table.begin(), table.end(), target, [](double t, double v) { return v < t; });
        return static_cast<double>(it - table.begin());
    }
    double lo = kTableSize;  // survival(lo) >= target
    double hi = 2.0 * lo;
    while (survival(hi) >= target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) return hi;
    }
    while (hi - lo > 1.0 && hi > lo * (1.0 + 1e-15)) {
        const double mid = hi - lo > 2.0 ? std::floor(0.5 * (lo + hi)) : lo + 1.0;
        if (survival(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

}  // namespace

double GWILaws::offspring_at_least(std::int64_t k, RngStream& rng) const
{
    const double target = rng.uniform_open() * offspring_survival(static_cast<double>(k) - 1.0);
    return invert_survival(xi_survival_, target, [this](double j) { return offspring_survival(j); });
}

double GWILaws::immigrants(RngStream& rng) const
{
    if (d_ == 0.0) return 0.0;
    const double target = rng.uniform_open();
    return invert_survival(imm_survival_, target, [this](double j) { return immigration_survival(j); });
}

double GWILaws::offspring_sum(double count, RngStream& rng) const
{
    if (count <= 0.0) return 0.0;
    if (count > kTableSize) {
        // domain of attraction: Σ(ξ-1) ≈ (c·count)^{1/β} L
        const double beta = 1.0 + alpha_;
        return std::max(0.0, count + std::pow(c_ * count, 1.0 / beta) * sample_positive_stable_sum(alpha_, rng));
    }
    // peel off the individuals with ξ = k, k = 0,1,2,..., binomially
    auto remaining = static_cast<std::int64_t>(count);
    double sum = 0.0;
    std::int64_t k = 0;
    while (remaining > 16) {
        const double hazard = 1.0 - offspring_survival(static_cast<double>(k)) / offspring_survival(k - 1.0);
        std::binomial_distribution<std::int64_t> bin(remaining, std::clamp(hazard, 0.0, 1.0));
        const std::int64_t hits = bin(rng);
        sum += static_cast<double>(k) * static_cast<double>(hits);
        remaining -= hits;
        ++k;
    }
    for (std::int64_t i = 0; i < remaining; ++i) sum += offspring_at_least(k, rng);
    return sum;
}

double sample_positive_stable_sum(double alpha, RngStream& rng)
{
    // Chambers-Mallows-Stuck, index β = 1+α, skewness 1, scale σ^β = |cos(πβ/2)|
    const double beta = 1.0 + alpha;
    const double tan_b = std::tan(std::numbers::pi * beta / 2.0);
    const double shift = std::atan(tan_b) / beta;
    const double factor = std::pow(1.0 + tan_b * tan_b, 1.0 / (2.0 * beta));
    const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
    const double w = rng.exponential();
    const double x = factor * std::sin(beta * (v + shift)) / std::pow(std::cos(v), 1.0 / beta) *
                     std::pow(std::cos(v - beta * (v + shift)) / w, (1.0 - beta) / beta);
    const double sigma = std::pow(std::abs(std::cos(std::numbers::pi * beta / 2.0)), 1.0 / beta);
    return sigma * x;
}

double EmpiricalLaplace::operator()(double lambda) const { return (-lambda * states_.array()).exp().mean(); }

EstimateWithError EmpiricalLaplace::estimate(double lambda) const
{
    return batch_means((-lambda * states_.array()).exp().matrix());
}

EmpiricalLaplace gwi_chain(const GWIConfig& cfg, double alpha, RngStream& rng)
{
    cfg.validate(alpha);
    const GWILaws laws(alpha, cfg.c, cfg.d);
    const double keep = 1.0 - cfg.c * std::pow(cfg.N, -alpha);
    const std::int64_t burn =
        cfg.burn_in >= 0 ? cfg.burn_in : static_cast<std::int64_t>(std::ceil(20.0 * cfg.time_unit(alpha)));

    Vector records((cfg.steps + cfg.thin - 1) / cfg.thin);
    Index stored = 0;
    double z = 0.0;
    std::normal_distribution<double> gauss;
    for (std::int64_t g = 0; g < burn + cfg.steps; ++g) {
        double survivors;
        if (z < 1e15) {
            std::binomial_distribution<std::int64_t> bin(static_cast<std::int64_t>(z), keep);
            survivors = static_cast<double>(bin(rng));
        } else {
            survivors = z * keep + std::sqrt(z * keep * (1.0 - keep)) * gauss(rng);
        }
        z = laws.offspring_sum(survivors, rng) + laws.immigrants(rng);
        if (g >= burn && (g - burn) % cfg.thin == 0) records[stored++] = z / cfg.N;
    }
    return EmpiricalLaplace(records.head(stored));
}

LinnikFit fit_linnik(const Vector& lambdas, const Vector& values, double alpha)
{
    require_alpha(alpha);
    require(lambdas.size() == 3 && values.size() == 3, "the fit uses three points");
    LinnikFit fit;
    fit.lambdas = lambdas;
    fit.empirical = values;
    fit.fitted = Vector::Constant(3, std::numeric_limits<double>::quiet_NaN());
    fit.max_error = std::numeric_limits<double>::infinity();

    const double v0 = values[0];
    const double v2 = values[2];
    if (!(v0 > 0.0 && v0 < 1.0 && v2 > 0.0 && v2 < v0)) return fit;
    const double target = alpha * std::log(lambdas[2] / lambdas[0]);
    // (v^{-1/γ} - 1) = (κλ)^α, so the ratio at λ2 and λ0 must equal (λ2/λ0)^α
    auto log_expm1 = [](double a) { return a > 30.0 ? a + std::log1p(-std::exp(-a)) : std::log(std::expm1(a)); };
    auto excess = [&](double log_gamma) {
        const double g = std::exp(log_gamma);
        return log_expm1(-std::log(v2) / g) - log_expm1(-std::log(v0) / g) - target;
    };
    double lo = std::log(1e-6);
    double hi = std::log(1e4);
    if (excess(lo) * excess(hi) > 0.0) return fit;
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((excess(mid) > 0.0) == (excess(lo) > 0.0))
            lo = mid;
        else
            hi = mid;
    }
    fit.gamma = std::exp(0.5 * (lo + hi));
    const double ka = std::expm1(-std::log(v0) / fit.gamma) / std::pow(lambdas[0], alpha);
    fit.kappa = std::pow(ka, 1.0 / alpha);
    for (Index i = 0; i < 3; ++i) fit.fitted[i] = std::pow(1.0 + ka * std::pow(lambdas[i], alpha), -fit.gamma);
    fit.max_error = (fit.fitted - fit.empirical).cwiseAbs().maxCoeff();
    fit.converged = true;
    return fit;
}

LinnikFit fit_linnik(const EmpiricalLaplace& laplace, double alpha, const Vector& lambdas)
{
    Vector values(lambdas.size());
    for (Index i = 0; i < lambdas.size(); ++i) values[i] = laplace(lambdas[i]);
    return fit_linnik(lambdas, values, alpha);
}

EstimateWithError fit_residual(const EmpiricalLaplace& laplace, double alpha, const Vector& lambdas, int batches)
{
    require(lambdas.size() == 3, "the fit uses three points");
    require(batches >= 2, "the jackknife needs two batches");
    const Vector& x = laplace.states();
    const Index b = batches;
    if (x.size() < b) throw InsufficientPath("too few records for the jackknife");
    const Index len = x.size() / b;
    const Index start = x.size() - b * len;

    Eigen::MatrixXd sums(b, 3);
    for (Index j = 0; j < b; ++j)
        for (Index i = 0; i < 3; ++i) sums(j, i) = (-lambdas[i] * x.segment(start + j * len, len).array()).exp().sum();
    const Eigen::RowVectorXd total = sums.colwise().sum();

    auto residual = [&](const Eigen::RowVectorXd& s, double count) {
        const Vector values = s.transpose() / count;
        const LinnikFit fit = fit_linnik(lambdas, values, alpha);
        if (!fit.converged) throw InvalidParameter("Linnik fit did not converge");
        return values[1] - fit.fitted[1];
    };
    const double full = residual(total, static_cast<double>(b * len));
    Vector loo(b);
    for (Index j = 0; j < b; ++j) loo[j] = residual(total - sums.row(j), static_cast<double>((b - 1) * len));
    const double var = (loo.array() - loo.mean()).square().sum() * static_cast<double>(b - 1) / static_cast<double>(b);
    return {full, std::sqrt(var), static_cast<std::int64_t>(x.size())};
}

}  // namespace gfv
