#include "gfv/random_measures.hpp"

#include "gfv/analytic.hpp"
#include "gfv/samplers.hpp"

#include <cmath>
#include <algorithm>
#include <bit>
#include <map>

namespace gfv {

namespace {

constexpr double kTinyMass = 1e-300;

// Coefficients of the order-n expansion, per subset of size s.
double merge_coefficient(double alpha, int n, int s)
{
    return pochhammer(1.0 - alpha, s - 2) * pochhammer(alpha + 1.0, n - s) / std::tgamma(static_cast<double>(n));
}

double replace_coefficient(double alpha, double theta, int n, int s)
{
    return theta * pochhammer(1.0 - alpha, s - 1) * pochhammer(alpha, n - s) /
           ((alpha + 1.0) * std::tgamma(static_cast<double>(n)));
}

double diagonal_coefficient(double alpha, double theta, int n)
{
    return pochhammer(alpha + 1.0, n - 1) * (theta + n - 1.0) / ((alpha + 1.0) * std::tgamma(static_cast<double>(n)));
}

double binomial(int n, int k) { return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0))); }

struct RatioSet {
    std::vector<RatioAccumulator> acc;
    void merge(const RatioSet& o)
    {
        if (acc.empty()) acc.resize(o.acc.size());
        for (std::size_t j = 0; j < o.acc.size(); ++j) acc[j].merge(o.acc[j]);
    }
};

// Moments of the stationary law indexed by type counts (a_1..a_k).
class CountMoments {
public:
    CountMoments(double theta, const ProbabilityVector& nu, double alpha) : theta_(theta), nu_(nu), alpha_(alpha) {}

    double operator()(const std::vector<int>& a)
    {
        int n = 0;
        for (int c : a) n += c;
        if (n == 0) return 1.0;
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;

        double rhs = 0.0;
        std::vector<int> b = a;
        for (std::size_t r = 0; r < a.size(); ++r) {
            for (int s = 1; s <= a[r]; ++s) {
                const double ways = binomial(a[r], s);
                if (s >= 2) {
                    b[r] = a[r] - s + 1;
                    rhs += ways * merge_coefficient(alpha_, n, s) * (*this)(b);
                }
                if (nu_[static_cast<Index>(r)] > 0.0) {
                    b[r] = a[r] - s;
                    rhs += ways * replace_coefficient(alpha_, theta_, n, s) * nu_[static_cast<Index>(r)] * (*this)(b);
                }
                b[r] = a[r];
            }
        }
        const double diag = diagonal_coefficient(alpha_, theta_, n);
        if (!(diag > 0.0)) throw SingularSystem("nonpositive diagonal in the moment system");
        const double value = rhs / diag;
        memo_.emplace(a, value);
        return value;
    }

private:
    double theta_;
    ProbabilityVector nu_;
    double alpha_;
    std::map<std::vector<int>, double> memo_;
};

}  // namespace

MomentFunction::MomentFunction(std::vector<Vector> factors) : factors_(std::move(factors))
{
    for (const auto& f : factors_) require(f.size() == factors_.front().size(), "factor lengths must agree");
}

MomentFunction MomentFunction::power(const Vector& f, int n)
{
    require(n >= 1, "moment order must be positive");
    return MomentFunction(std::vector<Vector>(static_cast<std::size_t>(n), f));
}

double MomentFunction::operator()(const Vector& mu) const
{
    double p = 1.0;
    for (const auto& f : factors_) p *= mu.dot(f);
    return p;
}

double evaluate(const MomentExpansion& terms, const Vector& mu)
{
    double s = 0.0;
    for (const auto& [phi, c] : terms) s += c * phi(mu);
    return s;
}

MomentExpansion generator_moment_action(const MomentFunction& phi, double theta, const ProbabilityVector& nu,
                                        double alpha)
{
    require_alpha(alpha);
    require(theta >= 0.0, "theta must be nonnegative");
    const int n = phi.order();
    MomentExpansion out;
    if (n == 0) return out;
    require(phi.types() == nu.size(), "test function and nu must have the same number of types");
    require(n <= 20, "expansion order too large");

    const auto& f = phi.factors();
    const unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask <= full; ++mask) {
        const int s = std::popcount(mask);
        Vector merged = Vector::Ones(nu.size());
        std::vector<Vector> rest;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i))
                merged.array() *= f[static_cast<std::size_t>(i)].array();
            else
                rest.push_back(f[static_cast<std::size_t>(i)]);
        }
        if (s >= 2) {
            std::vector<Vector> g = rest;
            g.push_back(merged);
            out.emplace_back(MomentFunction(std::move(g)), merge_coefficient(alpha, n, s));
        }
        if (theta > 0.0) out.emplace_back(MomentFunction(rest), replace_coefficient(alpha, theta, n, s) * nu.pair(merged));
    }
    out.emplace_back(phi, -diagonal_coefficient(alpha, theta, n));
    return out;
}

MomentTensor::MomentTensor(int order, Index types) : order_(order), types_(types)
{
    require(order >= 1 && types >= 1, "tensor order and type count must be positive");
    const double count = std::pow(static_cast<double>(types), order);
    if (count > 1e7) throw SizeLimit("moment tensor too large");
    entries_ = Vector::Zero(static_cast<Index>(count));
}

Index MomentTensor::flat(const std::vector<int>& index) const
{
    Index i = 0;
    for (int j = order_ - 1; j >= 0; --j) i = i * types_ + index[static_cast<std::size_t>(j)];
    return i;
}

std::vector<int> MomentTensor::unflat(Index i) const
{
    std::vector<int> index(static_cast<std::size_t>(order_));
    for (int j = 0; j < order_; ++j) {
        index[static_cast<std::size_t>(j)] = static_cast<int>(i % types_);
        i /= types_;
    }
    return index;
}

MomentTensor MomentTensor::contract_ones() const
{
    require(order_ >= 2, "cannot contract a first-order tensor");
    MomentTensor out(order_ - 1, types_);
    const Index stride = out.size();
    for (Index last = 0; last < types_; ++last) out.entries_ += entries_.segment(last * stride, stride);
    return out;
}

double MomentTensor::pair(const std::vector<Vector>& f) const
{
    require(static_cast<int>(f.size()) == order_, "need one vector per tensor slot");
    // contract the last slot repeatedly
    Vector cur = entries_;
    Index len = cur.size();
    for (int j = order_ - 1; j >= 0; --j) {
        len /= types_;
        Vector next = Vector::Zero(len);
        for (Index r = 0; r < types_; ++r) next += f[static_cast<std::size_t>(j)][r] * cur.segment(r * len, len);
        cur = std::move(next);
    }
    return cur[0];
}

std::vector<MomentTensor> stationary_moment_tensors(double theta, const ProbabilityVector& nu, double alpha,
                                                    int n_max)
{
    require_alpha(alpha);
    require(theta > 0.0, "theta must be positive");
    require(n_max >= 1, "n_max must be positive");
    const Index k = nu.size();
    CountMoments moments(theta, nu, alpha);
    std::vector<MomentTensor> out;
    for (int n = 1; n <= n_max; ++n) {
        MomentTensor t(n, k);
        for (Index i = 0; i < t.size(); ++i) {
            std::vector<int> counts(static_cast<std::size_t>(k), 0);
            for (int label : t.unflat(i)) ++counts[static_cast<std::size_t>(label)];
            t.entries()[i] = moments(counts);
        }
        out.push_back(std::move(t));
    }
    return out;
}

double dirichlet_moment(const FiniteMeasure& m, const std::vector<Vector>& f)
{
    require(!m.is_null(), "Dirichlet parameter must be nonnull");
    const std::size_t n = f.size();
    if (n == 0) return 1.0;
    const double theta = m.total();
    const Vector& last = f.back();
    std::vector<Vector> head(f.begin(), f.end() - 1);
    double s = m.weights().dot(last) * dirichlet_moment(m, head);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<Vector> g = head;
        g[j] = (g[j].array() * last.array()).matrix();
        s += dirichlet_moment(m, g);
    }
    return s / (theta + static_cast<double>(n) - 1.0);
}

std::vector<std::vector<int>> set_partitions(int n)
{
    require(n >= 1, "partition size must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> top(static_cast<std::size_t>(n), 0);  // max label among a[0..i]
    for (;;) {
        out.push_back(a);
        int i = n - 1;
        while (i > 0 && a[static_cast<std::size_t>(i)] > top[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) break;
        ++a[static_cast<std::size_t>(i)];
        top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            a[static_cast<std::size_t>(j)] = 0;
            top[static_cast<std::size_t>(j)] = top[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

double partition_coefficient_3_27(double theta, const ProbabilityVector& nu, double alpha, const std::vector<Vector>& f)
{
    require_alpha(alpha);
    require(theta > 0.0, "theta must be positive");
    const int n = static_cast<int>(f.size());
    if (n > 10) throw SizeLimit("partition expansion limited to n <= 10");
    require(n >= 1, "need at least one test function");
    const FiniteMeasure m = theta * nu;
    double total = 0.0;
    for (const auto& labels : set_partitions(n)) {
        const int k = *std::max_element(labels.begin(), labels.end()) + 1;
        std::vector<Vector> merged(static_cast<std::size_t>(k), Vector::Ones(nu.size()));
        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]);
            merged[b].array() *= f[static_cast<std::size_t>(i)].array();
            ++sizes[b];
        }
        double weight = std::pow(alpha, k) * std::tgamma(k + 1.0);
        for (int s : sizes) weight *= pochhammer(1.0 - alpha, s - 1);
        total += weight * dirichlet_moment(m, merged);
    }
    return total;
}

WeightedMeasure draw_P_alpha_m(double alpha, const FiniteMeasure& m, RngStream& rng)
{
    for (;;) {
        const ProbabilityVector mu = sample_dirichlet(m, rng);
        Vector eta(m.size());
        for (Index i = 0; i < m.size(); ++i) eta[i] = sample_stable(alpha, mu[i], rng);
        const double s = eta.sum();
        if (s >= kTinyMass) return {eta / s, std::pow(s, -alpha)};
    }
}

std::vector<WeightedMeasure> sample_P_alpha_m(double alpha, const FiniteMeasure& m, std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(!m.is_null(), "m must be nonnull");
    std::vector<WeightedMeasure> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) out.push_back(draw_P_alpha_m(alpha, m, rng));
    return out;
}

std::vector<EstimateWithError> P_alpha_m_expectations(double alpha, const FiniteMeasure& m,
                                                      const std::vector<MomentFunction>& phi, std::int64_t n,
                                                      RngStream& rng)
{
    require_alpha(alpha);
    require(!m.is_null(), "m must be nonnull");
    const RatioSet total = parallel_chunks<RatioSet>(n, rng, [&](RngStream& s, std::int64_t count, RatioSet& out) {
        out.acc.resize(phi.size());
        for (std::int64_t i = 0; i < count; ++i) {
            const WeightedMeasure w = draw_P_alpha_m(alpha, m, s);
            for (std::size_t j = 0; j < phi.size(); ++j) out.acc[j].add(phi[j](w.value), w.weight);
        }
    });
    std::vector<EstimateWithError> out;
    for (const auto& a : total.acc) out.push_back(a.result());
    return out;
}

McVsClosedForm check_3_5(const FiniteMeasure& m, const Vector& f, std::int64_t n, RngStream& rng)
{
    require(!m.is_null(), "m must be nonnull");
    require((f.array() >= 0.0).all(), "f must be nonnegative");
    const Vector g = (1.0 + f.array()).matrix();
    const double theta = m.total();
    const MeanAccumulator acc = parallel_chunks<MeanAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, MeanAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i) out.add(std::pow(sample_dirichlet(m, s).pair(g), -theta));
    });
    return {acc.result(), std::exp(-m.weights().dot(g.array().log().matrix()))};
}

McVsClosedForm check_3_19(double alpha, const FiniteMeasure& m, const Vector& f, std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(!m.is_null(), "m must be nonnull");
    require((f.array() >= 0.0).all(), "f must be nonnegative");
    const Vector g = (1.0 + f.array()).matrix();
    const double scale = std::tgamma(alpha + 1.0);
    const MeanAccumulator acc = parallel_chunks<MeanAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, MeanAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i)
            out.add(scale * std::pow(sample_stable_random_measure(alpha, m, s).weights().dot(g), -alpha));
    });
    return {acc.result(), 1.0 / m.weights().dot(g.array().pow(alpha).matrix())};
}

McVsMc check_3_20(double alpha, const FiniteMeasure& m, const Vector& f, std::int64_t n, RngStream& rng)
{
    require_alpha(alpha);
    require(!m.is_null(), "m must be nonnull");
    require((f.array() >= 0.0).all(), "f must be nonnegative");
    const Vector g = (1.0 + f.array()).matrix();
    const Vector ga = g.array().pow(alpha).matrix();
    const RatioAccumulator lhs = parallel_chunks<RatioAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, RatioAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i) {
            const WeightedMeasure w = draw_P_alpha_m(alpha, m, s);
            out.add(std::pow(w.value.dot(g), -alpha), w.weight);
        }
    });
    const MeanAccumulator rhs = parallel_chunks<MeanAccumulator>(n, rng, [&](RngStream& s, std::int64_t count, MeanAccumulator& out) {
        for (std::int64_t i = 0; i < count; ++i) out.add(1.0 / sample_dirichlet(m, s).pair(ga));
    });
    return {lhs.result(), rhs.result()};
}

}  // namespace gfv
