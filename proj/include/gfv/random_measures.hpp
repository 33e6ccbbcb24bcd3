#pragma once

#include "gfv/estimate.hpp"
#include "gfv/rng.hpp"
#include "gfv/types.hpp"

#include <utility>
#include <vector>

namespace gfv {

/// Φ(μ) = ⟨μ,f_1⟩···⟨μ,f_n⟩ over a finite type space. An empty factor list
/// is the constant 1.
class MomentFunction {
public:
    MomentFunction() = default;
    explicit MomentFunction(std::vector<Vector> factors);

    /// ⟨μ,f⟩^n
    static MomentFunction power(const Vector& f, int n);

    int order() const { return static_cast<int>(factors_.size()); }
    const std::vector<Vector>& factors() const { return factors_; }
    Index types() const { return factors_.empty() ? 0 : factors_.front().size(); }

    double operator()(const Vector& mu) const;
    double operator()(const ProbabilityVector& mu) const { return (*this)(mu.weights()); }

private:
    std::vector<Vector> factors_;
};

/// A finite linear combination Σ c_j Φ_j.
using MomentExpansion = std::vector<std::pair<MomentFunction, double>>;

double evaluate(const MomentExpansion& terms, const Vector& mu);

/// Exact expansion of A_{α,θν}Φ for product-form Φ: merging terms over
/// subsets I with |I| >= 2, replacement terms integrating the factors in I
/// against ν, and the diagonal term -(α+1)_{n-1}(θ+n-1)/((α+1)Γ(n))·Φ.
MomentExpansion generator_moment_action(const MomentFunction& phi, double theta, const ProbabilityVector& nu,
                                        double alpha);

/// Symmetric table M_n(i_1..i_n) = E[μ_{i_1}···μ_{i_n}], stored flat with
/// the first index varying fastest.
class MomentTensor {
public:
    MomentTensor(int order, Index types);

    int order() const { return order_; }
    Index types() const { return types_; }
    Index size() const { return entries_.size(); }
    const Vector& entries() const { return entries_; }
    Vector& entries() { return entries_; }

    double operator()(const std::vector<int>& index) const { return entries_[flat(index)]; }
    Index flat(const std::vector<int>& index) const;
    std::vector<int> unflat(Index i) const;

    /// Contraction with the all-ones vector in the last slot.
    MomentTensor contract_ones() const;

    /// ⟨M_n, f_1⊗···⊗f_n⟩ = E[∏⟨μ,f_i⟩]
    double pair(const std::vector<Vector>& f) const;

private:
    int order_;
    Index types_;
    Vector entries_;
};

/// Stationary moment tensors M_1..M_{n_max} of A_{α,θν}, solved order by
/// order from E[AΦ] = 0 with indicator factors. Throws SizeLimit when k^n
/// exceeds 1e7 entries.
std::vector<MomentTensor> stationary_moment_tensors(double theta, const ProbabilityVector& nu, double alpha,
                                                    int n_max);

/// Exact E[∏⟨μ,f_i⟩] under Dirichlet(m), removing one factor at a time.
double dirichlet_moment(const FiniteMeasure& m, const std::vector<Vector>& f);

/// Σ_k α^k k! Σ_{γ∈π(n,k)} E_{D_{θν}}[∏_j (1-α)_{|γ_j|-1} ⟨μ, ∏_{i∈γ_j} f_i⟩].
/// Divided by (α)_n it is the stationary mixed moment. Throws SizeLimit for n > 10.
double partition_coefficient_3_27(double theta, const ProbabilityVector& nu, double alpha,
                                  const std::vector<Vector>& f);

/// All set partitions of {0..n-1} as block labels (restricted growth strings).
std::vector<std::vector<int>> set_partitions(int n);

struct WeightedMeasure {
    Vector value;
    double weight;
};

/// μ ~ Dirichlet(m), η ~ stable random measure with parameter μ;
/// value η/η(E), weight η(E)^{-α}.
WeightedMeasure draw_P_alpha_m(double alpha, const FiniteMeasure& m, RngStream& rng);
std::vector<WeightedMeasure> sample_P_alpha_m(double alpha, const FiniteMeasure& m, std::int64_t n, RngStream& rng);

/// Self-normalized estimates of E[Φ_j(μ)] under P_{α,m}.
std::vector<EstimateWithError> P_alpha_m_expectations(double alpha, const FiniteMeasure& m,
                                                      const std::vector<MomentFunction>& phi, std::int64_t n,
                                                      RngStream& rng);

struct McVsClosedForm {
    EstimateWithError estimate;
    double closed_form;
};

struct McVsMc {
    EstimateWithError lhs;
    EstimateWithError rhs;
};

/// E_{D_m}[⟨μ,1+f⟩^{-m(E)}] against e^{-⟨m,log(1+f)⟩}.
McVsClosedForm check_3_5(const FiniteMeasure& m, const Vector& f, std::int64_t n, RngStream& rng);

/// ∫D^{(α,α)}_m(dμ)⟨μ,1+f⟩^{-α} as Γ(α+1)·E^{Q_{α,m}}[⟨η,1+f⟩^{-α}], against 1/⟨m,(1+f)^α⟩.
McVsClosedForm check_3_19(double alpha, const FiniteMeasure& m, const Vector& f, std::int64_t n, RngStream& rng);

/// E_{P_{α,m}}[⟨μ,1+f⟩^{-α}] against E_{D_m}[⟨μ,(1+f)^α⟩^{-1}], both by Monte Carlo.
McVsMc check_3_20(double alpha, const FiniteMeasure& m, const Vector& f, std::int64_t n, RngStream& rng);

}  // namespace gfv
