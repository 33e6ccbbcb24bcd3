#pragma once

#include "gfv/analytic.hpp"
#include "gfv/estimate.hpp"
#include "gfv/quadrature.hpp"
#include "gfv/random_measures.hpp"
#include "gfv/rng.hpp"
#include "gfv/types.hpp"

#include <vector>

namespace gfv {

/// Ψ(η) = Φ(η/η(E)) for a product-form Φ; scale invariant.
struct RatioMomentFunctional {
    MomentFunction phi;

    static RatioMomentFunctional power(const Vector& f, int n) { return {MomentFunction::power(f, n)}; }
    double operator()(const FiniteMeasure& eta) const { return phi(eta.weights() / eta.total()); }
    /// δΨ/δη(r)
    Vector derivative(const FiniteMeasure& eta) const;
};

/// Ψ(η) = ⟨η,f⟩^n without normalization.
struct PowerMomentFunctional {
    Vector f;
    int n;
};

/// The three parts of L_{α,m}Ψ(η).
struct GeneratorParts {
    double branching = 0.0;
    double drift = 0.0;
    double immigration = 0.0;
    double total() const { return branching + drift + immigration; }
};

/// L_{α,m}Ψ(η) with branching ((α+1)/Γ(1-α))z^{-2-α}dz, drift -(1/α)⟨η,δΨ/δη⟩ and
/// immigration (α/Γ(1-α))z^{-1-α}dz. Under z = η(E)u/(1-u) the perturbed
/// state is Φ((1-u)μ + uδ_r), a polynomial in u, so the compensated
/// increment is evaluated from its coefficients without cancellation.
GeneratorParts generator_L_apply(const RatioMomentFunctional& psi, const FiniteMeasure& eta, const FiniteMeasure& m,
                                 double alpha, const QuadratureSpec& q = {});

/// Unnormalized moments have divergent jump integrals except for n = 1 with
/// ⟨m,f⟩ = 0 (then only the drift -⟨η,f⟩/α remains). Throws DivergentIntegral otherwise.
GeneratorParts generator_L_apply(const PowerMomentFunctional& psi, const FiniteMeasure& eta, const FiniteMeasure& m,
                                 double alpha);

/// lhs = L_{α,m}Ψ(η) by quadrature, rhs = Γ(α+2) η(E)^{-α} A_{α,m}Φ(η/η(E)) from the moment expansion.
IdentityCheck check_factorization_3_2(const MomentFunction& phi, const FiniteMeasure& eta, const FiniteMeasure& m,
                                      double alpha, const QuadratureSpec& q = {});

/// exp[-⟨η0,V_t f⟩ - ∫_0^t ⟨m,(V_s f)^α⟩ ds]
double transition_laplace_3_10(const FiniteMeasure& eta0, const Vector& f, double t, const FiniteMeasure& m,
                               double alpha, const QuadratureSpec& q = {});

/// exp[-⟨m, log(1+f^α)⟩]
double stationary_laplace_3_8(const FiniteMeasure& m, const Vector& f, double alpha);

/// Independent Linnik atoms η_r = Y_α(γ(m_r)).
FiniteMeasure sample_linnik_random_measure(double alpha, const FiniteMeasure& m, RngStream& rng);

/// Plain Monte Carlo of E[e^{-⟨η,f⟩}] under the Linnik random measure.
EstimateWithError linnik_laplace_estimate(double alpha, const FiniteMeasure& m, const Vector& f, std::int64_t n,
                                          RngStream& rng);

struct NegativeMomentCheck {
    EstimateWithError estimate;
    double closed_form;
    /// m(E) <= 2: the estimator has infinite variance and the SE is unreliable.
    bool heavy_tailed;
};

/// E[η(E)^{-α}] under the Linnik random measure against 1/(Γ(α+1)(m(E)-1)).
NegativeMomentCheck neg_alpha_moment_prop34(double alpha, const FiniteMeasure& m, std::int64_t n, RngStream& rng);

/// Galton-Watson chain with immigration: offspring pgf s + c(1-s)^{1+α},
/// immigration pgf 1 - d(1-s)^α, and per-generation survival 1 - c N^{-α}
/// that supplies the linear part of the branching mechanism.
struct GWIConfig {
    double c = 0.5;
    double d = 0.5;
    double N = 1e4;
    std::int64_t steps = 1000000;
    /// Generations discarded before recording; negative selects 20 relaxation times.
    std::int64_t burn_in = -1;
    /// Record every `thin` generations.
    std::int64_t thin = 1;

    void validate(double alpha) const;
    /// Generations per unit of the limiting time scale, N^α/(αc).
    double time_unit(double alpha) const;
};

/// Offspring and immigration laws with cached survival tables.
class GWILaws {
public:
    GWILaws(double alpha, double c, double d);

    /// Sum of `count` offspring variates.
    double offspring_sum(double count, RngStream& rng) const;
    double immigrants(RngStream& rng) const;

    double offspring_survival(double k) const;   ///< P(ξ > k)
    double immigration_survival(double k) const; ///< P(I > k)

private:
    /// ξ conditioned on ξ >= k
    double offspring_at_least(std::int64_t k, RngStream& rng) const;

    double alpha_;
    double c_;
    double d_;
    std::vector<double> xi_survival_;
    std::vector<double> imm_survival_;
};

/// Spectrally positive (1+α)-stable variate L with E[e^{-λL}] = e^{λ^{1+α}}.
double sample_positive_stable_sum(double alpha, RngStream& rng);

/// Recorded states Z/N of the chain after burn-in.
class EmpiricalLaplace {
public:
    explicit EmpiricalLaplace(Vector states) : states_(std::move(states)) {}

    double operator()(double lambda) const;
    /// Batch-means estimate, since the records are autocorrelated.
    EstimateWithError estimate(double lambda) const;
    const Vector& states() const { return states_; }

private:
    Vector states_;
};

EmpiricalLaplace gwi_chain(const GWIConfig& cfg, double alpha, RngStream& rng);

/// Two-point fit of λ ↦ (1+(κλ)^α)^{-γ} at lambdas[0] and lambdas[2]; the
/// error is the largest gap over all three points.
struct LinnikFit {
    double kappa = 0.0;
    double gamma = 0.0;
    Vector lambdas;
    Vector empirical;
    Vector fitted;
    double max_error = 0.0;
    bool converged = false;
};

LinnikFit fit_linnik(const EmpiricalLaplace& laplace, double alpha, const Vector& lambdas);
LinnikFit fit_linnik(const Vector& lambdas, const Vector& values, double alpha);

/// Signed gap between the empirical transform and the two-point fit at the
/// middle λ, with a delete-one-batch jackknife SE over `batches` contiguous
/// batches of the records.
EstimateWithError fit_residual(const EmpiricalLaplace& laplace, double alpha, const Vector& lambdas, int batches = 30);

}  // namespace gfv
