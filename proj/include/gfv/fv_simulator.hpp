#pragma once

#include "gfv/estimate.hpp"
#include "gfv/quadrature.hpp"
#include "gfv/random_measures.hpp"
#include "gfv/rng.hpp"
#include "gfv/stationary1d.hpp"
#include "gfv/types.hpp"

#include <Eigen/Core>

#include <functional>

namespace gfv {

struct SimConfig {
    double epsilon = 1e-4;
    double t_end = 100.0;
    double record_dt = 0.1;
    bool drift_compensation = true;
    /// Largest admissible total event rate Λ(ε).
    double rate_budget = 1e7;

    void validate() const;
};

/// States on the record grid: row i of `states` is μ at times[i].
struct PathRecord {
    Vector times;
    Eigen::MatrixXd states;

    Index size() const { return times.size(); }
    ProbabilityVector state(Index i) const { return ProbabilityVector::normalize(states.row(i).transpose()); }
};

/// A smooth function on [0,1] with its first two derivatives.
struct TestFunction1D {
    std::function<double(double)> g;
    std::function<double(double)> dg;
    std::function<double(double)> d2g;
};

TestFunction1D power_function(int n);
/// G_t(x) = 1/(1+tx)
TestFunction1D stieltjes_function(double t);

/// A_α x^n from the finite binomial expansions and beta moments.
double generator_apply_poly(int n, double x, const ModelParams1D& p);

/// A_α G_t(x) in closed form.
double generator_apply_Gt(double t, double x, const ModelParams1D& p);

/// A_α G(x) by adaptive quadrature of both jump integrals. The reproduction
/// bracket is divided by u² and the mutation bracket by u through integral
/// remainders of G'' and G', so no cancellation occurs as u → 0.
double generator_apply_direct(const TestFunction1D& G, double x, const ModelParams1D& p, const QuadratureSpec& q = {});

struct JumpRates {
    double reproduction;  ///< ∫_ε^1 B_{1-α,1+α}(du)/u²
    double mutation;      ///< θ∫_ε^1 B_{1-α,α}(du)/((α+1)u)
    double kappa;         ///< ∫_0^ε B_{1-α,α}(du)
    double drift;         ///< κθ/(α+1), the compensating relaxation rate
    double total() const { return reproduction + mutation; }
};

JumpRates jump_rates(double alpha, double theta, double epsilon, const QuadratureSpec& q = {});

/// Exact sampler of jump sizes restricted to [ε,1].
class TruncatedJumps {
public:
    TruncatedJumps(double alpha, double epsilon);

    /// Density ∝ u^{-2-α}(1-u)^α.
    double reproduction(RngStream& rng) const;
    /// Density ∝ u^{-1-α}(1-u)^{α-1}.
    double mutation(RngStream& rng) const;

private:
    double alpha_;
    double epsilon_;
    double rep_top_;     // ε^{-1-α}
    double mut_top_;     // ε^{-α}
    double mut_split_;   // probability of the lower envelope piece
};

/// ε-truncated jump chain of the k-type process with mutation parameter θν.
PathRecord simulate_path(const ProbabilityVector& mu0, double theta, const ProbabilityVector& nu, double alpha,
                         const SimConfig& cfg, RngStream& rng);

/// Time average of Φ over records at times >= burn_in, with batch-means SE.
EstimateWithError ergodic_moment_estimate(const PathRecord& path, const MomentFunction& phi, double burn_in);

/// Time average of Φ corrected by a control Ψ with known stationary mean:
/// Φ̄ - b(Ψ̄ - control_mean), with b the regression slope of the batch means
/// of Φ on those of Ψ. The SE comes from the residual batch means.
EstimateWithError ergodic_control_variate_estimate(const PathRecord& path, const MomentFunction& phi,
                                                   const MomentFunction& control, double control_mean,
                                                   double burn_in, int batches = 30);

}  // namespace gfv
