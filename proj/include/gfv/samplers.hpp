#pragma once

#include "gfv/rng.hpp"
#include "gfv/types.hpp"

namespace gfv {

/// One-sided α-stable variate with E[exp(-λY)] = exp(-scale·λ^α).
/// Kanter's representation of a uniform angle and an exponential; scale 0 gives 0.
double sample_stable(double alpha, double scale, RngStream& rng);

/// log of a Gamma(shape, 1) variate. Shapes below one are boosted through
/// Gamma(a) = Gamma(a+1)·U^{1/a}, which stays finite in log space.
double sample_log_gamma(double shape, RngStream& rng);

/// Gamma(shape, 1); shape 0 returns 0.
double sample_gamma(double shape, RngStream& rng);

double sample_beta(double a, double b, RngStream& rng);

/// Dirichlet(m_1,...,m_k), built from normalized independent gammas.
/// Types with zero parameter get exactly zero mass.
ProbabilityVector sample_dirichlet(const FiniteMeasure& m, RngStream& rng);

/// Linnik variate Y_α(γ(c)): Laplace transform (1+λ^α)^{-c}.
double sample_linnik(double alpha, double c, RngStream& rng);

/// Independent stable components η_i with scale m_i; Laplace functional exp(-⟨m, f^α⟩).
FiniteMeasure sample_stable_random_measure(double alpha, const FiniteMeasure& m, RngStream& rng);

/// Independent Gamma(m_i, 1) components; Laplace functional exp(-⟨m, log(1+f)⟩).
FiniteMeasure sample_gamma_random_measure(const FiniteMeasure& m, RngStream& rng);

}  // namespace gfv
