#pragma once

#include "gfv/estimate.hpp"
#include "gfv/rng.hpp"
#include "gfv/types.hpp"

#include <vector>

namespace gfv {

/// f = 1_{E0} - ν(E0), so ⟨ν,f⟩ = 0 and ⟨ν,f³⟩ = ν(E0)(1-ν(E0))(1-2ν(E0)).
struct CenteredFunction {
    Vector f;
    double cube_moment;
};

/// Requires 0 < ν(E0) < 1/2.
CenteredFunction centered_indicator(const ProbabilityVector& nu, const std::vector<int>& E0);

/// α(1-α)θ²[(α+4)+(2-α)θ]⟨ν,f³⟩ / [(α+1)²(α+2)(θ+1)(θ+2)]
double delta_closed_form(double alpha, double theta, double cube_moment);

/// U(α,θ) = -(α+1)(2θ+1)[(α+1)+(1-α)θ] + [(α+1)+αθ](θ+1)[(α+1)+(2-α)θ]
double delta_polynomial_U(double alpha, double theta);
/// V(α,θ) = αθ²[(α+4)+(2-α)θ]
double delta_polynomial_V(double alpha, double theta);

/// Weighted Monte Carlo of ⟨μ,f⟩²AΦ₁(μ) - ⟨μ,f⟩AΦ₂(μ) under P_{α,θν}.
EstimateWithError delta_monte_carlo(double alpha, double theta, const ProbabilityVector& nu, const Vector& f,
                                    std::int64_t n, RngStream& rng);

enum class AsymmetryVerdict { irreversible, inconclusive };

/// Irreversible when the estimate is positive beyond k standard errors;
/// inconclusive otherwise (never "reversible").
AsymmetryVerdict classify_asymmetry(const EstimateWithError& delta, double k = 4.0);
const char* to_string(AsymmetryVerdict v);

struct IdentityRow {
    const char* name;
    EstimateWithError estimate;
    double closed_form;
};

/// Monte Carlo checks of the second- and third-moment identities:
///   (θ+1)E[⟨μ,f⟩⟨μ,g⟩] = 2αθ/(α+1)⟨ν,f⟩⟨ν,g⟩ + (1+(1-α)θ/(α+1))⟨ν,fg⟩,
///   E[⟨μ,f⟩⟨μ,f²⟩] = ((α+1)+(1-α)θ)/((α+1)(θ+1))⟨ν,f³⟩  (f centered),
///   (α+2)(θ+2)E[⟨μ,f⟩³] = 3(α+1)M_{1,2} + (1-α)(1+(2-α)θ/(α+1))⟨ν,f³⟩  (f centered).
std::vector<IdentityRow> moment_identity_checks(double alpha, double theta, const ProbabilityVector& nu,
                                                const Vector& f, const Vector& g, std::int64_t n, RngStream& rng);

}  // namespace gfv
