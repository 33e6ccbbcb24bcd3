#pragma once

#include "gfv/quadrature.hpp"
#include "gfv/types.hpp"

#include <Eigen/Core>

#include <cmath>
#include <functional>

namespace gfv {

/// (a)_b = Γ(a+b)/Γ(a). Exact product for small integer b, log-gamma otherwise.
double pochhammer(double a, double b);

/// A left side computed one way and a right side computed another.
struct IdentityCheck {
    double lhs;
    double rhs;
    double gap() const { return std::abs(lhs - rhs); }
};

/// ∫B_{θ1,θ2}(du)(au+b)^{-θ1-θ2} against (a+b)^{-θ1} b^{-θ2}.
IdentityCheck markov_krein_1d(double a, double b, double theta1, double theta2, const QuadratureSpec& q = {});

/// ∫B_{1-α,1+α}(du)/((au+b)(a'u+b)) against [(a+b)^α-(a'+b)^α]/(α(a-a')b^{1+α}).
IdentityCheck lemma21_ii(double a, double aprime, double b, double alpha, const QuadratureSpec& q = {});

/// ψ(t,λ) = e^{-t/α} λ / [1 + (1-e^{-t}) λ^α]^{1/α}, the flow of
/// ∂_t ψ = -(ψ^{1+α} + ψ)/α with ψ(0,λ) = λ.
template <typename Scalar>
Scalar psi_semigroup(Scalar t, Scalar lambda, Scalar alpha)
{
    using std::exp;
    using std::expm1;
    using std::log1p;
    using std::pow;
    if (lambda == Scalar(0)) return Scalar(0);
    const Scalar decay = -expm1(-t);
    return exp(-t / alpha) * lambda * exp(-log1p(decay * pow(lambda, alpha)) / alpha);
}

/// V_t f, componentwise ψ(t, f(r)).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> v_flow(typename Derived::Scalar t,
                                                                   const Eigen::MatrixBase<Derived>& f,
                                                                   typename Derived::Scalar alpha)
{
    using Scalar = typename Derived::Scalar;
    return f.unaryExpr([&](Scalar x) { return psi_semigroup<Scalar>(t, x, alpha); });
}

/// t ↦ ∫P(dx)(1+tx)^{-α} for a law P on [0,1].
struct StieltjesTransform {
    double alpha;
    std::function<double(double)> evaluator;

    double operator()(double t) const { return evaluator(t); }
};

/// S_α(t) = ∫B_{c1,c2}(dy)/(1+((1+t)^α-1)y), the transform of the stationary law.
double closed_form_S(double t, double alpha, double c1, double c2, const QuadratureSpec& q = {});

StieltjesTransform stationary_transform(double alpha, double c1, double c2, const QuadratureSpec& q = {});

/// Left side of the stationarity ODE
///   ((1+t)^α-1)/α (1+t) S'' + [(c1+1+1/α)((1+t)^α-1) + c1+c2] S' + αc1(1+t)^{α-1} S
/// with fourth-order central differences.
double ode_residual_2_8(const StieltjesTransform& S, double t, double alpha, double c1, double c2);

/// Residual of u(1+u)T'' + [(c1+c2)+(c1+2)u]T' + c1 T at u > 0, where
/// T(u) = S((1+u)^{1/α}-1).
double ode_residual_2_11(const StieltjesTransform& S, double u, double alpha, double c1, double c2);

/// |∫P(dx)(1+tx)^{-α} - ∫B_{1,c1+c2-1}(dy)[1+((1+t)^α-1)y]^{-c1}|, both by quadrature.
double identity_2_15_gap(double t, double alpha, double c1, double c2, const QuadratureSpec& q = {});

}  // namespace gfv
