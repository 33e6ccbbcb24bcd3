#include "gfv/analytic.hpp"

namespace gfv {

namespace {

// Central differences of order four for the first two derivatives.
struct Derivatives {
    double f0, f1, f2;
};

Derivatives differentiate(const std::function<double(double)>& f, double x, double h)
{
    const double fm2 = f(x - 2.0 * h);
    const double fm1 = f(x - h);
    const double f0 = f(x);
    const double fp1 = f(x + h);
    const double fp2 = f(x + 2.0 * h);
    return {f0, (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h),
            (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)};
}

// Relative step. A t·eps^{1/3} step amplifies rounding in S'' far past
// the residual floor; a few percent of t keeps rounding and h^4 truncation small.
double fd_step(double x) { return 0.02 * x; }

}  // namespace

double pochhammer(double a, double b)
{
    require(a > 0.0 && a + b > 0.0, "pochhammer needs a > 0 and a + b > 0");
    if (b >= 0.0 && b <= 64.0 && b == std::floor(b)) {
        double p = 1.0;
        for (int i = 0; i < static_cast<int>(b); ++i) p *= a + i;
        return p;
    }
    return std::exp(std::lgamma(a + b) - std::lgamma(a));
}

IdentityCheck markov_krein_1d(double a, double b, double theta1, double theta2, const QuadratureSpec& q)
{
    require(b > 0.0 && a + b > 0.0, "need b > 0 and a + b > 0");
    require(theta1 > 0.0 && theta2 > 0.0, "theta parameters must be positive");
    const double s = theta1 + theta2;
    const double lhs =
        integrate_beta([&](double u, double) { return std::pow(a * u + b, -s); }, theta1, theta2, q);
    const double rhs = std::pow(a + b, -theta1) * std::pow(b, -theta2);
    return {lhs, rhs};
}

IdentityCheck lemma21_ii(double a, double aprime, double b, double alpha, const QuadratureSpec& q)
{
    require_alpha(alpha);
    require(b > 0.0 && a + b > 0.0 && aprime + b > 0.0, "need b, a+b, a'+b > 0");
    require(a != aprime, "a and a' must differ");
    const double lhs = integrate_beta([&](double u, double) { return 1.0 / ((a * u + b) * (aprime * u + b)); },
                                      1.0 - alpha, 1.0 + alpha, q);
    const double rhs = (std::pow(a + b, alpha) - std::pow(aprime + b, alpha)) /
                       (alpha * (a - aprime) * std::pow(b, 1.0 + alpha));
    return {lhs, rhs};
}

double closed_form_S(double t, double alpha, double c1, double c2, const QuadratureSpec& q)
{
    require_alpha(alpha);
    require(c1 > 0.0 && c2 > 0.0, "c1 and c2 must be positive");
    require(t >= 0.0, "t must be nonnegative");
    if (t == 0.0) return 1.0;
    const double z = std::expm1(alpha * std::log1p(t));
    return integrate_beta([&](double y, double) { return 1.0 / (1.0 + z * y); }, c1, c2, q);
}

StieltjesTransform stationary_transform(double alpha, double c1, double c2, const QuadratureSpec& q)
{
    return {alpha, [=](double t) { return closed_form_S(t, alpha, c1, c2, q); }};
}

double ode_residual_2_8(const StieltjesTransform& S, double t, double alpha, double c1, double c2)
{
    require(t > 0.0, "t must be positive");
    const Derivatives d = differentiate(S.evaluator, t, fd_step(t));
    const double w = std::expm1(alpha * std::log1p(t));
    return w / alpha * (1.0 + t) * d.f2 + ((c1 + 1.0 + 1.0 / alpha) * w + c1 + c2) * d.f1 +
           alpha * c1 * std::pow(1.0 + t, alpha - 1.0) * d.f0;
}

double ode_residual_2_11(const StieltjesTransform& S, double u, double alpha, double c1, double c2)
{
    require(u > 0.0, "u must be positive");
    auto T = [&](double v) { return S(std::expm1(std::log1p(v) / alpha)); };
    const Derivatives d = differentiate(T, u, fd_step(u));
    return u * (1.0 + u) * d.f2 + ((c1 + c2) + (c1 + 2.0) * u) * d.f1 + c1 * d.f0;
}

double identity_2_15_gap(double t, double alpha, double c1, double c2, const QuadratureSpec& q)
{
    require(c1 + c2 > 1.0, "the beta representation needs c1 + c2 > 1");
    const double lhs = closed_form_S(t, alpha, c1, c2, q);
    if (t == 0.0) return std::abs(lhs - 1.0);
    const double z = std::expm1(alpha * std::log1p(t));
    const double rhs =
        integrate_beta([&](double y, double) { return std::pow(1.0 + z * y, -c1); }, 1.0, c1 + c2 - 1.0, q);
    return std::abs(lhs - rhs);
}

}  // namespace gfv
