#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace gfv {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

class QuadratureFailure : public std::runtime_error {
public:
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

class SizeLimit : public std::length_error {
public:
    explicit SizeLimit(const std::string& what) : std::length_error(what) {}
};

class InsufficientPath : public std::runtime_error {
public:
    explicit InsufficientPath(const std::string& what) : std::runtime_error(what) {}
};

class SingularSystem : public std::runtime_error {
public:
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

class RateOverflow : public std::runtime_error {
public:
    explicit RateOverflow(const std::string& what) : std::runtime_error(what) {}
};

class DivergentIntegral : public std::domain_error {
public:
    explicit DivergentIntegral(const std::string& what) : std::domain_error(what) {}
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw InvalidParameter(message);
}

inline void require_alpha(double alpha)
{
    require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)");
}

class ProbabilityVector;

/// Nonnegative weights over the type labels 0..k-1.
class FiniteMeasure {
public:
    FiniteMeasure() = default;
    explicit FiniteMeasure(Vector weights);
    FiniteMeasure(std::initializer_list<double> weights);

    const Vector& weights() const { return weights_; }
    double total() const { return total_; }
    Index size() const { return weights_.size(); }
    double operator[](Index i) const { return weights_[i]; }
    bool is_null() const { return total_ <= 0.0; }

    /// m / m(E); throws on the null measure.
    ProbabilityVector normalized() const;

private:
    Vector weights_;
    double total_ = 0.0;
};

/// Weights on the simplex, validated to sum to one within 1e-12.
class ProbabilityVector {
public:
    ProbabilityVector() = default;
    explicit ProbabilityVector(Vector weights);
    ProbabilityVector(std::initializer_list<double> weights);

    /// Divides by the sum; for vectors that are on the simplex up to rounding.
    static ProbabilityVector normalize(Vector weights);

    const Vector& weights() const { return weights_; }
    Index size() const { return weights_.size(); }
    double operator[](Index i) const { return weights_[i]; }

    /// ⟨μ, f⟩
    double pair(const Vector& f) const { return weights_.dot(f); }

private:
    Vector weights_;
};

inline FiniteMeasure operator*(double theta, const ProbabilityVector& nu)
{
    return FiniteMeasure(theta * nu.weights());
}

}  // namespace gfv
