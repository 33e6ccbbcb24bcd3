#include "gfv/types.hpp"

#include <cmath>

namespace gfv {

namespace {

Vector from_list(std::initializer_list<double> values)
{
    Vector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

}  // namespace

FiniteMeasure::FiniteMeasure(Vector weights) : weights_(std::move(weights))
{
    require(weights_.size() >= 1, "a measure needs at least one type");
    for (Index i = 0; i < weights_.size(); ++i)
        require(std::isfinite(weights_[i]) && weights_[i] >= 0.0, "measure weights must be finite and nonnegative");
    total_ = weights_.sum();
}

FiniteMeasure::FiniteMeasure(std::initializer_list<double> weights) : FiniteMeasure(from_list(weights)) {}

ProbabilityVector FiniteMeasure::normalized() const
{
    require(!is_null(), "cannot normalize the null measure");
    return ProbabilityVector::normalize(weights_);
}

ProbabilityVector::ProbabilityVector(Vector weights) : weights_(std::move(weights))
{
    require(weights_.size() >= 1, "a probability vector needs at least one type");
    for (Index i = 0; i < weights_.size(); ++i)
        require(std::isfinite(weights_[i]) && weights_[i] >= 0.0, "probability weights must be nonnegative");
    require(std::abs(weights_.sum() - 1.0) <= 1e-12, "probability weights must sum to 1");
}

ProbabilityVector::ProbabilityVector(std::initializer_list<double> weights) : ProbabilityVector(from_list(weights)) {}

ProbabilityVector ProbabilityVector::normalize(Vector weights)
{
    const double s = weights.sum();
    require(s > 0.0 && std::isfinite(s), "cannot normalize a vector with nonpositive sum");
    weights /= s;
    return ProbabilityVector(std::move(weights));
}

}  // namespace gfv
