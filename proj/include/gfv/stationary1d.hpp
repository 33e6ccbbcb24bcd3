#pragma once

#include "gfv/estimate.hpp"
#include "gfv/quadrature.hpp"
#include "gfv/rng.hpp"
#include "gfv/types.hpp"

#include <functional>
#include <vector>

namespace gfv {

struct ModelParams1D {
    double alpha;
    double c1;
    double c2;

    void validate() const
    {
        require_alpha(alpha);
        require(c1 > 0.0 && c2 > 0.0 && std::isfinite(c1) && std::isfinite(c2), "c1 and c2 must be positive");
    }
    double theta() const { return c1 + c2; }
};

/// A point of [0,1] carrying an importance weight.
struct WeightedSample {
    double value;
    double weight;
};

/// One draw from the tilted-stable representation: y ~ Beta(c1,c2),
/// Y1 ~ stable(α,y), Y2 ~ stable(α,1-y); value Y1/(Y1+Y2), weight (Y1+Y2)^{-α}.
WeightedSample draw_P_tilted(const ModelParams1D& p, RngStream& rng);

/// One draw from the Linnik representation: Z_i ~ Linnik(α, c_i);
/// value Z1/(Z1+Z2), weight (Z1+Z2)^{-α}. Needs c1 + c2 > 1.
WeightedSample draw_P_linnik(const ModelParams1D& p, RngStream& rng);

std::vector<WeightedSample> sample_P_tilted(const ModelParams1D& p, std::int64_t n, RngStream& rng);
std::vector<WeightedSample> sample_P_linnik(const ModelParams1D& p, std::int64_t n, RngStream& rng);

enum class Representation { tilted, linnik };

/// Self-normalized estimates of E[h_j(x)] under the stationary law, one per
/// test function, from n draws spread over chunked streams.
std::vector<EstimateWithError> stationary_expectations(const ModelParams1D& p, Representation rep,
                                                       const std::vector<std::function<double(double)>>& h,
                                                       std::int64_t n, RngStream& rng);

/// Estimates of E[x^j], j = 1..orders.
std::vector<EstimateWithError> stationary_moments(const ModelParams1D& p, Representation rep, int orders,
                                                  std::int64_t n, RngStream& rng);

/// Stationary moments m_1..m_{n_max} from the triangular system E[A x^n] = 0.
Vector moment_recursion(const ModelParams1D& p, int n_max);

/// Γ(α+1) E_{α,y}[(Y1+Y2)^{-α}; Y1/(Y1+Y2) <= x] by quadrature of the ratio density.
double ratio_cdf_y(double x, double y, double alpha, const QuadratureSpec& q = {});

/// Monte Carlo of E_{α,y}[(tY1+Y2)^{-α}].
EstimateWithError tilted_ratio_expectation(double t, double y, double alpha, std::int64_t n, RngStream& rng);

/// (1/Γ(α+1)) / (1 + (t^α - 1) y)
double tilted_ratio_closed_form(double t, double y, double alpha);

}  // namespace gfv
