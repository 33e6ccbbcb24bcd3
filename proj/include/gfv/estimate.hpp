#pragma once

#include "gfv/rng.hpp"
#include "gfv/types.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace gfv {

/// A Monte Carlo answer: point estimate, standard error, sample count.
struct EstimateWithError {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n = 0;

    /// |mean - target| <= k·SE
    bool within(double target, double k = 4.0) const { return std::abs(mean - target) <= k * std_error; }
};

/// SE of the difference of two independent estimates.
inline double combined_se(const EstimateWithError& a, const EstimateWithError& b)
{
    return std::hypot(a.std_error, b.std_error);
}

inline bool agree(const EstimateWithError& a, const EstimateWithError& b, double k = 4.0)
{
    return std::abs(a.mean - b.mean) <= k * combined_se(a, b);
}

/// Sample mean with the usual SE. Values are shifted by the first
/// observation to limit cancellation in the second moment.
class MeanAccumulator {
public:
    void add(double x)
    {
        if (n_ == 0) shift_ = x;
        const double y = x - shift_;
        ++n_;
        s1_ += y;
        s2_ += y * y;
    }

    void merge(const MeanAccumulator& o);
    EstimateWithError result() const;
    std::int64_t count() const { return n_; }

private:
    std::int64_t n_ = 0;
    double shift_ = 0.0;
    double s1_ = 0.0;
    double s2_ = 0.0;
};

/// Self-normalized importance-sampling mean Σw h / Σw with delta-method SE
/// sqrt(Σ w²(h - mean)²) / Σw.
class RatioAccumulator {
public:
    void add(double h, double w)
    {
        ++n_;
        sw_ += w;
        swh_ += w * h;
        sww_ += w * w;
        swwh_ += w * w * h;
        swwhh_ += w * w * h * h;
    }

    void merge(const RatioAccumulator& o);
    EstimateWithError result() const;
    std::int64_t count() const { return n_; }
    double weight_sum() const { return sw_; }

private:
    std::int64_t n_ = 0;
    double sw_ = 0.0;
    double swh_ = 0.0;
    double sww_ = 0.0;
    double swwh_ = 0.0;
    double swwhh_ = 0.0;
};

/// Mean of a correlated series with SE from `batches` contiguous batch means.
/// Throws InsufficientPath when fewer than `min_batches` observations exist.
EstimateWithError batch_means(const Vector& series, int batches = 30, int min_batches = 20);

/// Worker count used by the chunked Monte Carlo loops; 0 means hardware concurrency.
void set_thread_count(int threads);
int thread_count();

/// Runs `body(rng, count, acc)` over fixed-size chunks of n samples. Chunk c
/// owns RngStream(base, c) where base is drawn from `rng`, and partial
/// accumulators merge in chunk order, so the result does not depend on the
/// number of threads.
template <class Acc, class Body>
Acc parallel_chunks(std::int64_t n, RngStream& rng, Body body, std::int64_t chunk = 1 << 16);

}  // namespace gfv

#include "gfv/estimate_impl.hpp"
