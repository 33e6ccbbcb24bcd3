#include "gfv/estimate.hpp"

#include <algorithm>
#include <thread>

namespace gfv {

namespace {
int g_threads = 0;
}

void set_thread_count(int threads)
{
    require(threads >= 0, "thread count must be nonnegative");
    g_threads = threads;
}

int thread_count()
{
    if (g_threads > 0) return g_threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

void MeanAccumulator::merge(const MeanAccumulator& o)
{
    if (o.n_ == 0) return;
    if (n_ == 0) {
        *this = o;
        return;
    }
    // re-express o's sums about this shift
    const double d = o.shift_ - shift_;
    const double on = static_cast<double>(o.n_);
    s2_ += o.s2_ + 2.0 * d * o.s1_ + on * d * d;
    s1_ += o.s1_ + on * d;
    n_ += o.n_;
}

EstimateWithError MeanAccumulator::result() const
{
    require(n_ >= 2, "an estimate needs at least two samples");
    const double n = static_cast<double>(n_);
    const double m = s1_ / n;
    const double var = std::max(0.0, (s2_ - n * m * m) / (n - 1.0));
    return {shift_ + m, std::sqrt(var / n), n_};
}

void RatioAccumulator::merge(const RatioAccumulator& o)
{
    n_ += o.n_;
    sw_ += o.sw_;
    swh_ += o.swh_;
    sww_ += o.sww_;
    swwh_ += o.swwh_;
    swwhh_ += o.swwhh_;
}

EstimateWithError RatioAccumulator::result() const
{
    require(n_ >= 2 && sw_ > 0.0, "a weighted estimate needs two samples and positive weight");
    const double m = swh_ / sw_;
    const double ss = std::max(0.0, swwhh_ - 2.0 * m * swwh_ + m * m * sww_);
    return {m, std::sqrt(ss) / sw_, n_};
}

EstimateWithError batch_means(const Vector& series, int batches, int min_batches)
{
    const Index n = series.size();
    if (n < min_batches) throw InsufficientPath("too few observations for batch means");
    const Index b = std::min<Index>(batches, n);
    const Index len = n / b;
    // the leading remainder is dropped so every batch has the same length
    const Index start = n - b * len;
    Vector means(b);
    for (Index j = 0; j < b; ++j) means[j] = series.segment(start + j * len, len).mean();
    const double m = means.mean();
    const double var = (means.array() - m).square().sum() / static_cast<double>(b - 1);
    return {m, std::sqrt(var / static_cast<double>(b)), static_cast<std::int64_t>(n)};
}

}  // namespace gfv
