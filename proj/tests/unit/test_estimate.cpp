#include "gfv/estimate.hpp"

#include <doctest.h>

#include <cmath>

using namespace gfv;

TEST_CASE("mean accumulator matches the textbook formulas")
{
    MeanAccumulator acc;
    const double xs[] = {1e9 + 1.0, 1e9 + 2.0, 1e9 + 3.0, 1e9 + 4.0};
    for (double x : xs) acc.add(x);
    const EstimateWithError e = acc.result();
    CHECK(e.mean == doctest::Approx(1e9 + 2.5).epsilon(1e-15));
    // sample variance 5/3, SE sqrt(5/12)
    CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)).epsilon(1e-12));
    CHECK(e.n == 4);
}

TEST_CASE("merging accumulators equals one pass")
{
    MeanAccumulator a, b, all;
    for (int i = 0; i < 10; ++i) {
        const double x = std::sin(i);
        (i < 4 ? a : b).add(x);
        all.add(x);
    }
    a.merge(b);
    CHECK(a.result().mean == doctest::Approx(all.result().mean).epsilon(1e-14));
    CHECK(a.result().std_error == doctest::Approx(all.result().std_error).epsilon(1e-12));
}

TEST_CASE("ratio accumulator with unit weights reduces to the plain mean")
{
    RatioAccumulator r;
    MeanAccumulator m;
    for (int i = 0; i < 50; ++i) {
        const double x = std::cos(0.3 * i);
        r.add(x, 1.0);
        m.add(x);
    }
    CHECK(r.result().mean == doctest::Approx(m.result().mean).epsilon(1e-14));
    // delta-method SE uses n in place of n-1
    CHECK(r.result().std_error == doctest::Approx(m.result().std_error * std::sqrt(49.0 / 50.0)).epsilon(1e-10));
}

TEST_CASE("ratio accumulator is invariant under weight scaling")
{
    RatioAccumulator a, b;
    for (int i = 1; i <= 20; ++i) {
        a.add(i, 1.0 / i);
        b.add(i, 7.0 / i);
    }
    CHECK(a.result().mean == doctest::Approx(b.result().mean).epsilon(1e-14));
    CHECK(a.result().std_error == doctest::Approx(b.result().std_error).epsilon(1e-12));
}

TEST_CASE("batch means")
{
    SUBCASE("constant series has zero SE")
    {
        const EstimateWithError e = batch_means(Vector::Constant(300, 0.25));
        CHECK(e.mean == doctest::Approx(0.25));
        CHECK(e.std_error == 0.0);
    }
    SUBCASE("too short a series is rejected")
    {
        CHECK_THROWS_AS(batch_means(Vector::Constant(10, 1.0)), InsufficientPath);
    }
    SUBCASE("iid series: SE close to the naive one")
    {
        RngStream rng(5, 0);
        Vector x(30000);
        for (Index i = 0; i < x.size(); ++i) x[i] = rng.normal();
        const EstimateWithError e = batch_means(x);
        CHECK(std::abs(e.mean) < 4.0 / std::sqrt(30000.0));
        CHECK(e.std_error == doctest::Approx(1.0 / std::sqrt(30000.0)).epsilon(0.4));
    }
}

TEST_CASE("chunked Monte Carlo does not depend on the thread count")
{
    auto run = [](int threads) {
        set_thread_count(threads);
        RngStream rng(11, 3);
        return parallel_chunks<MeanAccumulator>(200000, rng, [](RngStream& s, std::int64_t n, MeanAccumulator& acc) {
                   for (std::int64_t i = 0; i < n; ++i) acc.add(s.uniform());
               })
            .result();
    };
    const EstimateWithError one = run(1);
    const EstimateWithError four = run(4);
    set_thread_count(0);
    CHECK(one.mean == four.mean);
    CHECK(one.std_error == four.std_error);
    CHECK(one.n == 200000);
    CHECK(one.within(0.5));
}

TEST_CASE("agreement helpers")
{
    const EstimateWithError a{1.0, 0.3, 10};
    const EstimateWithError b{2.0, 0.4, 10};
    CHECK(combined_se(a, b) == doctest::Approx(0.5));
    CHECK(agree(a, b));
    CHECK_FALSE(agree(a, b, 1.0));
    CHECK(a.within(2.19));
    CHECK_FALSE(a.within(2.3));
}
