#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace gfv {

template <class Acc, class Body>
Acc parallel_chunks(std::int64_t n, RngStream& rng, Body body, std::int64_t chunk)
{
    require(n >= 0 && chunk > 0, "sample count must be nonnegative");
    const std::uint64_t base = rng();
    const std::int64_t chunks = (n + chunk - 1) / chunk;
    std::vector<Acc> parts(static_cast<std::size_t>(chunks));

    auto run = [&](std::int64_t c) {
        RngStream stream(base, static_cast<std::uint64_t>(c));
        const std::int64_t count = std::min(chunk, n - c * chunk);
        body(stream, count, parts[static_cast<std::size_t>(c)]);
    };

    const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), chunks));
    if (workers <= 1) {
        for (std::int64_t c = 0; c < chunks; ++c) run(c);
    } else {
        std::atomic<std::int64_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::int64_t c = next++; c < chunks; c = next++) {
                    try {
                        run(c);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    Acc total{};
    for (const auto& p : parts) total.merge(p);
    return total;
}

}  // namespace gfv
