#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace coopnoma {

template <class Result>
std::vector<Result> run_chunked(std::uint64_t n_trials, unsigned workers,
                                const std::function<Result(std::uint64_t, std::uint64_t)>& chunk_fn) {
    const std::uint64_t n_chunks = (n_trials + kTrialChunk - 1) / kTrialChunk;
    std::vector<Result> results(n_chunks);
    auto run_one = [&](std::uint64_t c) {
        const std::uint64_t begin = c * kTrialChunk;
        results[c] = chunk_fn(begin, std::min(n_trials, begin + kTrialChunk));
    };

    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), n_chunks));
    if (n_threads <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) run_one(c);
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                try {
                    for (std::uint64_t c = next++; c < n_chunks; c = next++) run_one(c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace coopnoma
