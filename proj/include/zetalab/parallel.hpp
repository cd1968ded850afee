#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "zetalab/summation.hpp"

namespace zetalab {

// Global partition count used by all partitioned reductions.  Results are
// deterministic for a fixed partition count (chunks are always combined in
// index order); reports record the count so runs can be reproduced.
void set_partition_count(int n);
int partition_count();

// Splits [begin, end) into at most partition_count() contiguous chunks and
// runs work(chunk_index, lo, hi) for each, possibly on worker threads.
// Returns one R per chunk, in chunk order, so callers can combine them
// deterministically.
template <typename R>
std::vector<R> partitioned_map(std::int64_t begin, std::int64_t end,
                               const std::function<R(std::int64_t, std::int64_t)>& work) {
    const std::int64_t n = end - begin;
    if (n <= 0) return {};

    const int parts = static_cast<int>(std::min<std::int64_t>(partition_count(), n));
    std::vector<R> out(parts);
    if (parts == 1) {
        out[0] = work(begin, end);
        return out;
    }
    std::vector<std::thread> workers;
    workers.reserve(parts);
    for (int p = 0; p < parts; ++p) {
        const std::int64_t lo = begin + n * p / parts;
        const std::int64_t hi = begin + n * (p + 1) / parts;
        workers.emplace_back([&out, &work, p, lo, hi] { out[p] = work(lo, hi); });
    }
    for (auto& w : workers) w.join();
    return out;
}

// Chunked compensated sum with in-order combination.
inline double partitioned_sum(std::int64_t begin, std::int64_t end,
                              const std::function<NeumaierSum(std::int64_t, std::int64_t)>& chunk_sum) {
    NeumaierSum total;
    for (const auto& part : partitioned_map<NeumaierSum>(begin, end, chunk_sum))
        total.add(part);
    return total.value();
}

}  // namespace zetalab
