#ifndef M0N_PARALLEL_HPP
#define M0N_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace m0n {

// Splits [0, total) into `jobs` contiguous chunks, maps f(begin, end) -> R
// on each, and returns the results in chunk order. Chunk results are merged
// by the caller by concatenation, so output is independent of the job count.
template <typename R, typename F>
std::vector<R> chunked_map(std::size_t total, int jobs, F&& f) {
    if (jobs < 1) jobs = 1;
    if (static_cast<std::size_t>(jobs) > total) jobs = total == 0 ? 1 : static_cast<int>(total);
    std::vector<R> results(jobs);
    if (jobs == 1) {
        results[0] = f(std::size_t{0}, total);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    const std::size_t base = total / jobs, extra = total % jobs;
    std::size_t begin = 0;
    for (int t = 0; t < jobs; ++t) {
        std::size_t len = base + (static_cast<std::size_t>(t) < extra ? 1 : 0);
        std::size_t end = begin + len;
        threads.emplace_back([&results, &f, t, begin, end] { results[t] = f(begin, end); });
        begin = end;
    }
    for (auto& th : threads) th.join();
    return results;
}

}  // namespace m0n

#endif
