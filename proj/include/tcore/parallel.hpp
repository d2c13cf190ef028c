#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace tcore {

/// Sums f(0) + ... + f(count-1). Each worker takes one contiguous chunk and
/// the partial sums are merged in chunk order, so the result does not depend
/// on scheduling.
template <class R, class F>
R parallel_sum(std::size_t count, int threads, R zero, F&& f)
{
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(count, 1));
    std::vector<R> partial(workers, zero);
    auto run = [&](std::size_t w) {
        const std::size_t lo = count * w / workers;
        const std::size_t hi = count * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) {
            partial[w] += f(i);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    R total = zero;
    for (auto& p : partial) {
        total += p;
    }
    return total;
}

}  // namespace tcore
