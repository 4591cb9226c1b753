#include "exhaustion/summation.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace exhaustion::detail {

namespace {

ChunkSum sum_range(std::int64_t first, std::int64_t last,
                   const std::function<double(std::int64_t)>& sample) {
    ChunkSum out;
    for (std::int64_t i = first; i < last; ++i) {
        const double v = sample(i);
        if (!std::isfinite(v)) {
            out.first_nonfinite = i;
            return out;
        }
        out.acc.add(v);
    }
    return out;
}

}  // namespace

int resolve_threads(int requested) {
    int env_cap = -1;  // -1: unset
    if (const char* s = std::getenv("EXH_THREADS")) {
        env_cap = std::atoi(s);
        if (env_cap < 0) env_cap = 0;
    }
    int n;
    if (requested <= 0) {
        n = (env_cap > 0) ? env_cap : 1;
    } else {
        n = (env_cap >= 0) ? std::min(requested, std::max(env_cap, 1))
                           : requested;
    }
    return std::max(n, 1);
}

ChunkSum sum_indexed(std::int64_t count,
                     const std::function<double(std::int64_t)>& sample,
                     int threads) {
    if (count <= 0) return {};

    const std::int64_t nchunks = (count + kChunkWidth - 1) / kChunkWidth;
    const int workers =
        static_cast<int>(std::min<std::int64_t>(resolve_threads(threads), nchunks));

    if (workers <= 1 || nchunks == 1) {
        // Same chunk boundaries as the parallel path so the reduction
        // shape (and therefore every bit of the result) matches.
        ChunkSum total;
        for (std::int64_t c = 0; c < nchunks; ++c) {
            const std::int64_t lo = c * kChunkWidth;
            const std::int64_t hi = std::min(count, lo + kChunkWidth);
            ChunkSum part = sum_range(lo, hi, sample);
            if (part.first_nonfinite >= 0) {
                total.first_nonfinite = part.first_nonfinite;
                return total;
            }
            total.acc.add(part.acc);
        }
        return total;
    }

    std::vector<ChunkSum> parts(static_cast<std::size_t>(nchunks));
    std::atomic<std::int64_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::int64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::int64_t lo = c * kChunkWidth;
            const std::int64_t hi = std::min(count, lo + kChunkWidth);
            parts[static_cast<std::size_t>(c)] = sum_range(lo, hi, sample);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    ChunkSum total;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const ChunkSum& part = parts[static_cast<std::size_t>(c)];
        if (part.first_nonfinite >= 0) {
            // Lowest offending index wins, deterministically.
            total.first_nonfinite = part.first_nonfinite;
            return total;
        }
        total.acc.add(part.acc);
    }
    return total;
}

}  // namespace exhaustion::detail
