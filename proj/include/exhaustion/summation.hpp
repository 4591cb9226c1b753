#ifndef EXHAUSTION_SUMMATION_HPP
#define EXHAUSTION_SUMMATION_HPP

#include <cmath>
#include <cstdint>
#include <functional>

namespace exhaustion {

/// Neumaier variant of Kahan summation: carries a running roundoff
/// correction so million-term level sums stay accurate to a few ulp.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double initial) : sum_(initial) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    // Merge another compensated partial; deterministic as long as the
    // merge order is fixed by the caller.
    void add(const CompensatedSum& other) {
        add(other.sum_);
        comp_ += other.comp_;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {

// Result of summing values sample(first..last-1) over one fixed chunk.
struct ChunkSum {
    CompensatedSum acc;
    std::int64_t first_nonfinite = -1;  // index of first non-finite sample, -1 if none
};

// Fixed chunk width for the node-sum reduction. The reduction shape
// depends only on the index count, never on the thread count, so a run
// with EXH_THREADS=8 is bit-identical to a serial one.
inline constexpr std::int64_t kChunkWidth = std::int64_t(1) << 16;

/// Sums sample(i) for i in [0, count) with per-chunk compensated
/// accumulation and an in-order compensated merge of chunk partials.
/// `threads` <= 1 runs serially; either way the result is identical.
/// Non-finite samples are reported via `first_nonfinite` (lowest index).
ChunkSum sum_indexed(std::int64_t count,
                     const std::function<double(std::int64_t)>& sample,
                     int threads);

/// Resolves an effective thread count: `requested` == 0 consults the
/// EXH_THREADS environment variable (unset or 0 means serial); a set
/// EXH_THREADS also caps explicit requests.
int resolve_threads(int requested);

}  // namespace detail
}  // namespace exhaustion

#endif
