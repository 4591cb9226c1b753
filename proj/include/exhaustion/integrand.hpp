#ifndef EXHAUSTION_INTEGRAND_HPP
#define EXHAUSTION_INTEGRAND_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace exhaustion {

/// Closed interval [a, b]. a == b is the degenerate case: every integral
/// over it is exactly zero. a > b is handled by the orientation rule in
/// integrate() (negate the [b, a] value).
struct Interval {
    double a = 0.0;
    double b = 0.0;

    double width() const { return b - a; }
    bool degenerate() const { return a == b; }
};

/// Real-valued integrand. `eval` must be deterministic and must not
/// mutate shared state: node evaluations within a refinement level may
/// run on several threads.
struct Integrand {
    std::function<double(double)> eval;
    std::string label;
    std::optional<Interval> known_domain;

    Integrand() = default;
    Integrand(std::function<double(double)> f, std::string name = {},
              std::optional<Interval> domain = std::nullopt)
        : eval(std::move(f)), label(std::move(name)), known_domain(domain) {}

    double operator()(double x) const { return eval(x); }
};

/// Thrown when an integrand sample comes back NaN or infinite. Carries
/// the offending node so the caller can report where evaluation failed.
class NonFiniteSampleError : public std::runtime_error {
public:
    NonFiniteSampleError(double node, double sample, std::string context)
        : std::runtime_error("non-finite sample " + std::to_string(sample) +
                             " at x = " + std::to_string(node) +
                             (context.empty() ? "" : " (" + context + ")")),
          node_(node),
          sample_(sample) {}

    double node() const { return node_; }
    double sample() const { return sample_; }

private:
    double node_;
    double sample_;
};

}  // namespace exhaustion

#endif
