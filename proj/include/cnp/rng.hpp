#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>

namespace cnp {

/// Seeded 64-bit generator shared by every stochastic choice of one run.
///
/// Bounded draws use rejection sampling on the raw engine output so that the
/// sequence of choices for a given seed does not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("Rng::below: empty range");
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform index into a non-empty container.
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(below(size)); }

    /// Uniform real in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    const T& pick(std::span<const T> items) {
        return items[index(items.size())];
    }

    /// Moves a uniform random `count`-subset of `items` to its front
    /// (partial Fisher-Yates).
    template <class T>
    void partial_shuffle(std::span<T> items, std::size_t count) {
        for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
            const std::size_t j = i + index(items.size() - i);
            std::swap(items[i], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cnp
