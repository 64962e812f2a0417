#ifndef APOLLONET_RNG_HPP
#define APOLLONET_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace apollonet {

/// Deterministic random stream: the same 64-bit seed produces the same
/// sequence on every platform. Bounded draws use rejection sampling, so
/// they are exactly uniform (no modulo bias). Multi-run experiments give
/// each run its own stream, derived as base seed + run index.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    static RngStream for_run(std::uint64_t base_seed, std::uint64_t run_index) {
        return RngStream(base_seed + run_index);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound).
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("RngStream::bounded: bound must be positive");
        // accept only the largest prefix of [0, 2^64) that divides evenly into bound
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;  // algorithm pinned by the standard, portable output
};

}  // namespace apollonet

#endif
