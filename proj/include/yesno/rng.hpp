// rng.hpp -- seedable, platform-independent randomness for benchmarks.

#pragma once

#include <cstdint>
#include <random>

#include "yesno/core.hpp"

namespace yesno {

/// mt19937_64 with rejection-sampled bounded draws. The engine's output
/// sequence is pinned by the standard, and rejection sampling avoids the
/// implementation-defined std::uniform_int_distribution, so identical seeds
/// give identical secrets on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

private:
    std::mt19937_64 engine_;
};

/// Uniform repetition-free code: Fisher-Yates prefix of (1..k), first n kept.
inline Code random_code(const GameParams& params, SeededRng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(params.colors));
    for (int c = 1; c <= params.colors; ++c) pool[static_cast<std::size_t>(c - 1)] = c;
    for (int i = 0; i < params.positions; ++i) {
        int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(params.colors - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(params.positions));
    return Code(std::move(pool), params);
}

}  // namespace yesno
