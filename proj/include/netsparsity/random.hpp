#pragma once

#include <cstdint>
#include <random>

namespace netsparsity {

/// Seeded generator for sweeps and property tests. The engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; bounded
/// draws use rejection sampling instead of std::uniform_int_distribution,
/// whose mapping differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace netsparsity
