#pragma once

#include <cstdint>

namespace liegen {

/// 64-bit linear congruential generator (Knuth MMIX constants).
/// Used only for sampled oracles and test data; seed is always explicit.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform in [lo, hi]. Modulo bias is irrelevant at the ranges used here.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>((next() >> 16) % span);
    }

    bool coin() { return (next() >> 32) & 1u; }

private:
    std::uint64_t state_;
};

} // namespace liegen
