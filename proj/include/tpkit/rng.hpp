#ifndef TPKIT_RNG_HPP
#define TPKIT_RNG_HPP

#include <cstdint>

#include "tpkit/rational.hpp"

namespace tpkit {

// SplitMix64 with draws keyed by (seed, draw index):
//   value(i) = finalize(seed + (i + 1) * 0x9E3779B97F4A7C15)
// so the t-th draw is a pure function of the seed and t, reproducible
// across implementations and independent of scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next();
    // Uniform in [1, magnitude].
    std::uint64_t nextInRange(std::uint64_t magnitude);
    // p/q with p, q uniform in [1, magnitude]; consumes two draws.
    Rational nextPositiveRational(std::uint64_t magnitude);
    // Uniform in [-magnitude, magnitude]; consumes one draw.
    long nextSignedInt(std::uint64_t magnitude);

    std::uint64_t drawsConsumed() const { return index_; }

    static std::uint64_t at(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t seed_;
    std::uint64_t index_ = 0;
};

} // namespace tpkit

#endif
