#include "tpkit/rng.hpp"

namespace tpkit {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t index) {
    return finalize(seed + (index + 1) * kGamma);
}

std::uint64_t SplitMix64::next() {
    return at(seed_, index_++);
}

std::uint64_t SplitMix64::nextInRange(std::uint64_t magnitude) {
    return 1 + next() % magnitude;
}

Rational SplitMix64::nextPositiveRational(std::uint64_t magnitude) {
    std::uint64_t p = nextInRange(magnitude);
    std::uint64_t q = nextInRange(magnitude);
    Rational r(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    r.canonicalize();
    return r;
}

long SplitMix64::nextSignedInt(std::uint64_t magnitude) {
    std::uint64_t span = 2 * magnitude + 1;
    return static_cast<long>(next() % span) - static_cast<long>(magnitude);
}

} // namespace tpkit
