#ifndef NSMP_RNG_HPP
#define NSMP_RNG_HPP

#include <cstdint>

namespace nsmp {

/// SplitMix64. Fixed published constants, so sampled realizations are
/// reproducible from a seed on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [1, bound] by multiply-shift; deterministic across platforms.
    std::uint64_t uniform(std::uint64_t bound) {
        return 1 + static_cast<std::uint64_t>(
                       (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace nsmp

#endif
