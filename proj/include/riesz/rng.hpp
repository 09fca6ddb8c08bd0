#ifndef RIESZ_RNG_HPP
#define RIESZ_RNG_HPP

#include <cstdint>
#include <string_view>

namespace riesz {

/// SplitMix64: a counter-based generator with a fixed output function, so a
/// stream is fully determined by its 64-bit key and draw index. Chosen for
/// bit-exact reproducibility across platforms and trial-parallel execution.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform integer in [0, n) via the multiply-shift reduction
    /// (deterministic; the O(n/2^64) bias is irrelevant at test scale).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// FNV-1a over a string, used to key per-property streams.
    static std::uint64_t hash_name(std::string_view name) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : name) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    /// Independent stream for (suite seed, property, trial); streams never
    /// overlap between trials, so trials may run in any order or in parallel.
    static SplitMix64 stream(std::uint64_t seed, std::string_view property,
                             std::uint64_t trial) {
        std::uint64_t k = mix(seed ^ 0x6a09e667f3bcc909ull);
        k = mix(k ^ hash_name(property));
        k = mix(k ^ trial);
        return SplitMix64(k);
    }

private:
    std::uint64_t state_;
};

} // namespace riesz

#endif
