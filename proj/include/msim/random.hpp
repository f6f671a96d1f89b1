#pragma once

#include <cstdint>

namespace msim {

/// Counter-based random source: every draw is a pure function of
/// (seed, stream, counter), so any evaluation order yields the same values.
///
/// The mixer is the SplitMix64 finalizer applied to a per-stream key offset
/// by counter * golden-gamma. Streams are keyed by hashing (seed, stream), so
/// distinct stream ids give unrelated sequences.
class RandomSource {
public:
    constexpr RandomSource(std::uint64_t seed = 0, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream), key_(derive_key(seed, stream)) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint64_t bits(std::uint64_t counter) const noexcept {
        return mix(key_ + (counter + 1) * kGamma);
    }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform(std::uint64_t counter) const noexcept {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n) for 0 < n < 2^53.
    std::uint64_t below(std::uint64_t counter, std::uint64_t n) const noexcept {
        return static_cast<std::uint64_t>(uniform(counter) * static_cast<double>(n));
    }

    /// Standard normal via Box-Muller on counters 2k and 2k+1 (cosine branch).
    double normal(std::uint64_t k) const noexcept;

    /// Independent child stream keyed by an additional id.
    RandomSource substream(std::uint64_t id) const noexcept {
        return RandomSource(key_, id);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) noexcept {
        return mix(mix(seed + kGamma) ^ (stream * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
};

}  // namespace msim
