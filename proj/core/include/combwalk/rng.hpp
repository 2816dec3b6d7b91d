/**
 * Counter-based keyed random stream.
 *
 * Output at (master_seed, stream_id, counter) is a pure function of the
 * triple: streams can be replayed, split across walkers/replicates and
 * evaluated in any order without affecting results. The mixing core is a
 * chained splitmix64 finalizer over the three words.
 */

#ifndef COMBWALK_RNG_HPP
#define COMBWALK_RNG_HPP

#include <cmath>
#include <cstdint>

namespace combwalk {

/// splitmix64 finalizer (Steele/Lea/Flood); bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Keyed hash of three words; used as the stream output function.
constexpr std::uint64_t hash3(std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (b + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (c + 0x94d049bb133111ebULL));
    return h;
}

/// Derive a stream id from structured parts (experiment, walker, replicate).
constexpr std::uint64_t derive_stream_id(std::uint64_t experiment,
                                         std::uint64_t walker,
                                         std::uint64_t replicate) noexcept {
    return hash3(experiment, walker, replicate);
}

class RngStream {
public:
    constexpr RngStream() noexcept = default;
    constexpr RngStream(std::uint64_t master_seed, std::uint64_t stream_id,
                        std::uint64_t counter = 0) noexcept
        : master_seed_(master_seed), stream_id_(stream_id), counter_(counter) {}

    constexpr std::uint64_t next_u64() noexcept {
        return hash3(master_seed_, stream_id_, counter_++);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound); unbiased by rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v < threshold);
        return v % bound;
    }

    /// Standard normal via Box-Muller (consumes two uniforms).
    double next_normal() noexcept {
        double u1 = next_unit();
        const double u2 = next_unit();
        if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    constexpr std::uint64_t master_seed() const noexcept { return master_seed_; }
    constexpr std::uint64_t stream_id() const noexcept { return stream_id_; }
    constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t master_seed_ = 0;
    std::uint64_t stream_id_ = 0;
    std::uint64_t counter_ = 0;
};

/**
 * Geometric sample with P(k) = 2^{-k-1}, k = 0, 1, 2, ...
 * Inverse CDF on a single uniform: k = floor(-log2(u)), u in (0, 1],
 * clipped to 63 to stay inside integer range (mass beyond is ~2^-64).
 */
inline std::int64_t sample_geometric(RngStream& rng) noexcept {
    const double u = 1.0 - rng.next_unit();  // (0, 1]
    const auto k = static_cast<std::int64_t>(std::floor(-std::log2(u)));
    if (k < 0) return 0;
    return k > 63 ? 63 : k;
}

}  // namespace combwalk

#endif  // COMBWALK_RNG_HPP
