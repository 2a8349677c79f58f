#pragma once

// Portable random streams. The standard <random> distributions are
// implementation-defined, so every draw used by the search goes through the
// helpers here and produces the same sequence on every platform.

#include <array>
#include <cstdint>
#include <limits>

namespace cribga {

/// SplitMix64 (Steele, Lea, Flood). Used for seeding and stream derivation.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept
        : state_(seed)
    {
    }

    constexpr std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna). Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit constexpr Rng(std::uint64_t seed) noexcept
    {
        SplitMix64 sm(seed);
        for (auto& s : s_) {
            s = sm.next();
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). bound must be > 0.
    /// Lemire's multiply-and-reject; unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        __uint128_t m = static_cast<__uint128_t>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<__uint128_t>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) noexcept { return uniform() < p; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

/// Independent sub-stream seed for (master, stream). Distinct stream ids give
/// unrelated seeds; the same pair always gives the same seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept
{
    SplitMix64 a(master);
    const std::uint64_t base = a.next();
    SplitMix64 b(base ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
    return b.next();
}

} // namespace cribga
