#pragma once

#include <cstdint>
#include <random>

namespace paircorr {

/// One step of SplitMix64; used to derive well-mixed seeds from small integers.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Reproducible uniform stream: std::mt19937_64 (whose output sequence is fixed
/// by the standard) seeded through SplitMix64. Only raw engine output is used,
/// never std:: distributions, whose algorithms vary between library vendors.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_state_(seed), engine_(derive(seed)) {}

    /// Independent child stream; the parent is not advanced.
    Rng split(std::uint64_t stream) const
    {
        std::uint64_t s = seed_state_ ^ (stream * 0xD1B54A32D192ED03ULL);
        return Rng(splitmix64(s));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t derive(std::uint64_t seed)
    {
        return splitmix64(seed);
    }

    std::uint64_t seed_state_;
    std::mt19937_64 engine_;
};

} // namespace paircorr
