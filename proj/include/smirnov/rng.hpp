#ifndef SMIRNOV_RNG_HPP
#define SMIRNOV_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace smirnov
{

inline constexpr const char* kRngName = "splitmix64-split/xoshiro256**";

inline std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * xoshiro256** seeded through splitmix64. Independent streams are split off
 * deterministically from (seed, stream, substream), so a trial's draws do
 * not depend on scheduling.
 */
class Rng
{
public:
    explicit Rng(std::uint64_t seed) noexcept
    {
        std::uint64_t sm = seed;
        for (auto& w : s_)
            w = splitmix64(sm);
    }

    static Rng split(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0) noexcept
    {
        std::uint64_t sm = seed;
        std::uint64_t h = splitmix64(sm);
        sm = h ^ (stream * 0xD1B54A32D192ED03ULL);
        h = splitmix64(sm);
        sm = h ^ (substream * 0x8CB92BA72F3D8DD7ULL);
        return Rng(splitmix64(sm));
    }

    std::uint64_t next() noexcept
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

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi) noexcept
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    double angle() noexcept { return 2.0 * std::numbers::pi * uniform(); }

    /// Uniform by area in the closed disk of the given radius.
    std::complex<double> disk(double radius = 1.0) noexcept
    {
        const double r = radius * std::sqrt(uniform());
        return std::polar(r, angle());
    }

    std::complex<double> unit() noexcept { return std::polar(1.0, angle()); }

    /// Uniform by area in rmin <= |z| <= rmax.
    std::complex<double> annulus(double rmin, double rmax) noexcept
    {
        const double r = std::sqrt(rmin * rmin + (rmax * rmax - rmin * rmin) * uniform());
        return std::polar(r, angle());
    }

    double normal() noexcept
    {
        // Box-Muller; one value per call keeps the stream position simple.
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4]{};
};

} // namespace smirnov

#endif
