// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gdc
{

// xoshiro256++ stream, seeded by splitmix64 expansion of the 64-bit seed.
// A fixed, documented engine rather than std:: because the byte-exact output
// sequence is part of the reproducibility contract: std::normal_distribution
// is implementation-defined, so Gaussian samples are produced by an explicit
// Box-Muller transform instead. A plain counter-hash engine (splitmix64) was
// rejected after link-simulation validation: consuming its outputs in a fixed
// periodic pattern exposed joint structure between neighbouring outputs that
// inflated deep-tail error rates for some seeds, while xoshiro's state
// evolution decouples successive outputs from successive counter values.
class rng
{
  public:
    explicit rng(std::uint64_t seed)
    {
        for (auto &word : state_)
        {
            seed += 0x9E3779B97F4A7C15ull;
            std::uint64_t z = seed;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64()
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in (0, 1]: the +1 before scaling keeps log() in Box-Muller finite.
    double next_unit()
    {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the second sample of each pair is cached.
    double next_gaussian()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Uniform integer in [0, n) by rejection; n = 0 is undefined.
    std::uint64_t next_below(std::uint64_t n)
    {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do
        {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline constexpr std::uint64_t default_seed = 0x5EED600Dull;

// Stable sub-seed for a labelled stream (e.g. one SNR point of a sweep),
// so per-point results do not depend on sweep order or concurrency.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t tag)
{
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (tag + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Tag for a real-valued sweep coordinate, stable under formatting: the value
// is quantised to milli-units before hashing.
inline std::uint64_t subseed_tag(double value)
{
    const long long q = std::llround(value * 1000.0);
    return static_cast<std::uint64_t>(q);
}

} // namespace gdc
