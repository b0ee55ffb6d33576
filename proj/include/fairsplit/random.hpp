#pragma once

#include <cstdint>
#include <random>

namespace fairsplit {

/// Algorithm identifier reported alongside seeded results.
inline constexpr const char* kGeneratorName = "mt19937_64";

/// Seeded 64-bit generator plus the few draws the library needs. Draws use
/// only raw engine output so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound], by rejection.
    std::uint64_t uniform_int(std::uint64_t bound) {
        if (bound == UINT64_MAX)
            return next();
        const std::uint64_t range = bound + 1;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
        std::uint64_t r = next();
        while (r >= limit)
            r = next();
        return r % range;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace fairsplit
