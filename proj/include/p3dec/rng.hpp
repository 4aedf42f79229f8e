#pragma once

#include <cstdint>

namespace p3dec {

/// Seeded 64-bit generator with the splitmix64 update, fixed for the life of
/// the project so that seeds written in test fixtures stay valid:
///   state += 0x9e3779b97f4a7c15
///   z = state; z = (z ^ z>>30) * 0xbf58476d1ce4e5b9
///   z = (z ^ z>>27) * 0x94d049bb133111eb; return z ^ z>>31
/// Bounded draws use plain modulo; unit draws use the top 53 bits.
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// Value in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bool(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace p3dec
