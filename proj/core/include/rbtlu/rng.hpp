#ifndef RBTLU_RNG_HPP
#define RBTLU_RNG_HPP

#include <cmath>
#include <cstdint>

namespace rbtlu {

/// Seed for every random stream in the library. Identical seeds produce
/// bitwise-identical streams on every platform.
struct RngSeed {
    std::uint64_t value = 42;
};

/// xoshiro256++ (Blackman & Vigna), seeded through splitmix64.
///
/// The generator is fixed by this implementation, not by the platform:
/// all draws are derived from 64-bit integer arithmetic only, so a given
/// (seed, salt) pair yields the same stream everywhere. The `salt`
/// decorrelates streams that share a user-visible seed (e.g. the left and
/// right transforms of one solve).
class Rng {
public:
    explicit Rng(RngSeed seed, std::uint64_t salt = 0) {
        // splitmix64 over seed ^ f(salt) fills the four state words.
        std::uint64_t x = seed.value + 0x9e3779b97f4a7c15ULL * (salt + 1);
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
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

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform01_open_low() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform on [-1, 1).
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

    /// Standard normal via Box-Muller; consumes two draws per call.
    double normal() {
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform over {0, 1, ..., bound-1}; bound must be a small constant,
    /// the modulo bias is negligible for bound << 2^64.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

namespace rng_salt {
// Stream salts used across the library; fixed so results are reproducible.
inline constexpr std::uint64_t left_transform = 0x5542;   // "UB"
inline constexpr std::uint64_t right_transform = 0x5642;  // "VB"
inline constexpr std::uint64_t matrix = 0;
inline constexpr std::uint64_t rhs = 0x7268;  // "rh"
}  // namespace rng_salt

}  // namespace rbtlu

#endif
