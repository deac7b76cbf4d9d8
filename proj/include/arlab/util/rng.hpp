#pragma once

// Counter-based randomness. Every draw is a pure function of a master seed and
// an integer key tuple, so serial and parallel runs agree bit-for-bit and the
// results do not depend on the standard library's distribution code.

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace arlab::rng {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t mix(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return h;
}

// Uniform double in [0, 1) from the top 53 bits.
inline constexpr double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Bernoulli(1/den) from a 64-bit word: exact up to 2^-64.
inline constexpr bool one_in(std::uint64_t word, std::uint64_t den) {
    return word < std::numeric_limits<std::uint64_t>::max() / den;
}

// Stateful stream keyed by (seed, keys...); satisfies UniformRandomBitGenerator.
class Stream {
public:
    using result_type = std::uint64_t;

    Stream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) : state_(mix(seed, keys)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64(state_);
    }

    double uniform() { return to_unit((*this)()); }
    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, n); n > 0. Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n) {
        while (true) {
            const unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * n;
            const auto low = static_cast<std::uint64_t>(m);
            if (low >= (0 - n) % n) return static_cast<std::uint64_t>(m >> 64);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace arlab::rng
