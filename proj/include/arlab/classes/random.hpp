#pragma once

// Seeded random finite classes and pools for property checks.

#include "arlab/core/generation.hpp"
#include "arlab/util/rng.hpp"

#include <string>
#include <unordered_set>
#include <vector>

namespace arlab::classes {

inline TokenString random_string(rng::Stream& s, std::uint64_t max_len) {
    TokenString x;
    const std::uint64_t n = s.below(max_len + 1);
    for (std::uint64_t i = 0; i < n; ++i) x.push_back(static_cast<Bit>(s.below(2)));
    return x;
}

// A total generator whose output on x is a hash bit of (seed, member, x).
inline Generator hashed_generator(std::uint64_t seed, std::uint64_t member) {
    return Generator("h" + std::to_string(member), [seed, member](const TokenString& x) -> Bit {
        return static_cast<Bit>(rng::mix(seed, {member, x.hash()}) & 1U);
    });
}

inline GeneratorList random_class(std::uint64_t seed, std::size_t members) {
    GeneratorList cls;
    for (std::size_t m = 0; m < members; ++m) cls.push_back(hashed_generator(seed, m));
    return cls;
}

// Distinct strings of length <= max_len; size must not exceed 2^{max_len+1} - 1.
inline std::vector<TokenString> random_pool(rng::Stream& s, std::size_t size, std::uint64_t max_len) {
    if (max_len < 62 && size >= (std::uint64_t{1} << (max_len + 1)))
        throw std::invalid_argument("random_pool: not enough distinct strings");
    std::vector<TokenString> pool;
    std::unordered_set<TokenString> seen;
    while (pool.size() < size) {
        TokenString x = random_string(s, max_len);
        if (seen.insert(x).second) pool.push_back(x);
    }
    return pool;
}

}  // namespace arlab::classes
