#pragma once

// Two stochastic generators g_sigma, sigma in {-1, +1}: the next bit is the
// current last bit (0 on the empty string) flipped with probability
// 1/2 + sigma/4.

#include "arlab/core/token_string.hpp"
#include "arlab/util/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace arlab::stochastic {

using Rational = boost::multiprecision::cpp_rational;

inline void check_sigma(int sigma) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("sigma must be -1 or +1");
}

inline Bit last_bit(const TokenString& x) { return x.empty() ? 0 : x.back(); }

// Probability that Z = 1, i.e. that the next bit flips the last one.
inline Rational flip_prob(int sigma) {
    check_sigma(sigma);
    return Rational(1, 2) + Rational(sigma, 4);
}

inline Rational next_prob(int sigma, const TokenString& x) {
    const Rational p = flip_prob(sigma);
    return last_bit(x) == 0 ? p : 1 - p;
}

// Probability that the M-th generated bit from the empty string is 1.
inline Rational e2e_one_prob(int sigma, std::uint64_t M) {
    check_sigma(sigma);
    Rational pow = 1;
    for (std::uint64_t m = 0; m < M; ++m) pow *= Rational(-sigma, 2);
    return (1 - pow) / 2;
}

// The same probability through q_{m+1} = p + (1 - 2p) q_m with q_0 = 0.
inline Rational e2e_one_prob_recursive(int sigma, std::uint64_t M) {
    const Rational p = flip_prob(sigma);
    Rational q = 0;
    for (std::uint64_t m = 0; m < M; ++m) q = p + (1 - 2 * p) * q;
    return q;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Final bit of one M-step generation from the empty string.
inline Bit sample_final_bit(int sigma, std::uint64_t M, std::uint64_t seed, std::uint64_t trial) {
    const double p = to_double(flip_prob(sigma));
    Bit b = 0;
    for (std::uint64_t m = 0; m < M; ++m)
        if (rng::to_unit(rng::mix(seed, {trial, m, 0xF1})) < p) b ^= 1;
    return b;
}

inline double delta_of(std::uint64_t M) { return std::ldexp(1.0, -static_cast<int>(M) - 1); }

// KL(Ber(1/2 - delta) || Ber(1/2 + delta)).
inline double kl_symmetric(double delta) { return 2 * delta * std::log((1 + 2 * delta) / (1 - 2 * delta)); }

inline double bh_lower_bound(std::uint64_t M, std::uint64_t t) {
    if (M % 2 == 0) throw std::invalid_argument("bh_lower_bound: M must be odd");
    if (t < 1) throw std::invalid_argument("bh_lower_bound: t must be >= 1");
    return 0.25 * std::exp(-static_cast<double>(t - 1) * kl_symmetric(delta_of(M)));
}

inline std::uint64_t separation_horizon(std::uint64_t M) {
    const double d = delta_of(M);
    const auto T = static_cast<std::uint64_t>(std::floor(1.0 / (32 * d * d)));
    return T < 1 ? 1 : T;
}

// Prior-averaged regret floor sum_{t <= T} 2 delta * bh(t).
inline double regret_floor(std::uint64_t M, std::uint64_t T) {
    double sum = 0;
    for (std::uint64_t t = 1; t <= T; ++t) sum += 2 * delta_of(M) * bh_lower_bound(M, t);
    return sum;
}

}  // namespace arlab::stochastic
