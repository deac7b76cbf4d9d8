#pragma once

// The taxonomy class: a baseline generator f that, on 0^s 1 0^k 1 0^{s-k-1} z,
// emits bit |z|+1 of k - r(s), and single-point modifications f_{s,k} that
// emit 1 on 0^s 1 0^k.

#include "arlab/classes/rate.hpp"
#include "arlab/core/generation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::classes {

// Bit j+1 of a number is its j-th least significant bit.
inline constexpr bool kLeastSignificantBitFirst = true;

inline Bit binary_digit(std::uint64_t value, std::uint64_t j) {
    if (!kLeastSignificantBitFirst) throw std::logic_error("only least-significant-first order is implemented");
    return j >= 64 ? 0 : static_cast<Bit>((value >> j) & 1U);
}

struct TaxonomyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TaxonomyParams {
    RateFunction rate = quarter_log_rate();
    std::uint64_t s_max = 4096;

    std::uint64_t s_min() const { return rate.M0; }
    bool in_range(std::uint64_t s) const { return s >= s_min() && s <= s_max; }

    std::uint64_t k_min(std::uint64_t s) const { return rate(s); }
    std::uint64_t k_max(std::uint64_t s) const { return rate(s) + (std::uint64_t{1} << rate(s)) - 1; }
    bool in_K(std::uint64_t s, std::uint64_t k) const { return k >= k_min(s) && k <= k_max(s); }

    std::vector<std::uint64_t> K(std::uint64_t s) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t k = k_min(s); k <= k_max(s); ++k) out.push_back(k);
        return out;
    }

    // Every enumerated s must satisfy r(s) + 2^r(s) <= sqrt(s) <= s - 1.
    void validate() const {
        if (s_min() < 1 || s_max < s_min()) throw TaxonomyError("taxonomy: empty s range");
        for (std::uint64_t s = s_min(); s <= s_max; ++s) {
            const std::uint64_t r = rate(s);
            if (r >= 32) throw TaxonomyError("taxonomy: r(s) too large at s=" + std::to_string(s));
            const std::uint64_t top = r + (std::uint64_t{1} << r);
            if (top * top > s || s < 3)
                throw TaxonomyError("taxonomy: K_s bound r(s)+2^r(s) <= sqrt(s) <= s-1 fails at s=" + std::to_string(s));
        }
    }
};

inline TokenString taxonomy_point(std::uint64_t s, std::uint64_t k) {
    return TokenString::zeros(s) + Bit{1} + TokenString::zeros(k);
}

// 0^s 1 0^i
inline TokenString bucket_point(std::uint64_t s, std::uint64_t i) { return taxonomy_point(s, i); }

// If x = 0^s 1 0^i, returns (s, i).
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_bucket(const TokenString& x) {
    RunReader rd(x);
    const std::uint64_t s = rd.take_all(0);
    if (s == 0 || !rd.take(1, 1)) return std::nullopt;
    const std::uint64_t i = rd.take_all(0);
    if (!rd.done()) return std::nullopt;
    return std::make_pair(s, i);
}

inline Bit taxonomy_baseline_value(const TaxonomyParams& p, const TokenString& x) {
    RunReader rd(x);
    const std::uint64_t s = rd.take_all(0);
    if (!p.in_range(s) || !rd.take(1, 1)) return 0;
    const std::uint64_t k = rd.take_all(0);
    if (!p.in_K(s, k) || !rd.take(1, 1)) return 0;
    if (!rd.take(0, s - k - 1)) return 0;
    const std::uint64_t zlen = rd.remaining();
    if (zlen >= p.rate(s)) return 0;
    return binary_digit(k - p.rate(s), zlen);
}

inline Generator taxonomy_baseline(const TaxonomyParams& p) {
    p.validate();
    return Generator("tax:f", [p](const TokenString& x) { return taxonomy_baseline_value(p, x); });
}

inline std::string taxonomy_member_id(std::uint64_t s, std::uint64_t k) {
    return "tax:s=" + std::to_string(s) + ",k=" + std::to_string(k);
}

inline Generator taxonomy_member(const TaxonomyParams& p, std::uint64_t s, std::uint64_t k) {
    if (!p.in_range(s)) throw TaxonomyError("taxonomy_member: s=" + std::to_string(s) + " outside the enumerated range");
    if (!p.in_K(s, k))
        throw TaxonomyError("taxonomy_member: k=" + std::to_string(k) + " not in K_" + std::to_string(s));
    p.validate();
    const TokenString point = taxonomy_point(s, k);
    return Generator(taxonomy_member_id(s, k), [p, point](const TokenString& x) -> Bit {
        if (x == point) return 1;
        return taxonomy_baseline_value(p, x);
    });
}

// All f_{s,k} for the listed s values.
inline GeneratorList taxonomy_class(const TaxonomyParams& p, const std::vector<std::uint64_t>& s_values) {
    GeneratorList out;
    for (std::uint64_t s : s_values)
        for (std::uint64_t k : p.K(s)) out.push_back(taxonomy_member(p, s, k));
    return out;
}

// A_M = {0^M 1 0^i : 1 <= i <= r(M)}
inline std::vector<TokenString> taxonomy_shatter_set(const TaxonomyParams& p, std::uint64_t M) {
    std::vector<TokenString> out;
    for (std::uint64_t i = 1; i <= p.rate(M); ++i) out.push_back(bucket_point(M, i));
    return out;
}

struct ShatterWitness {
    std::uint64_t k = 0;
    std::vector<Bit> outputs;  // e2e(f_{M,k}, a_i, M) for i = 1..r(M)
};

// Encodes y as b (y_i is bit i), sets k = r(M) + b and checks e2e(f_{M,k}, a_i, M) = y_i.
inline ShatterWitness taxonomy_shatter_witness(const TaxonomyParams& p, std::uint64_t M, const std::vector<Bit>& y) {
    if (!p.in_range(M)) throw TaxonomyError("taxonomy_shatter_witness: M outside the enumerated range");
    if (y.size() != p.rate(M)) throw std::invalid_argument("taxonomy_shatter_witness: labeling must have length r(M)");
    std::uint64_t b = 0;
    for (std::uint64_t i = 0; i < y.size(); ++i) b |= std::uint64_t{y[i]} << i;
    ShatterWitness w;
    w.k = p.rate(M) + b;
    const Generator f = taxonomy_member(p, M, w.k);
    const auto A = taxonomy_shatter_set(p, M);
    for (std::size_t i = 0; i < A.size(); ++i) {
        w.outputs.push_back(e2e(f, A[i], M));
        if (w.outputs.back() != y[i])
            throw std::logic_error("taxonomy_shatter_witness: labeling not realized at i=" + std::to_string(i + 1));
    }
    return w;
}

}  // namespace arlab::classes
