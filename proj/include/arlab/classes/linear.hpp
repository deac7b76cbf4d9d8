#pragma once

// Autoregressive linear thresholds f_{w,b}(x) = 1[sum_{i<=min(d,|x|)} w[-i] x[-i] + b >= 0]
// in exact rational arithmetic, and the latch embedding.

#include "arlab/classes/rules.hpp"
#include "arlab/core/generation.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace arlab::classes {

struct LinearGen {
    std::vector<Rational> w;  // w[d-1] multiplies the last bit of x
    Rational b;

    std::size_t d() const { return w.size(); }

    std::string id() const {
        std::string s = "lin:w=(";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
        return s + "),b=" + b.str();
    }
};

inline Rational linear_score(const LinearGen& g, const TokenString& x) {
    if (g.w.empty()) throw std::invalid_argument("linear_eval: d must be >= 1");
    Rational sum = g.b;
    const std::uint64_t n = x.size();
    const std::uint64_t window = std::min<std::uint64_t>(g.d(), n);
    for (std::uint64_t i = 1; i <= window; ++i)
        if (x[n - i] == 1) sum += g.w[g.d() - i];
    return sum;
}

inline Bit linear_eval(const LinearGen& g, const TokenString& x) { return linear_score(g, x) >= 0 ? 1 : 0; }

inline Generator as_generator(const LinearGen& g) {
    if (g.w.empty()) throw std::invalid_argument("LinearGen: d must be >= 1");
    return Generator(g.id(), [g](const TokenString& x) { return linear_eval(g, x); });
}

struct LatchEmbedding {
    LinearGen gen;
    Rational L, U, B, A;
};

// For f_{v,c} on {0,1}^m: w = (v, B, 2A), b = c - B with L, U the extreme
// values of <v,z> + c, B = max(0, U) + 1 and A = B - L + 1.
inline LatchEmbedding latch_embed(const std::vector<Rational>& v, const Rational& c) {
    if (v.empty()) throw std::invalid_argument("latch_embed: m must be >= 1");
    Rational lo = c, hi = c;
    for (const Rational& vi : v) {
        if (vi < 0) lo += vi;
        else hi += vi;
    }
    LatchEmbedding e;
    e.L = lo;
    e.U = hi;
    e.B = (hi > 0 ? hi : Rational(0)) + 1;
    e.A = e.B - e.L + 1;
    e.gen.w = v;
    e.gen.w.push_back(e.B);
    e.gen.w.push_back(2 * e.A);
    e.gen.b = c - e.B;
    return e;
}

inline std::vector<Rational> rationals(const std::vector<long long>& xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

// Truth table of a threshold on {0,1}^d, bit z set when f(z) = 1 and z read
// as a d-bit string with its first bit most significant.
inline std::uint64_t truth_table(const LinearGen& g) {
    const std::size_t d = g.d();
    if (d > 6) throw std::length_error("truth_table: d too large");
    std::uint64_t t = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
        TokenString z;
        for (std::size_t i = 0; i < d; ++i) z.push_back(static_cast<Bit>((code >> (d - 1 - i)) & 1));
        if (linear_eval(g, z)) t |= std::uint64_t{1} << code;
    }
    return t;
}

// One representative per distinct threshold function on {0,1}^d, found on the
// integer grid |w_i| <= W, |b| <= d W + 1.
inline std::vector<LinearGen> enumerate_thresholds(std::size_t d, long long W) {
    if (d < 1 || d > 5) throw std::length_error("enumerate_thresholds: d out of range");
    std::vector<LinearGen> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<long long> w(d, -W);
    const long long bmax = static_cast<long long>(d) * W + 1;
    while (true) {
        for (long long b = -bmax; b <= bmax; ++b) {
            std::uint64_t t = 0;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
                long long score = b;
                for (std::size_t i = 0; i < d; ++i)
                    if ((code >> (d - 1 - i)) & 1) score += w[i];
                if (score >= 0) t |= std::uint64_t{1} << code;
            }
            if (seen.insert(t).second) out.push_back(LinearGen{rationals(w), Rational(b)});
        }
        std::size_t i = 0;
        while (i < d && w[i] == W) w[i++] = -W;
        if (i == d) break;
        ++w[i];
    }
    return out;
}

// Grid bound that reaches every threshold function for d <= 4.
inline long long default_weight_bound(std::size_t d) { return d <= 2 ? 1 : (d == 3 ? 2 : 3); }

}  // namespace arlab::classes
