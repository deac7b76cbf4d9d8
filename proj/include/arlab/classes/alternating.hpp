#pragma once

// The alternating-horizons class over u_{m,n} = 0^m 1 0^n 1:
//   f(u_{m,n})               = alpha_{m,n}
//   f(u_{m,n} b 0^t)         = 0 for t < 2m - 2
//   f(u_{m,n} b 0^{2m-2})    = b
//   f(x)                     = 0 otherwise.
// alpha is a finite window m in [2, m_max], n in [0, n_max], 0 outside it.

#include "arlab/core/generation.hpp"
#include "arlab/util/rng.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::classes {

struct AlternatingParams {
    std::uint64_t m_max = 3;
    std::uint64_t n_max = 3;
    std::vector<Bit> alpha;  // row-major over (m - 2, n); empty means all zeros

    void validate() const {
        if (m_max < 2) throw std::invalid_argument("alternating: m_max must be >= 2");
        if (!alpha.empty() && alpha.size() != cells())
            throw std::invalid_argument("alternating: alpha table has the wrong size");
    }
    std::size_t cells() const { return static_cast<std::size_t>((m_max - 1) * (n_max + 1)); }

    Bit at(std::uint64_t m, std::uint64_t n) const {
        if (m < 2 || m > m_max || n > n_max || alpha.empty()) return 0;
        return alpha[static_cast<std::size_t>((m - 2) * (n_max + 1) + n)];
    }

    void set(std::uint64_t m, std::uint64_t n, Bit b) {
        if (alpha.empty()) alpha.assign(cells(), 0);
        if (m < 2 || m > m_max || n > n_max) throw std::out_of_range("alternating: cell outside window");
        alpha[static_cast<std::size_t>((m - 2) * (n_max + 1) + n)] = b;
    }

    std::string id() const {
        std::string s = "alt:";
        for (std::size_t i = 0; i < cells(); ++i) s += alpha.empty() ? '0' : static_cast<char>('0' + alpha[i]);
        return s;
    }
};

inline TokenString alternating_u(std::uint64_t m, std::uint64_t n) {
    return TokenString::zeros(m) + Bit{1} + TokenString::zeros(n) + Bit{1};
}

struct AlternatingForm {
    std::uint64_t m = 0, n = 0;
    std::optional<Bit> b;  // set for u b 0^t
    std::uint64_t t = 0;
};

// Matches u_{m,n} or u_{m,n} b 0^t with m >= 2 (any t).
inline std::optional<AlternatingForm> parse_alternating(const TokenString& x) {
    RunReader rd(x);
    AlternatingForm f;
    f.m = rd.take_all(0);
    if (f.m < 2 || !rd.take(1, 1)) return std::nullopt;
    f.n = rd.take_all(0);
    if (!rd.take(1, 1)) return std::nullopt;
    if (rd.done()) return f;
    f.b = rd.peek();
    rd.take(*f.b, 1);
    f.t = rd.take_all(0);
    if (!rd.done()) return std::nullopt;
    return f;
}

inline Bit alternating_value(const AlternatingParams& p, const TokenString& x) {
    const auto f = parse_alternating(x);
    if (!f) return 0;
    if (!f->b) return p.at(f->m, f->n);
    if (f->t == 2 * f->m - 2) return *f->b;
    return 0;
}

inline Generator alternating_member(const AlternatingParams& p) {
    p.validate();
    return Generator(p.id(), [p](const TokenString& x) { return alternating_value(p, x); });
}

inline AlternatingParams random_alpha(std::uint64_t m_max, std::uint64_t n_max, std::uint64_t seed) {
    AlternatingParams p{m_max, n_max, {}};
    rng::Stream s(seed, {0xa17});
    p.alpha.resize(p.cells());
    for (Bit& b : p.alpha) b = static_cast<Bit>(s.below(2));
    return p;
}

// Every u_{m,n} and u_{m,n} b 0^t with t <= 2m in the window.
inline std::vector<TokenString> alternating_special_instances(std::uint64_t m_max, std::uint64_t n_max) {
    std::vector<TokenString> out;
    for (std::uint64_t m = 2; m <= m_max; ++m)
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            const TokenString u = alternating_u(m, n);
            out.push_back(u);
            for (Bit b : {Bit{0}, Bit{1}})
                for (std::uint64_t t = 0; t <= 2 * m; ++t) out.push_back(u + b + TokenString::zeros(t));
        }
    return out;
}

}  // namespace arlab::classes
