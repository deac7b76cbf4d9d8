#pragma once

// The hard random class. Z = {0^i : 1 <= i <= M^2}; Z_1 = {0^{jM}}; Z_0 = Z \ Z_1.
// Member a labels x in Z_1 with 1 and x in Z_0 with 0, except that each label
// flips to the minority value independently with probability minority_prob.
// Outside Z every member outputs 0. Labels are counter-based draws keyed by
// (seed, a, |x|), so members never need to be materialized.

#include "arlab/classes/rules.hpp"
#include "arlab/core/generation.hpp"
#include "arlab/dims/class_table.hpp"
#include "arlab/util/rng.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::classes {

struct HardClassParams {
    std::uint64_t d = 1;
    std::uint64_t M = 8;
    std::uint64_t N = 0;  // 0 selects min(M^{10d}, budget)
    std::uint64_t minority_num = 1;
    std::uint64_t minority_den = 0;  // 0 selects 1/M
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;  // cap on N and on N * |Z| for materialized tables
};

class HardClass {
public:
    explicit HardClass(HardClassParams p) : p_(p) {
        if (p_.M < 2) throw std::invalid_argument("hard class: M must be >= 2");
        if (p_.d < 1) throw std::invalid_argument("hard class: d must be >= 1");
        if (p_.minority_den == 0) {
            p_.minority_num = 1;
            p_.minority_den = p_.M;
        }
        if (p_.minority_num > p_.minority_den) throw std::invalid_argument("hard class: minority probability above 1");
        if (p_.N == 0) p_.N = default_size(p_);
        if (p_.N > p_.budget)
            throw std::length_error("hard class: N=" + std::to_string(p_.N) + " exceeds budget " +
                                    std::to_string(p_.budget));
        // Bernoulli(num/den) as a comparison against floor(2^64 num / den).
        const unsigned __int128 scaled = (static_cast<unsigned __int128>(1) << 64) * p_.minority_num / p_.minority_den;
        threshold_ = scaled > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
        always_ = p_.minority_num == p_.minority_den;
    }

    static std::uint64_t default_size(const HardClassParams& p) {
        unsigned __int128 n = 1;
        for (std::uint64_t e = 0; e < 10 * p.d; ++e) {
            n *= p.M;
            if (n > p.budget) return p.budget;
        }
        return static_cast<std::uint64_t>(n);
    }

    const HardClassParams& params() const { return p_; }
    std::uint64_t members() const { return p_.N; }
    std::uint64_t M() const { return p_.M; }
    std::uint64_t z_size() const { return p_.M * p_.M; }

    Rational minority_prob() const { return Rational(p_.minority_num) / p_.minority_den; }

    bool in_Z(const TokenString& x) const { return x.all_zero() && x.size() >= 1 && x.size() <= z_size(); }
    bool in_Z1(const TokenString& x) const { return in_Z(x) && x.size() % p_.M == 0; }

    Bit majority(std::uint64_t i) const { return i % p_.M == 0 ? 1 : 0; }

    // f_a(0^i) for 1 <= i <= M^2.
    Bit label(std::uint64_t a, std::uint64_t i) const {
        const bool flip = always_ || rng::mix(p_.seed, {a, i}) < threshold_;
        return flip ? static_cast<Bit>(1 - majority(i)) : majority(i);
    }

    Bit operator()(std::uint64_t a, const TokenString& x) const { return in_Z(x) ? label(a, x.size()) : 0; }

    Generator generator(std::uint64_t a) const {
        if (a >= p_.N) throw std::out_of_range("hard class: member index out of range");
        HardClass self = *this;
        return Generator("hard:" + std::to_string(a), [self, a](const TokenString& x) { return self(a, x); });
    }

    GeneratorList generators() const {
        GeneratorList out;
        for (std::uint64_t a = 0; a < p_.N; ++a) out.push_back(generator(a));
        return out;
    }

    // Pr[f(x) = 1] for a fresh member.
    Rational prob_one(const TokenString& x) const {
        if (!in_Z(x)) return Rational(0);
        return majority(x.size()) == 1 ? 1 - minority_prob() : minority_prob();
    }

    Rational rule_probability(const Rule& R) const {
        return classes::rule_probability(R, [this](const TokenString& x) { return prob_one(x); });
    }

    std::uint64_t count_satisfying(const Rule& R) const {
        std::uint64_t c = 0;
        for (std::uint64_t a = 0; a < p_.N; ++a)
            if (R.holds([&](const TokenString& x) { return (*this)(a, x); })) ++c;
        return c;
    }

    // The table over Z.
    dims::BinaryTable table() const {
        if (p_.N * z_size() > p_.budget) throw std::length_error("hard class: table exceeds budget");
        std::vector<TokenString> pool;
        for (std::uint64_t i = 1; i <= z_size(); ++i) pool.push_back(TokenString::zeros(i));
        std::vector<std::string> ids;
        std::vector<std::vector<Bit>> rows;
        for (std::uint64_t a = 0; a < p_.N; ++a) {
            ids.push_back("hard:" + std::to_string(a));
            std::vector<Bit> row;
            for (std::uint64_t i = 1; i <= z_size(); ++i) row.push_back(label(a, i));
            rows.push_back(std::move(row));
        }
        return dims::BinaryTable(pool, ids, rows);
    }

    // CSV with columns member,instance,label; instances are written as 0^i.
    void write_csv(std::ostream& os) const {
        os << "member,instance,label\n";
        for (std::uint64_t a = 0; a < p_.N; ++a)
            for (std::uint64_t i = 1; i <= z_size(); ++i)
                os << "hard:" << a << ",0^" << i << ',' << int(label(a, i)) << '\n';
    }

private:
    HardClassParams p_;
    std::uint64_t threshold_ = 0;
    bool always_ = false;
};

// x^{(j)} = 0^{(j-1)M+1}
inline TokenString hard_instance(std::uint64_t j, std::uint64_t M) {
    if (j < 1) throw std::invalid_argument("hard_instance: j must be >= 1");
    return TokenString::zeros((j - 1) * M + 1);
}

struct GreenRed {
    TokenString green;
    std::vector<TokenString> reds;
};

// green = 0^{M-1} 1; reds = 0^{q-1} 1 0^{M-q} for q in [M-1].
inline GreenRed green_red_branches(std::uint64_t /*j*/, std::uint64_t M) {
    if (M < 2) throw std::invalid_argument("green_red_branches: M must be >= 2");
    GreenRed out;
    out.green = TokenString::zeros(M - 1) + Bit{1};
    for (std::uint64_t q = 1; q <= M - 1; ++q)
        out.reds.push_back(TokenString::zeros(q - 1) + Bit{1} + TokenString::zeros(M - q));
    return out;
}

// Members following the green branch from x^{(j)}.
inline Rule green_rule(std::uint64_t j, std::uint64_t M) {
    return path_rule(hard_instance(j, M), green_red_branches(j, M).green);
}

// Members following some red branch from x^{(j)}.
inline Rule red_rule(std::uint64_t j, std::uint64_t M) {
    std::vector<Rule> parts;
    for (const TokenString& r : green_red_branches(j, M).reds) parts.push_back(path_rule(hard_instance(j, M), r));
    return Rule::any_of(std::move(parts));
}

// Q_u: green from x^{(j)} where u_j = 1, some red where u_j = 0.
inline Rule labeling_rule(const std::vector<Bit>& u, std::uint64_t M) {
    std::vector<Rule> parts;
    for (std::size_t j = 0; j < u.size(); ++j) parts.push_back(u[j] ? green_rule(j + 1, M) : red_rule(j + 1, M));
    if (parts.empty()) return Rule::truth();
    return Rule::all_of(std::move(parts));
}

}  // namespace arlab::classes
