#include "arlab/classes.hpp"
#include "arlab/dims.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace arlab;
using namespace arlab::classes;
using namespace testsupport;

namespace {

TaxonomyParams small_taxonomy(std::uint64_t s_max = 4096) {
    TaxonomyParams p;
    p.rate = quarter_log_rate(256);
    p.s_max = s_max;
    return p;
}

// Fourier-Motzkin feasibility of {a . x + c >= 0} over the rationals.
struct Ineq {
    std::vector<Rational> a;
    Rational c;
};

bool fm_feasible(std::vector<Ineq> sys, std::size_t vars) {
    for (std::size_t v = 0; v < vars; ++v) {
        std::vector<Ineq> pos, neg, rest;
        for (auto& q : sys) {
            if (q.a[v] > 0) pos.push_back(q);
            else if (q.a[v] < 0) neg.push_back(q);
            else rest.push_back(q);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Ineq r;
                const Rational sp = p.a[v], sn = -n.a[v];
                r.a.resize(vars);
                for (std::size_t k = 0; k < vars; ++k) r.a[k] = p.a[k] * sn + n.a[k] * sp;
                r.c = p.c * sn + n.c * sp;
                rest.push_back(r);
            }
        sys = std::move(rest);
    }
    for (const auto& q : sys)
        if (q.c < 0) return false;
    return true;
}

// f: {0,1}^d -> {0,1} given as a truth table is a threshold function iff
// w.z + b >= 0 on ones and w.z + b <= -1 on zeros is feasible.
bool separable(std::uint64_t table, std::size_t d) {
    std::vector<Ineq> sys;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
        Ineq q;
        q.a.resize(d + 1);
        const bool one = (table >> code) & 1;
        for (std::size_t i = 0; i < d; ++i) q.a[i] = ((code >> (d - 1 - i)) & 1) ? (one ? 1 : -1) : 0;
        q.a[d] = one ? 1 : -1;
        q.c = one ? 0 : -1;
        sys.push_back(q);
    }
    return fm_feasible(sys, d + 1);
}

}  // namespace

TEST_CASE("rate functions", "[classes]") {
    const RateFunction r = quarter_log_rate(256);
    CHECK(r(255) == 1);
    CHECK(r(256) == 2);
    CHECK(r(4096) == 3);
    const RateCheck rc = check_rate(r, 3000);
    CHECK(rc.ok());
    CHECK_FALSE(check_rate(constant_rate(3, 16), 100).sub_logarithmic);
    CHECK_THROWS(rate_by_name("nope"));
}

TEST_CASE("taxonomy baseline and members", "[classes]") {
    const TaxonomyParams p = small_taxonomy();
    CHECK_NOTHROW(p.validate());
    const Generator f = taxonomy_baseline(p);
    CHECK(f(TokenString("0110")) == 0);
    CHECK(f(TokenString()) == 0);
    // r(s) = 2, k = r(s) + 2 encodes 2 = binary 10: bit 1 is 0, bit 2 is 1.
    const std::uint64_t s = 300, k = 4;
    const TokenString head = taxonomy_point(s, k) + Bit{1} + TokenString::zeros(s - k - 1);
    CHECK(f(head) == 0);
    CHECK(f(head + Bit{0}) == 1);
    CHECK(f(head + Bit{1}) == 1);
    CHECK(f(head + TokenString("00")) == 0);
    // k = r(s) encodes zero.
    const TokenString head0 = taxonomy_point(s, 2) + Bit{1} + TokenString::zeros(s - 3);
    CHECK(f(head0) == 0);
    CHECK(f(head0 + Bit{1}) == 0);

    const Generator g = taxonomy_member(p, s, k);
    CHECK(g(taxonomy_point(s, k)) == 1);
    CHECK(g(taxonomy_point(s, k + 1)) == f(taxonomy_point(s, k + 1)));
    CHECK(f(taxonomy_point(s, k)) == 0);
    CHECK_THROWS_AS(taxonomy_member(p, s, 1), TaxonomyError);
    CHECK_THROWS_AS(taxonomy_member(p, s, 6), TaxonomyError);
    CHECK_THROWS_AS(taxonomy_member(p, 100, 2), TaxonomyError);

    TaxonomyParams bad;
    bad.rate = constant_rate(3, 20);
    bad.s_max = 200;
    try {
        bad.validate();
        FAIL("expected rejection");
    } catch (const TaxonomyError& e) {
        CHECK(std::string(e.what()).find("s=20") != std::string::npos);
    }
}

TEST_CASE("taxonomy chain of thought on a_i", "[classes]") {
    const TaxonomyParams p = small_taxonomy();
    const std::uint64_t M = 256;
    for (std::uint64_t k : p.K(M)) {
        const Generator g = taxonomy_member(p, M, k);
        for (std::uint64_t i = 1; i <= p.rate(M); ++i) {
            const TokenString c = cot(g, bucket_point(M, i), M);
            TokenString expect = TokenString::zeros(k - i) + Bit{1} + TokenString::zeros(M - k - 1);
            for (std::uint64_t j = 0; j < i; ++j) expect.push_back(binary_digit(k - p.rate(M), j));
            CHECK(c == expect);
        }
    }
}

TEST_CASE("taxonomy shatter witness", "[classes]") {
    const TaxonomyParams p = small_taxonomy();
    const std::uint64_t M = 256;
    REQUIRE(p.rate(M) == 2);
    std::set<std::uint64_t> ks;
    for (int code = 0; code < 4; ++code) {
        const std::vector<Bit> y{static_cast<Bit>(code & 1), static_cast<Bit>((code >> 1) & 1)};
        const ShatterWitness w = taxonomy_shatter_witness(p, M, y);
        CHECK(w.outputs == y);
        ks.insert(w.k);
    }
    CHECK(ks.size() == 4);
    CHECK(taxonomy_shatter_witness(p, M, {0, 0}).k == 2);
    CHECK(taxonomy_shatter_witness(p, M, {1, 1}).k == 2 + 4 - 1);
    const auto A = taxonomy_shatter_set(p, M);
    const dims::BinaryTable et = dims::e2e_table(taxonomy_class(p, {M}), A, M);
    CHECK(dims::vc_dim(et) == 2);
}

TEST_CASE("taxonomy second-mistake characterization", "[classes]") {
    const TaxonomyParams p = small_taxonomy();
    for (std::uint64_t M : {1, 2, 3, 4, 5, 6, 7, 9}) {
        const std::uint64_t s = std::max<std::uint64_t>(256, 10 * M);
        for (std::uint64_t k : p.K(s)) {
            const Generator g = taxonomy_member(p, s, k);
            for (std::uint64_t i = 0; i <= k + 1; ++i)
                CHECK((e2e(g, bucket_point(s, i), M) == 1) == (M + i == k + 1));
        }
    }
}

TEST_CASE("taxonomy window has base dimension one", "[classes]") {
    const TaxonomyParams p = small_taxonomy();
    const GeneratorList cls = taxonomy_class(p, {256, 257, 300});
    std::vector<TokenString> pool;
    for (std::uint64_t s : {256, 257, 300})
        for (std::uint64_t k : p.K(s)) pool.push_back(taxonomy_point(s, k));
    pool.push_back(TokenString("0"));
    CHECK(dims::littlestone_dim(dims::base_table(cls, pool)) == 1);
}

TEST_CASE("rules", "[classes]") {
    const TokenString x("01");
    const Generator g = copy_last_bit();
    CHECK(Rule::atom(x, g(x)).holds_for(g));
    CHECK(rule_filter({g, constant_generator(0)}, Rule::atom(x, 0) && Rule::atom(x, 1)).empty());
    CHECK(prefix_path_rule(x, TokenString("11"), 0).kind() == Rule::Kind::True);
    for (std::uint64_t M = 1; M <= 4; ++M) CHECK(path_rule(x, cot(g, x, M)).holds_for(g));
    const Generator h = table_generator("h", {{TokenString(""), 0}, {TokenString("0"), 1}});
    CHECK(cot(h, TokenString(), 2) == TokenString("01"));
    CHECK_FALSE(path_rule(TokenString(), TokenString("00")).holds_for(h));
    CHECK((Rule::atom(x, 1) || Rule::atom(TokenString("1"), 0)).independent_of(TokenString("0")));
    CHECK_FALSE(Rule::atom(x, 1).independent_of(x));
    // Half-half labels: Pr[(a,1) or (b,1)] = 3/4.
    const Rational p = rule_probability(Rule::atom(TokenString("0"), 1) || Rule::atom(TokenString("1"), 1),
                                        [](const TokenString&) { return Rational(1, 2); });
    CHECK(p == Rational(3, 4));
}

TEST_CASE("hard class mechanics", "[classes]") {
    HardClassParams hp;
    hp.M = 8;
    hp.N = 20000;
    hp.seed = 7;
    const HardClass F(hp);
    CHECK(F.minority_prob() == Rational(1, 8));
    const Generator g0 = F.generator(0);
    CHECK(g0(TokenString("1")) == 0);
    CHECK(g0(TokenString::zeros(65)) == 0);
    CHECK(g0(TokenString()) == 0);
    CHECK(F.generator(3)(TokenString::zeros(5)) == F.label(3, 5));

    const double p = 1.0 - 1.0 / 8;
    std::uint64_t ones = 0;
    for (std::uint64_t a = 0; a < F.members(); ++a) ones += F.label(a, 8);
    const double frac = double(ones) / F.members();
    CHECK(std::abs(frac - p) <= 4 * std::sqrt(p * (1 - p) / F.members()));

    const GreenRed gr = green_red_branches(1, 4);
    CHECK(gr.green == TokenString("0001"));
    CHECK(gr.reds == std::vector<TokenString>{TokenString("1000"), TokenString("0100"), TokenString("0010")});

    // Closed forms: green (1 - 1/M)^M, red_q (1 - 1/M)^{q-1} / M.
    const Rational q = Rational(7, 8);
    Rational green(1);
    for (int i = 0; i < 8; ++i) green *= q;
    CHECK(F.rule_probability(green_rule(1, 8)) == green);
    Rational red_union(0), pw(1);
    for (int qi = 1; qi <= 7; ++qi) {
        red_union += pw / 8;
        pw *= q;
    }
    CHECK(F.rule_probability(red_rule(2, 8)) == red_union);
    CHECK(red_union == 1 - pw);
    CHECK(F.rule_probability(labeling_rule({1, 0}, 8)) == green * red_union);

    // Following green gives e2e 1, following a red gives e2e 0.
    for (std::uint64_t a = 0; a < 2000; ++a) {
        const Generator g = F.generator(a);
        for (std::uint64_t j = 1; j <= 2; ++j) {
            if (green_rule(j, 8).holds_for(g)) CHECK(e2e(g, hard_instance(j, 8), 8) == 1);
            if (red_rule(j, 8).holds_for(g)) CHECK(e2e(g, hard_instance(j, 8), 8) == 0);
        }
    }
    std::ostringstream csv;
    HardClassParams tiny = hp;
    tiny.N = 2;
    HardClass(tiny).write_csv(csv);
    CHECK(csv.str().rfind("member,instance,label\nhard:0,0^1,", 0) == 0);
    HardClassParams huge = hp;
    huge.N = 0;
    huge.budget = 1000;
    CHECK(HardClass(huge).members() == 1000);
    huge.N = 5000;
    CHECK_THROWS_AS(HardClass(huge), std::length_error);
}

TEST_CASE("linear thresholds", "[classes]") {
    CHECK(linear_eval({rationals({1}), Rational(0)}, TokenString("0")) == 1);
    const LinearGen g{rationals({1, 1, 6}), Rational(-2)};
    CHECK(linear_eval(g, TokenString("110")) == 1);
    CHECK(linear_eval(g, TokenString("000")) == 0);
    CHECK(apply_and_append(as_generator(g), TokenString("110")) == TokenString("1101"));
    CHECK(linear_eval({rationals({5, -1}), Rational(0)}, TokenString("1")) == 0);

    const LatchEmbedding e = latch_embed(rationals({1}), Rational(-1));
    CHECK(e.L == -1);
    CHECK(e.U == 0);
    CHECK(e.B == 1);
    CHECK(e.A == 3);
    CHECK(e.gen.w == rationals({1, 1, 6}));
    CHECK(e.gen.b == -2);
    for (std::uint64_t M = 2; M <= 8; ++M)
        for (Bit z : {Bit{0}, Bit{1}}) {
            const TokenString x = TokenString() + z + TokenString("10");
            CHECK(e2e(as_generator(e.gen), x, M) == z);
            CHECK(cot(as_generator(e.gen), x, M) == TokenString::repeat(z, M));
        }
}

TEST_CASE("latch drag properties on random strings", "[classes]") {
    rng::Stream s(21, {0});
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + s.below(3);
        std::vector<Rational> v;
        for (std::size_t i = 0; i < m; ++i) v.emplace_back(static_cast<long long>(s.below(5)) - 2);
        const Rational c(static_cast<long long>(s.below(7)) - 3);
        const Generator g = as_generator(latch_embed(v, c).gen);
        const TokenString x = random_string(s, 10);
        CHECK(g(x + TokenString("00")) == 0);
        CHECK(g(x + Bit{1}) == 1);
    }
}

TEST_CASE("threshold enumeration matches separability oracle", "[classes]") {
    for (std::size_t d = 1; d <= 3; ++d) {
        std::size_t count = 0;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1u << d)); ++t) count += separable(t, d);
        const auto ltfs = enumerate_thresholds(d, default_weight_bound(d));
        CHECK(ltfs.size() == count);
        for (const auto& g : ltfs) CHECK(separable(truth_table(g), d));
    }
    CHECK(enumerate_thresholds(1, 1).size() == 4);
    CHECK(enumerate_thresholds(2, 1).size() == 14);
    // A wider grid finds nothing new.
    CHECK(enumerate_thresholds(3, 3).size() == enumerate_thresholds(3, 2).size());
    // Number of threshold functions of four variables (literature value).
    CHECK(enumerate_thresholds(4, default_weight_bound(4)).size() == 1882);
}

TEST_CASE("alternating class", "[classes]") {
    AlternatingParams p{3, 3, {}};
    p.set(2, 0, 1);
    const Generator f = alternating_member(p);
    CHECK(f(alternating_u(2, 0)) == 1);
    CHECK(f(alternating_u(2, 0) + TokenString("100")) == 1);
    CHECK(f(alternating_u(2, 0) + TokenString("10")) == 0);
    CHECK(f(alternating_u(2, 0) + TokenString("0")) == 0);
    CHECK(f(TokenString("0101")) == 0);
    for (Bit a : {Bit{0}, Bit{1}}) {
        AlternatingParams q{3, 3, {}};
        q.set(2, 0, a);
        CHECK(e2e(alternating_member(q), alternating_u(2, 0), 4) == a);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const AlternatingParams r = random_alpha(3, 3, seed);
        const Generator g = alternating_member(r);
        for (std::uint64_t m = 2; m <= 3; ++m)
            for (std::uint64_t n = 0; n <= 3; ++n) {
                CHECK(e2e(g, alternating_u(m, n), 2 * m) == r.at(m, n));
                CHECK(cot(g, alternating_u(m, n), 2 * m) ==
                      TokenString() + r.at(m, n) + TokenString::zeros(2 * m - 2) + r.at(m, n));
            }
    }
}

TEST_CASE("gluing", "[classes]") {
    const GeneratorList a{table_generator("a0", {{TokenString("1"), 1}}), table_generator("a1", {{TokenString("11"), 1}})};
    const GeneratorList b{table_generator("b0", {{TokenString("10"), 1}}), constant_generator(0)};
    CHECK_THROWS(glue_classes({{a, 0, 2}, {b, 2, 2}}));
    const GeneratorList glued = glue_classes({{a, 0, 2}, {b, 3, 2}});
    REQUIRE(glued.size() == 4);
    const auto all = strings_up_to(7);
    for (const TokenString& x : all) {
        const bool in_a = glued[0](x) || glued[1](x);
        const bool in_b = glued[2](x) || glued[3](x);
        CHECK_FALSE((in_a && in_b));
    }
    CHECK(glued[2](TokenString("00010")) == 1);
    const GeneratorList single = glue_classes({{a, 0, 2}});
    for (const TokenString& x : all) CHECK(single[0](x) == a[0](x));
    const int La = dims::littlestone_dim(dims::base_table(a, all));
    const int Lb = dims::littlestone_dim(dims::base_table(b, all));
    CHECK(dims::littlestone_dim(dims::base_table(glued, all)) <= std::max(La, Lb) + 1);
}
