#include "arlab/classes.hpp"
#include "arlab/dims.hpp"
#include "arlab/game.hpp"
#include "arlab/learners.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace arlab;
using namespace arlab::game;
using namespace arlab::learners;
using namespace testsupport;

namespace {

GeneratorList cube_class(const std::vector<TokenString>& pool) {
    GeneratorList cls;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pool.size()); ++code) {
        std::unordered_map<TokenString, Bit> table;
        for (std::size_t i = 0; i < pool.size(); ++i) table[pool[i]] = static_cast<Bit>((code >> i) & 1);
        cls.push_back(table_generator("cube" + std::to_string(code), table));
    }
    return cls;
}

// Replays a learner on a recorded transcript and returns its predictions.
std::vector<Bit> replay(Learner& learner, const GameTranscript& tr) {
    std::vector<Bit> out;
    for (const Round& r : tr.rounds) {
        out.push_back(learner.predict(r.instance));
        learner.update(r.instance, r.feedback);
    }
    return out;
}

}  // namespace

TEST_CASE("soa-cot bound and version-space law", "[learners]") {
    rng::Stream s(31, {0});
    for (int trial = 0; trial < 60; ++trial) {
        const GeneratorList cls = random_class(1100 + trial, 1 + s.below(10));
        const auto pool = random_pool(s, 1 + s.below(5), 3);
        const std::uint64_t M = 1 + s.below(3);
        const int base_L = dims::littlestone_dim(dims::base_table(cls, generation_closure(pool, M)));
        const int cot_L = dims::littlestone_dim_multiclass(dims::cot_table(cls, pool, M));
        SoaCot soa(cls, pool, M);
        const auto worst = exhaustive_worst_case(soa, cls, pool, M, FeedbackMode::COT, cls.size() + 1);
        CHECK(worst <= static_cast<std::uint64_t>(cot_L));
        CHECK(cot_L <= base_L);

        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto adv = random_target_adversary(cls, pool, M, FeedbackMode::COT, 20, seed);
            SoaCot learner(cls, pool, M);
            std::optional<TokenString> x;
            while ((x = adv.next_instance())) {
                const int before = learner.dimension();
                const Bit pred = learner.predict(*x);
                const TokenString fb = adv.feedback(*x, pred);
                learner.update(*x, fb);
                if (pred != fb.back()) CHECK(learner.dimension() < before);
            }
        }
    }
}

TEST_CASE("soa-cot small cases", "[learners]") {
    const std::vector<TokenString> pool{TokenString("0"), TokenString("1")};
    SoaCot single({copy_last_bit()}, pool, 3);
    CHECK(exhaustive_worst_case(single, {copy_last_bit()}, pool, 3, FeedbackMode::COT, 5) == 0);

    // Two singleton branches tie at dimension 0; the smaller trajectory wins.
    const GeneratorList two{constant_generator(1), copy_last_bit()};
    SoaCot tie(two, pool, 2);
    CHECK(tie.predict(TokenString("0")) == 0);
    CHECK(tie.last_branch() == TokenString("00"));
    CHECK_THROWS_AS(tie.update(TokenString("0"), TokenString("01")), RealizabilityError);
}

TEST_CASE("halving", "[learners]") {
    const std::vector<TokenString> pool{TokenString("0"), TokenString("1")};
    HalvingLearner one({constant_generator(1)}, 2);
    CHECK(exhaustive_worst_case(one, {constant_generator(1)}, pool, 2, FeedbackMode::E2E, 4) == 0);

    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<TokenString> cube;
        for (std::size_t i = 0; i < k; ++i) cube.push_back(TokenString::repeat(1, i + 1));
        const auto cls = cube_class(cube);
        TableHalving halving(dims::e2e_table(cls, cube, 1).dedup());
        CHECK(exhaustive_worst_case(halving, cls, cube, 1, FeedbackMode::E2E, 2 * k) == k);
        CHECK(halving.mistake_bound() == k);
    }

    // Ties predict 1.
    HalvingLearner split({constant_generator(0), constant_generator(1)}, 1);
    CHECK(split.predict(TokenString("0")) == 1);

    rng::Stream s(32, {0});
    for (int trial = 0; trial < 40; ++trial) {
        const GeneratorList cls = random_class(1300 + trial, 1 + s.below(10));
        const auto pool = random_pool(s, 1 + s.below(5), 3);
        const std::uint64_t M = 1 + s.below(3);
        const auto table = dims::e2e_table(cls, pool, M).dedup();
        TableHalving halving(table);
        CHECK(exhaustive_worst_case(halving, cls, pool, M, FeedbackMode::E2E, 12) <= halving.mistake_bound());
    }
}

TEST_CASE("taxonomy learner", "[learners]") {
    const classes::TaxonomyParams p;
    const std::uint64_t M = 256;
    const std::uint64_t small = 300, large = 2700;
    REQUIRE(small <= 10 * M);
    REQUIRE(large > 10 * M);

    // Halving on a bucket of size 2^r(s).
    const auto bucket = classes::taxonomy_class(p, {small});
    REQUIRE(bucket.size() == (std::uint64_t{1} << p.rate(small)));
    std::vector<TokenString> bpool;
    for (std::uint64_t i = 0; i <= p.k_max(small); ++i) bpool.push_back(classes::bucket_point(small, i));
    HalvingLearner halving(bucket, M);
    CHECK(exhaustive_worst_case(halving, bucket, bpool, M, FeedbackMode::E2E, 10) <= p.rate(small));

    // Baseline-agreeing stream.
    const Generator f = classes::taxonomy_baseline(p);
    TaxonomyLearner quiet(p, M);
    for (std::uint64_t k : p.K(small)) {
        const TokenString x = classes::taxonomy_point(small, k) + Bit{1} + TokenString::zeros(small - k - 1);
        CHECK(quiet.predict(x) == e2e(f, x, M));
    }

    // Large bucket: the on-bucket mistake pins k. Needs k + 1 >= M, so a short horizon.
    const std::uint64_t m5 = 5, s4 = 4096;
    REQUIRE(s4 > 10 * m5);
    int pinned = 0;
    for (std::uint64_t k : p.K(s4)) {
        const Generator target = classes::taxonomy_member(p, s4, k);
        TaxonomyLearner learner(p, m5);
        std::size_t mistakes = 0;
        // Two sweeps: the first mistake reveals s, the repeat reveals k.
        for (std::uint64_t i = 0; i <= 2 * p.k_max(s4) + 1; ++i) {
            const TokenString x = classes::bucket_point(s4, i % (p.k_max(s4) + 1));
            const TokenString fb = TokenString() + e2e(target, x, m5);
            mistakes += learner.predict(x) != fb.back();
            learner.update(x, fb);
        }
        if (k + 1 >= m5) {
            CHECK(learner.phase() == TaxonomyLearner::Phase::Exact);
            CHECK(learner.inferred_s() == s4);
            CHECK(learner.inferred_k() == k);
            CHECK(mistakes == 2);
            ++pinned;
        } else {
            CHECK(mistakes == 0);
        }
    }
    CHECK(pinned == 7);
}

TEST_CASE("taxonomy learner exhaustive worst case on a window", "[learners]") {
    const classes::TaxonomyParams p;
    const std::uint64_t M = 256;
    const std::vector<std::uint64_t> window{256, 300, 2600, 2700};
    const auto cls = classes::taxonomy_class(p, window);
    std::vector<TokenString> pool;
    for (std::uint64_t s : window) {
        for (std::uint64_t i = 0; i <= p.k_max(s) + 1; ++i) pool.push_back(classes::bucket_point(s, i));
        pool.push_back(classes::taxonomy_point(s, p.k_min(s)) + Bit{1} + TokenString::zeros(s - p.k_min(s) - 1));
    }
    pool.push_back(TokenString::zeros(256));
    TaxonomyLearner learner(p, M);
    const auto worst = exhaustive_worst_case(learner, cls, pool, M, FeedbackMode::E2E, cls.size() + 2);
    CHECK(worst <= 1 + 10 * p.rate(M) + 1);
    CHECK(worst >= 1);
}

TEST_CASE("cot reduction charging and modes", "[learners]") {
    rng::Stream s(33, {0});
    for (int trial = 0; trial < 100; ++trial) {
        const GeneratorList cls = random_class(1500 + trial, 2 + s.below(7));
        const auto pool = random_pool(s, 1 + s.below(4), 3);
        const std::uint64_t M = 1 + s.below(3);
        auto adv = random_target_adversary(cls, pool, M, FeedbackMode::COT, 15, trial);
        CotReduction fast(std::make_unique<BaseHalving>(cls), M, CotReduction::Mode::Incremental);
        const auto tr = run_game(fast, adv, M, FeedbackMode::COT, 15);
        const ChargingReport rep = check_charging(fast.prototype(), fast.history());
        CHECK(rep.ok());
        CHECK(rep.final_mistakes == tr.mistakes());
        CHECK(tr.mistakes() <= BaseHalving(cls).mistake_bound());

        CotReduction slow(std::make_unique<BaseHalving>(cls), M, CotReduction::Mode::FromScratch);
        std::vector<Bit> fast_preds;
        for (const Round& r : tr.rounds) fast_preds.push_back(r.prediction);
        CHECK(replay(slow, tr) == fast_preds);
    }

    // Degenerate charging: a base learner that never errs.
    const std::vector<TokenString> pool{TokenString("0"), TokenString("1")};
    CotReduction exact(std::make_unique<BaseHalving>(GeneratorList{copy_last_bit()}), 3);
    FixedTargetAdversary adv({copy_last_bit()}, 0, pool, 3, FeedbackMode::COT);
    CHECK(run_game(exact, adv, 3, FeedbackMode::COT, 5).mistakes() == 0);
    CHECK(check_charging(exact.prototype(), exact.history()).base_mistakes == 0);

    // Halving base over four members.
    const GeneratorList four = random_class(77, 4);
    const auto fpool = std::vector<TokenString>{TokenString("0"), TokenString("1"), TokenString("01")};
    CotReduction red(std::make_unique<BaseHalving>(four), 2);
    CHECK(exhaustive_worst_case(red, four, fpool, 2, FeedbackMode::COT, 6) <= 2);
    CHECK_THROWS_AS(red.update(TokenString("0"), TokenString("1")), std::invalid_argument);
}

TEST_CASE("suffix projection and threshold halving", "[learners]") {
    CHECK(suffix_map(TokenString("1"), 3) == TokenString("001"));
    CHECK(suffix_map(TokenString("110101"), 3) == TokenString("101"));
    CHECK(suffix_map(TokenString(), 2) == TokenString("00"));

    CHECK(ltf_halving_base(1)->mistake_bound() == 2);
    CHECK(ltf_halving_base(2)->mistake_bound() == 3);
    CHECK(ltf_halving_base(3)->mistake_bound() == 6);
    CHECK_THROWS_AS(ltf_halving_base(5), std::invalid_argument);

    // Learning latched thresholds at d = 3 under trajectory feedback.
    const std::size_t d = 3;
    GeneratorList cls;
    for (const auto& g : classes::enumerate_thresholds(d, classes::default_weight_bound(d)))
        cls.push_back(classes::as_generator(g));
    std::vector<TokenString> pool;
    for (std::uint64_t code = 0; code < 8; ++code) {
        TokenString x;
        for (int i = 2; i >= 0; --i) x.push_back(static_cast<Bit>((code >> i) & 1));
        pool.push_back(x);
    }
    for (std::uint64_t M : {1, 2, 4}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto adv = random_target_adversary(cls, pool, M, FeedbackMode::COT, 30, seed);
            CotReduction red(std::make_unique<SuffixProjection>(ltf_halving_base(d), d), M);
            const auto tr = run_game(red, adv, M, FeedbackMode::COT, 30);
            CHECK(tr.mistakes() <= 6);
            CHECK(check_charging(red.prototype(), red.history()).ok());
        }
    }
}

TEST_CASE("learners replay deterministically", "[learners]") {
    rng::Stream s(34, {0});
    const GeneratorList cls = random_class(1700, 8);
    const auto pool = random_pool(s, 4, 3);
    const std::uint64_t M = 2;
    auto adv = random_target_adversary(cls, pool, M, FeedbackMode::COT, 25, 3);
    SoaCot soa(cls, pool, M);
    const auto tr = run_game(soa, adv, M, FeedbackMode::COT, 25);
    std::vector<Bit> recorded;
    for (const Round& r : tr.rounds) recorded.push_back(r.prediction);
    SoaCot again(cls, pool, M);
    CHECK(replay(again, tr) == recorded);
    HalvingLearner h1(cls, M), h2(cls, M);
    CHECK(replay(h1, tr) == replay(h2, tr));
}
