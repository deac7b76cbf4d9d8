#include "arlab/stochastic.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace arlab;
using namespace arlab::stochastic;

TEST_CASE("end-to-end marginal", "[stochastic]") {
    CHECK(e2e_one_prob(1, 0) == 0);
    CHECK(e2e_one_prob(-1, 0) == 0);
    CHECK(e2e_one_prob(1, 1) == Rational(3, 4));
    CHECK(e2e_one_prob(-1, 3) == Rational(7, 16));
    for (int sigma : {-1, 1}) {
        for (std::uint64_t M = 0; M <= 40; ++M) {
            CHECK(e2e_one_prob(sigma, M) == e2e_one_prob_recursive(sigma, M));
            if (M % 2 == 1) {
                Rational half_delta = 1;
                for (std::uint64_t i = 0; i <= M; ++i) half_delta /= 2;
                CHECK(e2e_one_prob(sigma, M) == Rational(1, 2) + sigma * half_delta);
            }
        }
    }
    CHECK_THROWS(e2e_one_prob(0, 3));
    CHECK(next_prob(1, TokenString()) == Rational(3, 4));
    CHECK(next_prob(1, TokenString("01")) == Rational(1, 4));
    CHECK(next_prob(-1, TokenString("0")) == Rational(1, 4));
}

TEST_CASE("trajectory simulation matches the marginal", "[stochastic]") {
    const std::uint64_t trials = 100000;
    for (int sigma : {-1, 1}) {
        for (std::uint64_t M = 1; M <= 7; ++M) {
            std::uint64_t ones = 0;
            for (std::uint64_t k = 0; k < trials; ++k) ones += sample_final_bit(sigma, M, 41 + M, k);
            const double q = to_double(e2e_one_prob(sigma, M));
            const double se = std::sqrt(q * (1 - q) / static_cast<double>(trials));
            CHECK(std::abs(static_cast<double>(ones) / trials - q) <= 4 * se);
        }
    }
}

TEST_CASE("empirical mean learner", "[stochastic]") {
    EmpiricalMeanLearner l;
    CHECK(l.predict(TokenString()) == 0);
    l.observe(TokenString("0"), 1);
    l.observe(TokenString("1"), 0);
    CHECK(l.sigma_hat() == 1);  // every observed Z is 1
    CHECK(l.predict(TokenString("1")) == 0);
    l.observe(TokenString("0"), 0);
    l.observe(TokenString("1"), 1);
    CHECK(l.sigma_hat() == 1);  // mean exactly 1/2
    l.observe(TokenString("0"), 0);
    CHECK(l.sigma_hat() == -1);
    CHECK(l.predict(TokenString("0")) == 0);

    // Pr[sigma_hat_t != sigma] <= exp(-(t-1)/8) at t = 33.
    const std::uint64_t trials = 200000;
    std::uint64_t wrong = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
        EmpiricalMeanLearner e;
        for (std::uint64_t t = 1; t < 33; ++t) {
            const Bit z = rng::to_unit(rng::mix(5, {k, t})) < 0.75 ? 1 : 0;
            e.observe(TokenString(), z);
        }
        wrong += e.sigma_hat() != 1;
    }
    const double p = static_cast<double>(wrong) / trials;
    const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / trials);
    CHECK(p <= std::exp(-32.0 / 8) + 3 * se);
}

TEST_CASE("direct game regret", "[stochastic]") {
    const auto stream = random_instances(9);
    for (int sigma : {-1, 1}) {
        const auto bayes = simulate_direct_game([&] { return std::make_unique<BayesLearner>(sigma, 0, false); }, sigma,
                                                500, stream, 1, 20);
        CHECK(bayes.regret == Catch::Approx(0).margin(1e-9));
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto r = simulate_direct_game([] { return std::make_unique<EmpiricalMeanLearner>(); }, sigma, 10000,
                                                stream, seed, 20);
            CHECK(r.regret <= 5);
        }
    }
    // Complementing the prediction and flipping sigma leaves the regret unchanged.
    const TokenString empty;
    const auto a = simulate_direct_game([] { return std::make_unique<ConstantLearner>(0); }, 1, 50,
                                        [](std::uint64_t, std::uint64_t) { return TokenString(); }, 3, 1);
    const auto b = simulate_direct_game([] { return std::make_unique<ConstantLearner>(1); }, -1, 50,
                                        [](std::uint64_t, std::uint64_t) { return TokenString(); }, 3, 1);
    CHECK(a.regret == Catch::Approx(b.regret));
}

TEST_CASE("end-to-end game regret and lower bound", "[stochastic]") {
    CHECK_THROWS_AS(simulate_e2e_game([] { return std::make_unique<ConstantLearner>(0); }, 1, 2, 5, 0, 1),
                    std::invalid_argument);
    for (int sigma : {-1, 1}) {
        const auto r = simulate_e2e_game([&] { return std::make_unique<BayesLearner>(sigma, 3, true); }, sigma, 3, 50,
                                         0, 10);
        CHECK(r.regret == Catch::Approx(0).margin(1e-9));
    }
    // Any deterministic learner at M = 1, T = 1.
    for (const auto& make : deterministic_learners()) {
        const auto w = worst_target_regret(make, 1, 0, 10);
        CHECK(w.worst().T == 1);
        CHECK(w.worst().regret >= 0.25);
    }

    CHECK(bh_lower_bound(3, 1) == 0.25);
    CHECK_THROWS(bh_lower_bound(2, 1));
    for (int k = 1; k <= 1000; ++k) {
        const double delta = 0.25 * k / 1000.0;
        CHECK(kl_symmetric(delta) <= 16 * delta * delta);
    }
    for (std::uint64_t M : {1, 3, 5, 7}) {
        const double d = delta_of(M);
        for (std::uint64_t t = 1; static_cast<double>(t) <= 1 / (32 * d * d); ++t)
            CHECK(bh_lower_bound(M, t) >= 0.25 * std::exp(-0.5));
    }
    CHECK(separation_horizon(1) == 1);
    CHECK(separation_horizon(3) == 8);
    CHECK(separation_horizon(5) == 128);

    for (std::uint64_t M : {1, 3}) {
        for (const auto& make : deterministic_learners()) {
            const auto w = worst_target_regret(make, M, 17, 10000);
            CHECK(w.worst().regret >= w.worst().theory_floor - 3 * w.worst().se);
        }
    }
}
