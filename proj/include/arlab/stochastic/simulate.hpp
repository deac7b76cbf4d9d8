#pragma once

// Monte Carlo regret for the direct next-token game and the end-to-end game.
// Each round's expected loss given the learner's prediction is accumulated
// instead of the sampled loss; the sampled label still drives the learner.

#include "arlab/stochastic/model.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace arlab::stochastic {

class StochasticLearner {
public:
    virtual ~StochasticLearner() = default;
    virtual Bit predict(const TokenString& x) = 0;
    virtual void observe(const TokenString& x, Bit y) = 0;
    virtual std::string name() const = 0;
};

using LearnerFactory = std::function<std::unique_ptr<StochasticLearner>()>;

// Estimates whether the next bit flips the last one from the running mean of
// observed flips; predicts 0 on the first round.
class EmpiricalMeanLearner : public StochasticLearner {
public:
    Bit predict(const TokenString& x) override {
        if (n_ == 0) return 0;
        return sigma_hat() == 1 ? static_cast<Bit>(1 - last_bit(x)) : last_bit(x);
    }
    void observe(const TokenString& x, Bit y) override {
        flips_ += (y ^ last_bit(x));
        ++n_;
    }
    std::string name() const override { return "empirical-mean"; }

    int sigma_hat() const { return 2 * flips_ >= n_ ? 1 : -1; }
    std::uint64_t rounds() const { return n_; }

private:
    std::uint64_t flips_ = 0, n_ = 0;
};

class ConstantLearner : public StochasticLearner {
public:
    explicit ConstantLearner(Bit b) : b_(b) {}
    Bit predict(const TokenString&) override { return b_; }
    void observe(const TokenString&, Bit) override {}
    std::string name() const override { return "constant-" + std::to_string(b_); }

private:
    Bit b_;
};

// Repeats the previously observed label; 0 on the first round.
class FollowLastLearner : public StochasticLearner {
public:
    Bit predict(const TokenString&) override { return last_; }
    void observe(const TokenString&, Bit y) override { last_ = y; }
    std::string name() const override { return "follow-last"; }

private:
    Bit last_ = 0;
};

// Knows sigma and predicts the likelier label.
class BayesLearner : public StochasticLearner {
public:
    BayesLearner(int sigma, std::uint64_t M, bool e2e) : sigma_(sigma), M_(M), e2e_(e2e) { check_sigma(sigma); }
    Bit predict(const TokenString& x) override {
        const Rational p = e2e_ ? e2e_one_prob(sigma_, M_) : next_prob(sigma_, x);
        return p > Rational(1, 2) ? 1 : 0;
    }
    void observe(const TokenString&, Bit) override {}
    std::string name() const override { return "bayes"; }

private:
    int sigma_;
    std::uint64_t M_;
    bool e2e_;
};

// Learners that do not know sigma.
inline std::vector<LearnerFactory> deterministic_learners() {
    return {
        [] { return std::make_unique<EmpiricalMeanLearner>(); },
        [] { return std::make_unique<ConstantLearner>(0); },
        [] { return std::make_unique<ConstantLearner>(1); },
        [] { return std::make_unique<FollowLastLearner>(); },
    };
}

struct RegretReport {
    int sigma = 1;
    std::uint64_t M = 0;  // 0 for the direct game
    std::uint64_t T = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double expected_loss = 0;
    double bayes_loss = 0;
    double regret = 0;
    double se = 0;
    double theory_floor = 0;
    std::string learner;
};

inline void write_csv_header(std::ostream& os) { os << "sigma,M,T,trials,regret,se,theory_floor,seed\n"; }

inline void write_csv_row(std::ostream& os, const RegretReport& r) {
    os << r.sigma << ',' << r.M << ',' << r.T << ',' << r.trials << ',' << r.regret << ',' << r.se << ','
       << r.theory_floor << ',' << r.seed << '\n';
}

namespace detail {

// Compensated running mean and variance of per-trial regrets.
class Moments {
public:
    void add(double x) {
        ++n_;
        kahan(sum_, c_sum_, x);
        kahan(sq_, c_sq_, x * x);
    }
    double mean() const { return n_ ? sum_ / static_cast<double>(n_) : 0; }
    double se() const {
        if (n_ < 2) return 0;
        const double n = static_cast<double>(n_);
        const double var = std::max(0.0, (sq_ - sum_ * sum_ / n) / (n - 1));
        return std::sqrt(var / n);
    }

private:
    static void kahan(double& sum, double& c, double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    std::uint64_t n_ = 0;
    double sum_ = 0, c_sum_ = 0, sq_ = 0, c_sq_ = 0;
};

}  // namespace detail

using InstanceStream = std::function<TokenString(std::uint64_t trial, std::uint64_t t)>;

// Instances of length 1..8 drawn from the counter-based generator.
inline InstanceStream random_instances(std::uint64_t seed) {
    return [seed](std::uint64_t trial, std::uint64_t t) {
        const std::uint64_t w = rng::mix(seed, {trial, t, 0x1457});
        TokenString x;
        const std::uint64_t len = 1 + (w & 7);
        for (std::uint64_t i = 0; i < len; ++i) x.push_back(static_cast<Bit>((w >> (8 + i)) & 1));
        return x;
    };
}

inline RegretReport simulate_direct_game(const LearnerFactory& make, int sigma, std::uint64_t T,
                                         const InstanceStream& stream, std::uint64_t seed, std::uint64_t trials) {
    check_sigma(sigma);
    if (T < 1) throw std::invalid_argument("simulate_direct_game: T must be >= 1");
    const double p_flip = to_double(flip_prob(sigma));
    detail::Moments regret, loss, bayes;
    RegretReport rep;
    for (std::uint64_t k = 0; k < trials; ++k) {
        auto learner = make();
        rep.learner = learner->name();
        double run_loss = 0, run_bayes = 0;
        for (std::uint64_t t = 1; t <= T; ++t) {
            const TokenString x = stream(k, t);
            const double p1 = last_bit(x) == 0 ? p_flip : 1 - p_flip;
            const Bit pred = learner->predict(x);
            run_loss += pred ? 1 - p1 : p1;
            run_bayes += std::min(p1, 1 - p1);
            const Bit y = rng::to_unit(rng::mix(seed, {k, t, 0xD1})) < p1 ? 1 : 0;
            learner->observe(x, y);
        }
        regret.add(run_loss - run_bayes);
        loss.add(run_loss);
        bayes.add(run_bayes);
    }
    rep.sigma = sigma;
    rep.T = T;
    rep.trials = trials;
    rep.seed = seed;
    rep.expected_loss = loss.mean();
    rep.bayes_loss = bayes.mean();
    rep.regret = regret.mean();
    rep.se = regret.se();
    return rep;
}

// Every round the instance is the empty string and the label is the final
// bit of an M-step generation, drawn from its exact marginal.
inline RegretReport simulate_e2e_game(const LearnerFactory& make, int sigma, std::uint64_t M, std::uint64_t T,
                                      std::uint64_t seed, std::uint64_t trials) {
    check_sigma(sigma);
    if (M % 2 == 0) throw std::invalid_argument("simulate_e2e_game: M must be odd");
    if (T < 1) throw std::invalid_argument("simulate_e2e_game: T must be >= 1");
    const double q = to_double(e2e_one_prob(sigma, M));
    const TokenString empty;
    detail::Moments regret, loss;
    RegretReport rep;
    for (std::uint64_t k = 0; k < trials; ++k) {
        auto learner = make();
        rep.learner = learner->name();
        double run_loss = 0;
        for (std::uint64_t t = 1; t <= T; ++t) {
            const Bit pred = learner->predict(empty);
            run_loss += pred ? 1 - q : q;
            const Bit y = rng::to_unit(rng::mix(seed, {k, t, 0xE2})) < q ? 1 : 0;
            learner->observe(empty, y);
        }
        const double run_bayes = static_cast<double>(T) * std::min(q, 1 - q);
        regret.add(run_loss - run_bayes);
        loss.add(run_loss);
    }
    rep.sigma = sigma;
    rep.M = M;
    rep.T = T;
    rep.trials = trials;
    rep.seed = seed;
    rep.expected_loss = loss.mean();
    rep.bayes_loss = static_cast<double>(T) * std::min(q, 1 - q);
    rep.regret = regret.mean();
    rep.se = regret.se();
    rep.theory_floor = regret_floor(M, T);
    return rep;
}

struct WorstTargetRegret {
    RegretReport plus, minus;
    const RegretReport& worst() const { return plus.regret >= minus.regret ? plus : minus; }
};

inline WorstTargetRegret worst_target_regret(const LearnerFactory& make, std::uint64_t M, std::uint64_t seed,
                                             std::uint64_t trials) {
    const std::uint64_t T = separation_horizon(M);
    return {simulate_e2e_game(make, 1, M, T, seed, trials), simulate_e2e_game(make, -1, M, T, seed, trials)};
}

}  // namespace arlab::stochastic
