#pragma once

// Learner for the taxonomy class under end-to-end feedback. It follows the
// baseline until the first mistake, which can only happen on a bucket point
// 0^s 1 0^i and so reveals s. Small buckets are then learned by halving over
// f_{s,k}; in large buckets the learner answers 0 on the bucket until a
// mistake there pins k = M + i - 1.

#include "arlab/classes/taxonomy.hpp"
#include "arlab/game/protocol.hpp"

#include <memory>
#include <stdexcept>

namespace arlab::learners {

class TaxonomyLearner : public game::Learner {
public:
    enum class Phase { Baseline, Halving, Bucket, Exact };

    TaxonomyLearner(classes::TaxonomyParams p, std::uint64_t M)
        : p_(std::move(p)), M_(M), baseline_(classes::taxonomy_baseline(p_)) {}

    Bit predict(const TokenString& x) override {
        switch (phase_) {
            case Phase::Baseline:
                return e2e(baseline_, x, M_);
            case Phase::Halving: {
                std::size_t ones = 0;
                for (std::uint64_t k : candidates_) ones += e2e(classes::taxonomy_member(p_, s_, k), x, M_);
                return 2 * ones >= candidates_.size() ? 1 : 0;
            }
            case Phase::Bucket:
                return on_bucket(x) ? 0 : e2e(baseline_, x, M_);
            case Phase::Exact:
                return e2e(classes::taxonomy_member(p_, s_, k_), x, M_);
        }
        return 0;
    }

    void update(const TokenString& x, const TokenString& fb) override {
        const Bit y = fb.back();
        const bool mistake = predict(x) != y;
        switch (phase_) {
            case Phase::Baseline: {
                if (!mistake) return;
                const auto b = classes::parse_bucket(x);
                if (!b || !p_.in_range(b->first)) fail();
                s_ = b->first;
                if (s_ <= 10 * M_) {
                    for (std::uint64_t k : p_.K(s_))
                        if (e2e(classes::taxonomy_member(p_, s_, k), x, M_) == y) candidates_.push_back(k);
                    if (candidates_.empty()) fail();
                    phase_ = Phase::Halving;
                } else {
                    phase_ = Phase::Bucket;
                }
                return;
            }
            case Phase::Halving: {
                std::vector<std::uint64_t> keep;
                for (std::uint64_t k : candidates_)
                    if (e2e(classes::taxonomy_member(p_, s_, k), x, M_) == y) keep.push_back(k);
                if (keep.empty()) fail();
                candidates_ = std::move(keep);
                return;
            }
            case Phase::Bucket: {
                if (!mistake) return;
                if (!on_bucket(x)) fail();
                const std::uint64_t k = M_ + classes::parse_bucket(x)->second - 1;
                if (!p_.in_K(s_, k)) fail();
                k_ = k;
                phase_ = Phase::Exact;
                return;
            }
            case Phase::Exact:
                if (mistake) fail();
                return;
        }
    }

    std::unique_ptr<game::Learner> clone() const override { return std::make_unique<TaxonomyLearner>(*this); }

    std::string fingerprint() const override {
        std::string s = std::to_string(static_cast<int>(phase_)) + '|' + std::to_string(s_) + '|' + std::to_string(k_);
        for (std::uint64_t k : candidates_) s += ',' + std::to_string(k);
        return s;
    }

    std::string name() const override { return "taxonomy-learner"; }
    Phase phase() const { return phase_; }
    std::uint64_t inferred_s() const { return s_; }
    std::uint64_t inferred_k() const { return k_; }

private:
    bool on_bucket(const TokenString& x) const {
        const auto b = classes::parse_bucket(x);
        return b && b->first == s_;
    }

    [[noreturn]] static void fail() {
        throw game::RealizabilityError("taxonomy_learner: observations inconsistent with every taxonomy member");
    }

    classes::TaxonomyParams p_;
    std::uint64_t M_;
    Generator baseline_;
    Phase phase_ = Phase::Baseline;
    std::uint64_t s_ = 0, k_ = 0;
    std::vector<std::uint64_t> candidates_;
};

}  // namespace arlab::learners
