#pragma once

// Turns a base next-token learner into a learner under trajectory feedback.
// The transcript keeps one (prefix, revealed bit) pair per generated token.
// To predict on x the base learner is run over the transcript and then fed
// its own predictions for M steps; the last one is the answer.

#include "arlab/game/protocol.hpp"
#include "arlab/learners/base.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arlab::learners {

struct ReductionRound {
    TokenString instance;
    TokenString predicted;  // the simulated prefix of length M
    TokenString revealed;
};

class CotReduction : public game::Learner {
public:
    enum class Mode { FromScratch, Incremental };

    CotReduction(std::unique_ptr<BaseLearner> base, std::uint64_t M, Mode mode = Mode::Incremental)
        : proto_(std::shared_ptr<const BaseLearner>(std::move(base))), state_(proto_->clone()), M_(M), mode_(mode) {
        if (M_ < 1) throw std::invalid_argument("cot_reduction: M must be >= 1");
    }
    CotReduction(const CotReduction& o)
        : proto_(o.proto_), state_(o.state_->clone()), M_(o.M_), mode_(o.mode_), transcript_(o.transcript_),
          history_(o.history_), last_(o.last_) {}

    Bit predict(const TokenString& x) override {
        auto a = mode_ == Mode::Incremental ? state_->clone() : replay();
        TokenString cur = x;
        last_ = TokenString();
        for (std::uint64_t j = 0; j < M_; ++j) {
            const Bit y = a->predict(cur);
            a->update(cur, y);
            cur.push_back(y);
            last_.push_back(y);
        }
        return last_.back();
    }

    void update(const TokenString& x, const TokenString& fb) override {
        if (fb.size() != M_) throw std::invalid_argument("cot_reduction: needs the full trajectory as feedback");
        if (last_.size() != M_) predict(x);
        TokenString cur = x;
        for (std::uint64_t j = 0; j < M_; ++j) {
            transcript_.emplace_back(cur, fb[j]);
            state_->update(cur, fb[j]);
            cur.push_back(fb[j]);
        }
        history_.push_back({x, last_, fb});
        last_ = TokenString();
    }

    std::unique_ptr<game::Learner> clone() const override { return std::make_unique<CotReduction>(*this); }
    std::string fingerprint() const override { return state_->fingerprint(); }
    std::string name() const override {
        return std::string("cot-reduction[") + (mode_ == Mode::Incremental ? "incremental" : "from-scratch") + "]/" +
               proto_->name();
    }

    const std::vector<ReductionRound>& history() const { return history_; }
    const std::vector<std::pair<TokenString, Bit>>& transcript() const { return transcript_; }
    const BaseLearner& prototype() const { return *proto_; }

private:
    std::unique_ptr<BaseLearner> replay() const {
        auto a = proto_->clone();
        for (const auto& [z, y] : transcript_) a->update(z, y);
        return a;
    }

    std::shared_ptr<const BaseLearner> proto_;
    std::unique_ptr<BaseLearner> state_;
    std::uint64_t M_;
    Mode mode_;
    std::vector<std::pair<TokenString, Bit>> transcript_;
    std::vector<ReductionRound> history_;
    TokenString last_;
};

struct ChargingReport {
    std::size_t final_mistakes = 0;
    std::size_t base_mistakes = 0;
    std::size_t charged = 0;  // final mistakes mapped onto a base mistake
    bool injective = true;

    bool ok() const { return injective && charged == final_mistakes && final_mistakes <= base_mistakes; }
};

// Replays the base learner on the expanded sequence (predicting before every
// update) and maps each final-answer mistake to the base mistake at the first
// index where the simulated prefix left the revealed trajectory.
inline ChargingReport check_charging(const BaseLearner& proto, const std::vector<ReductionRound>& history) {
    ChargingReport rep;
    auto a = proto.clone();
    std::set<std::pair<std::size_t, std::uint64_t>> base_mistakes, charged;
    for (std::size_t t = 0; t < history.size(); ++t) {
        const ReductionRound& r = history[t];
        TokenString cur = r.instance;
        for (std::uint64_t j = 0; j < r.revealed.size(); ++j) {
            if (a->predict(cur) != r.revealed[j]) base_mistakes.emplace(t, j);
            a->update(cur, r.revealed[j]);
            cur.push_back(r.revealed[j]);
        }
    }
    rep.base_mistakes = base_mistakes.size();
    for (std::size_t t = 0; t < history.size(); ++t) {
        const ReductionRound& r = history[t];
        if (r.predicted.back() == r.revealed.back()) continue;
        ++rep.final_mistakes;
        std::uint64_t j = 0;
        while (r.predicted[j] == r.revealed[j]) ++j;
        if (base_mistakes.count({t, j}) == 0) continue;
        if (!charged.emplace(t, j).second) rep.injective = false;
        ++rep.charged;
    }
    return rep;
}

}  // namespace arlab::learners
