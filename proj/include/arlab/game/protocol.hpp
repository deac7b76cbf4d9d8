#pragma once

// The online protocol. Each round the adversary names an instance, the learner
// predicts the final bit, the adversary reveals feedback (the final bit, or
// the whole M-step trajectory) and the learner is charged when its prediction
// differs from the true final bit.

#include "arlab/core/generation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::game {

enum class FeedbackMode { E2E, COT };

inline std::string to_string(FeedbackMode m) { return m == FeedbackMode::E2E ? "E2E" : "COT"; }

inline FeedbackMode parse_mode(const std::string& s) {
    if (s == "E2E" || s == "e2e") return FeedbackMode::E2E;
    if (s == "COT" || s == "cot") return FeedbackMode::COT;
    throw std::invalid_argument("unknown feedback mode '" + s + "'");
}

// The feedback a generator produces on x.
inline TokenString feedback_of(const Generator& g, const TokenString& x, std::uint64_t M, FeedbackMode mode) {
    TokenString c = cot(g, x, M);
    if (mode == FeedbackMode::COT) return c;
    return TokenString() + c.back();
}

class Learner {
public:
    virtual ~Learner() = default;
    virtual Bit predict(const TokenString& x) = 0;
    virtual void update(const TokenString& x, const TokenString& feedback) = 0;
    virtual std::unique_ptr<Learner> clone() const = 0;
    // A summary of the state that determines all future behavior, or empty
    // when the learner offers none.
    virtual std::string fingerprint() const { return {}; }
    virtual std::string name() const = 0;
};

class Adversary {
public:
    virtual ~Adversary() = default;
    virtual std::optional<TokenString> next_instance() = 0;
    virtual TokenString feedback(const TokenString& x, Bit prediction) = 0;
    virtual const GeneratorList& declared_class() const = 0;
    virtual std::string name() const = 0;
};

struct RealizabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Members of a class consistent with all feedback so far.
class Survivors {
public:
    Survivors() = default;
    explicit Survivors(const GeneratorList* cls) : cls_(cls) {
        for (std::size_t i = 0; i < cls->size(); ++i) alive_.push_back(i);
    }

    const std::vector<std::size_t>& alive() const { return alive_; }
    bool empty() const { return alive_.empty(); }

    std::vector<std::size_t> consistent(const TokenString& x, const TokenString& fb, std::uint64_t M,
                                        FeedbackMode mode) const {
        std::vector<std::size_t> keep;
        for (std::size_t i : alive_)
            if (feedback_of((*cls_)[i], x, M, mode) == fb) keep.push_back(i);
        return keep;
    }

    void restrict(const TokenString& x, const TokenString& fb, std::uint64_t M, FeedbackMode mode) {
        alive_ = consistent(x, fb, M, mode);
    }

    void assign(std::vector<std::size_t> alive) { alive_ = std::move(alive); }

private:
    const GeneratorList* cls_ = nullptr;
    std::vector<std::size_t> alive_;
};

struct Round {
    TokenString instance;
    Bit prediction = 0;
    TokenString feedback;
    bool mistake = false;
};

struct GameTranscript {
    std::uint64_t M = 1;
    FeedbackMode mode = FeedbackMode::E2E;
    std::string learner;
    std::string stream;  // adversary or target id
    std::uint64_t seed = 0;
    std::string config;  // free-form JSON snapshot
    std::vector<Round> rounds;

    std::size_t mistakes() const {
        std::size_t n = 0;
        for (const Round& r : rounds) n += r.mistake;
        return n;
    }
};

// Plays up to horizon rounds, checking each round that some member of the
// adversary's declared class agrees with all feedback.
inline GameTranscript run_game(Learner& learner, Adversary& adversary, std::uint64_t M, FeedbackMode mode,
                               std::uint64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("run_game: horizon must be >= 1");
    if (M < 1) throw std::invalid_argument("run_game: M must be >= 1");
    GameTranscript tr;
    tr.M = M;
    tr.mode = mode;
    tr.learner = learner.name();
    tr.stream = adversary.name();
    Survivors alive(&adversary.declared_class());
    for (std::uint64_t t = 1; t <= horizon; ++t) {
        const auto x = adversary.next_instance();
        if (!x) break;
        Round r;
        r.instance = *x;
        r.prediction = learner.predict(*x);
        r.feedback = adversary.feedback(*x, r.prediction);
        const std::uint64_t expect = mode == FeedbackMode::COT ? M : 1;
        if (r.feedback.size() != expect)
            throw RealizabilityError("feedback of wrong length at round " + std::to_string(t));
        alive.restrict(*x, r.feedback, M, mode);
        if (alive.empty()) throw RealizabilityError("realizability violated at round " + std::to_string(t));
        r.mistake = r.prediction != r.feedback.back();
        learner.update(*x, r.feedback);
        tr.rounds.push_back(std::move(r));
    }
    return tr;
}

// Recomputes every mistake flag from a known target.
inline bool transcript_consistent_with(const GameTranscript& tr, const Generator& target) {
    for (const Round& r : tr.rounds) {
        const TokenString c = cot(target, r.instance, tr.M);
        if (r.mistake != (r.prediction != c.back())) return false;
        if (r.feedback != (tr.mode == FeedbackMode::COT ? c : TokenString() + c.back())) return false;
    }
    return true;
}

}  // namespace arlab::game
