#pragma once

#include "arlab/classes/linear.hpp"
#include "arlab/dims/tree.hpp"
#include "arlab/game/protocol.hpp"
#include "arlab/util/rng.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace arlab::game {

// Plays a fixed instance sequence and answers with a fixed target's feedback.
class FixedTargetAdversary : public Adversary {
public:
    FixedTargetAdversary(GeneratorList cls, std::size_t target, std::vector<TokenString> stream, std::uint64_t M,
                         FeedbackMode mode)
        : cls_(std::move(cls)), target_(target), stream_(std::move(stream)), M_(M), mode_(mode) {
        if (target_ >= cls_.size()) throw std::invalid_argument("fixed target adversary: target out of range");
    }

    std::optional<TokenString> next_instance() override {
        if (pos_ >= stream_.size()) return std::nullopt;
        return stream_[pos_++];
    }
    TokenString feedback(const TokenString& x, Bit) override { return feedback_of(cls_[target_], x, M_, mode_); }
    const GeneratorList& declared_class() const override { return cls_; }
    std::string name() const override { return "target:" + cls_[target_].id(); }

private:
    GeneratorList cls_;
    std::size_t target_;
    std::vector<TokenString> stream_;
    std::uint64_t M_;
    FeedbackMode mode_;
    std::size_t pos_ = 0;
};

// A seeded target and a seeded stream of pool instances.
inline FixedTargetAdversary random_target_adversary(const GeneratorList& cls, const std::vector<TokenString>& pool,
                                                    std::uint64_t M, FeedbackMode mode, std::uint64_t horizon,
                                                    std::uint64_t seed) {
    if (cls.empty() || pool.empty()) throw std::invalid_argument("random adversary: empty class or pool");
    rng::Stream r(seed, {0x7a11});
    const std::size_t target = r.below(cls.size());
    std::vector<TokenString> stream;
    for (std::uint64_t t = 0; t < horizon; ++t) stream.push_back(pool[r.below(pool.size())]);
    return FixedTargetAdversary(cls, target, std::move(stream), M, mode);
}

struct TieBreak {
    bool random = false;
    std::uint64_t seed = 0;
};

// Walks a tree shattered by the class's end-to-end outputs, answering
// opposite to the prediction at every node.
class TreeAdversary : public Adversary {
public:
    TreeAdversary(GeneratorList cls, dims::LittlestoneTree tree, std::uint64_t M, FeedbackMode mode,
                  TieBreak tie = {})
        : cls_(std::move(cls)), tree_(std::move(tree)), M_(M), mode_(mode), tie_(tie), rng_(tie.seed, {0x7ee}) {
        alive_ = Survivors(&cls_);
        std::vector<std::size_t> everyone = alive_.alive();
        if (!shatters(everyone, 0)) throw std::invalid_argument("tree_adversary: tree is not shattered by the class");
    }

    std::optional<TokenString> next_instance() override {
        const auto& n = tree_.node(node_);
        if (n.leaf()) return std::nullopt;
        return *n.instance;
    }

    TokenString feedback(const TokenString& x, Bit prediction) override {
        const auto& n = tree_.node(node_);
        if (n.leaf() || *n.instance != x) throw std::logic_error("tree_adversary: instance does not match the tree");
        const Bit want = static_cast<Bit>(1 - prediction);
        // Candidate payloads with the members they keep, in lexicographic order.
        std::map<TokenString, std::vector<std::size_t>> by_payload;
        for (std::size_t i : alive_.alive()) by_payload[feedback_of(cls_[i], x, M_, mode_)].push_back(i);
        std::vector<const TokenString*> preferred, opposite, all;
        for (const auto& [fb, members] : by_payload) {
            all.push_back(&fb);
            if (fb.back() != want) continue;
            opposite.push_back(&fb);
            if (shatters(members, n.child[want])) preferred.push_back(&fb);
        }
        const auto& pool = !preferred.empty() ? preferred : (!opposite.empty() ? opposite : all);
        const TokenString fb = *pool[tie_.random ? rng_.below(pool.size()) : 0];
        alive_.assign(by_payload[fb]);
        node_ = n.child[fb.back()];
        return fb;
    }

    const GeneratorList& declared_class() const override { return cls_; }
    std::string name() const override { return "tree-adversary"; }

private:
    // Whether the members realize every branch of the subtree at node.
    bool shatters(const std::vector<std::size_t>& members, int node) const {
        std::set<TokenString> realized;
        for (std::size_t i : members) {
            TokenString path;
            int cur = node;
            while (!tree_.node(cur).leaf()) {
                const Bit b = e2e(cls_[i], *tree_.node(cur).instance, M_);
                path.push_back(b);
                cur = tree_.node(cur).child[b];
            }
            realized.insert(path);
        }
        std::size_t leaves = 0;
        std::function<void(int)> count = [&](int c) {
            if (tree_.node(c).leaf()) ++leaves;
            else {
                count(tree_.node(c).child[0]);
                count(tree_.node(c).child[1]);
            }
        };
        count(node);
        return realized.size() == leaves;
    }

    GeneratorList cls_;
    dims::LittlestoneTree tree_;
    std::uint64_t M_;
    FeedbackMode mode_;
    TieBreak tie_;
    rng::Stream rng_;
    Survivors alive_;
    int node_ = 0;
};

// Wraps an adversary for m-dimensional thresholds (played with M = 1 and
// end-to-end feedback) into one for the latched class on {0,1}^m 10.
class LatchAdversary : public Adversary {
public:
    LatchAdversary(std::unique_ptr<Adversary> inner, const std::vector<classes::LinearGen>& inner_class,
                   std::uint64_t M, FeedbackMode mode)
        : inner_(std::move(inner)), M_(M), mode_(mode) {
        for (const auto& g : inner_class) cls_.push_back(classes::as_generator(classes::latch_embed(g.w, g.b).gen));
    }

    std::optional<TokenString> next_instance() override {
        auto z = inner_->next_instance();
        if (!z) return std::nullopt;
        return *z + TokenString("10");
    }

    TokenString feedback(const TokenString& x, Bit prediction) override {
        if (x.size() < 2 || x.suffix(2) != TokenString("10"))
            throw std::logic_error("latch_adversary: instance does not end in 10");
        const TokenString y = inner_->feedback(x.prefix(x.size() - 2), prediction);
        if (y.size() != 1) throw std::logic_error("latch_adversary: inner feedback must be a single bit");
        return mode_ == FeedbackMode::COT ? TokenString::repeat(y.back(), M_) : y;
    }

    const GeneratorList& declared_class() const override { return cls_; }
    std::string name() const override { return "latch(" + inner_->name() + ")"; }

private:
    std::unique_ptr<Adversary> inner_;
    GeneratorList cls_;
    std::uint64_t M_;
    FeedbackMode mode_;
};

}  // namespace arlab::game
