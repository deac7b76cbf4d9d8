#pragma once

// Minimax-optimal learners on a finite pool, used as oracles for the
// exhaustive search.

#include "arlab/dims/littlestone.hpp"
#include "arlab/dims/optimal.hpp"
#include "arlab/game/protocol.hpp"

#include <memory>
#include <stdexcept>

namespace arlab::game {

namespace detail {

// Version space over a trajectory table; feedback of length 1 is matched
// against final bits, longer feedback against whole trajectories.
class TableVersionSpace {
public:
    explicit TableVersionSpace(std::shared_ptr<const dims::TrajectoryTable> table)
        : table_(std::move(table)), v_(dims::VersionSubset::full(table_->members())) {}

    std::size_t index(const TokenString& x) const {
        const auto i = table_->instance_index(x);
        if (!i) throw std::out_of_range("learner: instance outside its pool");
        return *i;
    }

    void restrict(const TokenString& x, const TokenString& fb) {
        const std::size_t i = index(x);
        dims::VersionSubset keep(table_->members());
        for (std::size_t m : v_.members()) {
            const TokenString& t = table_->label(m, i);
            if (fb.size() == 1 ? t.back() == fb.back() : t == fb) keep.insert(m);
        }
        if (keep.empty()) throw RealizabilityError("learner: feedback inconsistent with every survivor");
        v_ = std::move(keep);
    }

    const dims::TrajectoryTable& table() const { return *table_; }
    const dims::VersionSubset& survivors() const { return v_; }

private:
    std::shared_ptr<const dims::TrajectoryTable> table_;
    dims::VersionSubset v_;
};

}  // namespace detail

// Predicts the label whose restricted version space has the larger
// Littlestone dimension of end-to-end outputs.
class MinimaxE2ELearner : public Learner {
public:
    MinimaxE2ELearner(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
        auto table = std::make_shared<const dims::TrajectoryTable>(dims::cot_table(cls, pool, M));
        engine_ = std::make_shared<dims::LittlestoneEngine>(dims::final_bits(*table));
        vs_ = std::make_shared<detail::TableVersionSpace>(table);
    }

    Bit predict(const TokenString& x) override {
        const std::size_t i = vs_->index(x);
        int best[2] = {-1, -1};
        for (std::size_t m : vs_->survivors().members()) best[vs_->table().label(m, i).back()] = 0;
        for (Bit y : {Bit{0}, Bit{1}}) {
            if (best[y] < 0) continue;
            dims::VersionSubset side(vs_->table().members());
            for (std::size_t m : vs_->survivors().members())
                if (vs_->table().label(m, i).back() == y) side.insert(m);
            best[y] = engine_->dimension(side);
        }
        return best[1] >= best[0] ? 1 : 0;
    }

    void update(const TokenString& x, const TokenString& fb) override {
        auto next = std::make_shared<detail::TableVersionSpace>(*vs_);
        next->restrict(x, TokenString() + fb.back());
        vs_ = std::move(next);
    }

    std::unique_ptr<Learner> clone() const override { return std::make_unique<MinimaxE2ELearner>(*this); }
    std::string fingerprint() const override { return vs_->survivors().to_string(); }
    std::string name() const override { return "minimax-e2e"; }

private:
    std::shared_ptr<dims::LittlestoneEngine> engine_;  // shared memo across clones
    std::shared_ptr<const detail::TableVersionSpace> vs_;
};

// Predicts the bit minimizing the worst-case value of the trajectory game.
class MinimaxCotLearner : public Learner {
public:
    MinimaxCotLearner(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
        auto table = std::make_shared<const dims::TrajectoryTable>(dims::cot_table(cls, pool, M));
        engine_ = std::make_shared<dims::CotGameEngine>(*table);
        vs_ = std::make_shared<detail::TableVersionSpace>(table);
    }

    Bit predict(const TokenString& x) override {
        const std::size_t i = vs_->index(x);
        if (const auto c = engine_->costs(vs_->survivors(), i)) return (*c)[1] <= (*c)[0] ? 1 : 0;
        return vs_->table().label(vs_->survivors().first(), i).back();
    }

    void update(const TokenString& x, const TokenString& fb) override {
        auto next = std::make_shared<detail::TableVersionSpace>(*vs_);
        next->restrict(x, fb);
        vs_ = std::move(next);
    }

    std::unique_ptr<Learner> clone() const override { return std::make_unique<MinimaxCotLearner>(*this); }
    std::string fingerprint() const override { return vs_->survivors().to_string(); }
    std::string name() const override { return "minimax-cot"; }

private:
    std::shared_ptr<dims::CotGameEngine> engine_;
    std::shared_ptr<const detail::TableVersionSpace> vs_;
};

}  // namespace arlab::game
