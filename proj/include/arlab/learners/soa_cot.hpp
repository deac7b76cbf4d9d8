#pragma once

// The standard optimal algorithm under trajectory feedback: among surviving
// trajectories on x, follow the one whose restricted version space has the
// largest multiclass Littlestone dimension and predict its final bit.

#include "arlab/dims/littlestone.hpp"
#include "arlab/game/minimax.hpp"

#include <memory>

namespace arlab::learners {

class SoaCot : public game::Learner {
public:
    SoaCot(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
        auto table = std::make_shared<const dims::TrajectoryTable>(dims::cot_table(cls, pool, M));
        engine_ = std::make_shared<dims::LittlestoneEngine>(*table);
        vs_ = std::make_shared<game::detail::TableVersionSpace>(table);
    }

    Bit predict(const TokenString& x) override {
        const std::size_t i = vs_->index(x);
        int best = -1;
        const TokenString* pick = nullptr;
        const auto parts = groups(i);
        for (const auto& [traj, members] : parts) {
            const int d = engine_->dimension(members);
            if (d > best || (d == best && traj < *pick)) {
                best = d;
                pick = &traj;
            }
        }
        last_ = *pick;
        return pick->back();
    }

    void update(const TokenString& x, const TokenString& fb) override {
        auto next = std::make_shared<game::detail::TableVersionSpace>(*vs_);
        next->restrict(x, fb);
        vs_ = std::move(next);
    }

    std::unique_ptr<game::Learner> clone() const override { return std::make_unique<SoaCot>(*this); }
    std::string fingerprint() const override { return vs_->survivors().to_string(); }
    std::string name() const override { return "soa-cot"; }

    // Multiclass dimension of the current version space.
    int dimension() const { return engine_->dimension(vs_->survivors()); }
    const TokenString& last_branch() const { return last_; }

private:
    std::vector<std::pair<TokenString, dims::VersionSubset>> groups(std::size_t i) const {
        std::vector<std::pair<TokenString, dims::VersionSubset>> out;
        for (std::size_t m : vs_->survivors().members()) {
            const TokenString& t = vs_->table().label(m, i);
            auto it = std::find_if(out.begin(), out.end(), [&](const auto& g) { return g.first == t; });
            if (it == out.end()) {
                out.emplace_back(t, dims::VersionSubset(vs_->table().members()));
                it = std::prev(out.end());
            }
            it->second.insert(m);
        }
        return out;
    }

    std::shared_ptr<dims::LittlestoneEngine> engine_;
    std::shared_ptr<const game::detail::TableVersionSpace> vs_;
    TokenString last_;
};

}  // namespace arlab::learners
