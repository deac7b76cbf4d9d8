#pragma once

// Optimal mistake bounds for the two feedback regimes on a finite class and pool.

#include "arlab/dims/class_table.hpp"
#include "arlab/dims/littlestone.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arlab::dims {

inline int optimal_e2e_mistake_bound(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
    return littlestone_dim(e2e_table(cls, pool, M).dedup());
}

// Game value when the full trajectory is revealed but only the final bit is
// scored. Instances with a single consistent trajectory are skipped: the
// learner predicts that trajectory's final bit and the version space is unchanged.
class CotGameEngine {
public:
    explicit CotGameEngine(const TrajectoryTable& table) : members_(table.members()) {
        if (table.empty()) throw EmptyClassError();
        for (std::size_t i = 0; i < table.instances(); ++i) {
            std::vector<Group> g;
            for (auto& [label, subset] : table.partition(i)) g.push_back({label.back(), std::move(subset)});
            groups_.push_back(std::move(g));
        }
    }

    int value() { return value(VersionSubset::full(members_)); }

    int value(const VersionSubset& v) {
        if (v.count() <= 1) return 0;
        if (auto it = memo_.find(v); it != memo_.end()) return it->second;
        int best = 0;
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            const auto c = costs(v, i);
            if (c) best = std::max(best, std::min((*c)[0], (*c)[1]));
        }
        memo_.emplace(v, best);
        return best;
    }

    // Worst-case future mistakes after predicting each bit on an instance, or
    // nullopt when fewer than two trajectories survive there.
    std::optional<std::array<int, 2>> costs(const VersionSubset& v, std::size_t instance) {
        std::vector<std::pair<Bit, VersionSubset>> parts;
        for (const Group& g : groups_[instance]) {
            VersionSubset r = g.members & v;
            if (!r.empty()) parts.emplace_back(g.last, std::move(r));
        }
        if (parts.size() < 2) return std::nullopt;
        std::array<int, 2> cost{0, 0};
        for (const auto& [last, r] : parts) {
            const int rest = value(r);
            for (Bit y : {Bit{0}, Bit{1}}) cost[y] = std::max(cost[y], (last != y ? 1 : 0) + rest);
        }
        return cost;
    }

private:
    struct Group {
        Bit last;
        VersionSubset members;
    };
    std::size_t members_;
    std::vector<std::vector<Group>> groups_;
    std::unordered_map<VersionSubset, int, VersionSubsetHash> memo_;
};

inline int optimal_cot_mistake_bound(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
    return CotGameEngine(cot_table(cls, pool, M).dedup()).value();
}

}  // namespace arlab::dims
