#pragma once

// Exact Littlestone dimension by the split recursion
//   L(V) = max over instances x and distinct labels y != y' realized on x of
//          1 + min(L(V_{x->y}), L(V_{x->y'}))
// memoized on the version subset. With binary labels this is the usual
// dimension; with trajectory labels it is the multiclass one.

#include "arlab/dims/class_table.hpp"
#include "arlab/dims/tree.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arlab::dims {

class LittlestoneEngine {
public:
    template <class Label>
    explicit LittlestoneEngine(const ClassTable<Label>& table) : members_(table.members()) {
        if (table.empty()) throw EmptyClassError();
        groups_.reserve(table.instances());
        for (std::size_t i = 0; i < table.instances(); ++i) {
            std::vector<VersionSubset> g;
            for (auto& [label, subset] : table.partition(i)) g.push_back(std::move(subset));
            groups_.push_back(std::move(g));
        }
    }

    std::size_t members() const { return members_; }
    VersionSubset all() const { return VersionSubset::full(members_); }

    int dimension() { return dimension(all()); }

    int dimension(const VersionSubset& v) {
        const std::size_t n = v.count();
        if (n <= 1) return 0;
        if (auto it = memo_.find(v); it != memo_.end()) return it->second;

        const int cap = floor_log2(n);
        int best = 0;
        std::vector<VersionSubset> parts;
        for (std::size_t i = 0; i < groups_.size() && best < cap; ++i) {
            restrict_groups(i, v, parts);
            if (parts.size() < 2) continue;
            // Only parts that could still reach L >= best matter for a pair improving on best.
            std::sort(parts.begin(), parts.end(),
                      [](const VersionSubset& a, const VersionSubset& b) { return a.count() > b.count(); });
            if (floor_log2(parts[1].count()) < best) continue;
            int top = -1, second = -1;
            for (const VersionSubset& p : parts) {
                if (floor_log2(p.count()) <= second) break;
                const int d = dimension(p);
                if (d > top) {
                    second = top;
                    top = d;
                } else if (d > second) {
                    second = d;
                }
            }
            best = std::max(best, 1 + second);
        }
        memo_.emplace(v, best);
        return best;
    }

    // Instance index and the label groups of a split achieving dimension(v),
    // or nullopt when dimension(v) == 0.
    std::optional<std::pair<std::size_t, std::pair<VersionSubset, VersionSubset>>> best_split(const VersionSubset& v) {
        const int d = dimension(v);
        if (d == 0) return std::nullopt;
        std::vector<VersionSubset> parts;
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            restrict_groups(i, v, parts);
            std::vector<const VersionSubset*> good;
            for (const VersionSubset& p : parts)
                if (dimension(p) >= d - 1) good.push_back(&p);
            if (good.size() >= 2) return std::make_pair(i, std::make_pair(*good[0], *good[1]));
        }
        return std::nullopt;
    }

    const std::vector<VersionSubset>& groups(std::size_t instance) const { return groups_[instance]; }
    std::size_t memo_size() const { return memo_.size(); }

    static int floor_log2(std::size_t n) { return n == 0 ? -1 : static_cast<int>(std::bit_width(n)) - 1; }

private:
    void restrict_groups(std::size_t i, const VersionSubset& v, std::vector<VersionSubset>& out) const {
        out.clear();
        for (const VersionSubset& g : groups_[i]) {
            VersionSubset r = g & v;
            if (!r.empty()) out.push_back(std::move(r));
        }
    }

    std::size_t members_;
    std::vector<std::vector<VersionSubset>> groups_;
    std::unordered_map<VersionSubset, int, VersionSubsetHash> memo_;
};

inline int littlestone_dim(const BinaryTable& table) { return LittlestoneEngine(table).dimension(); }

inline int littlestone_dim_multiclass(const TrajectoryTable& table) { return LittlestoneEngine(table).dimension(); }

// A perfect tree of the given depth (default: the dimension) shattered by a
// binary table. Throws when the depth exceeds the dimension.
inline LittlestoneTree shattered_tree(const BinaryTable& table, std::optional<int> depth = std::nullopt) {
    LittlestoneEngine engine(table);
    const int target = depth.value_or(engine.dimension());
    if (target > engine.dimension()) throw std::invalid_argument("shattered_tree: depth exceeds dimension");
    std::function<LittlestoneTree(const VersionSubset&, int)> build = [&](const VersionSubset& v,
                                                                         int d) -> LittlestoneTree {
        if (d == 0) return LittlestoneTree::leaf();
        for (std::size_t i = 0; i < table.instances(); ++i) {
            VersionSubset side[2] = {VersionSubset(table.members()), VersionSubset(table.members())};
            for (std::size_t m : v.members()) side[table.label(m, i)].insert(m);
            if (side[0].empty() || side[1].empty()) continue;
            if (engine.dimension(side[0]) >= d - 1 && engine.dimension(side[1]) >= d - 1)
                return LittlestoneTree::internal(table.pool()[i], build(side[0], d - 1), build(side[1], d - 1));
        }
        throw std::logic_error("shattered_tree: no split found");
    };
    return build(engine.all(), target);
}

}  // namespace arlab::dims
