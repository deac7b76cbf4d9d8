#pragma once

// Worst case of a deterministic learner over every adaptive realizable
// adversary on a finite pool: the adversary picks an instance, sees the
// prediction, and answers with any feedback some surviving member produces.

#include "arlab/dims/class_table.hpp"
#include "arlab/game/protocol.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace arlab::game {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, std::uint64_t partial)
        : std::runtime_error(what + " (partial bound " + std::to_string(partial) + ")"), partial(partial) {}
    std::uint64_t partial;
};

class ExhaustiveSearch {
public:
    ExhaustiveSearch(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M,
                     FeedbackMode mode, std::uint64_t node_budget = 20'000'000)
        : pool_(pool), budget_(node_budget) {
        const auto table = dims::cot_table(cls, pool, M);
        if (table.empty()) throw dims::EmptyClassError();
        members_ = table.members();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            std::vector<Part> parts;
            for (auto& [traj, subset] : table.partition(i)) {
                const TokenString fb = mode == FeedbackMode::COT ? traj : TokenString() + traj.back();
                auto it = std::find_if(parts.begin(), parts.end(), [&](const Part& p) { return p.feedback == fb; });
                if (it == parts.end()) parts.push_back({fb, subset});
                else it->members |= subset;
            }
            std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.feedback < b.feedback; });
            parts_.push_back(std::move(parts));
        }
    }

    std::uint64_t worst_case(const Learner& learner, std::uint64_t horizon) {
        nodes_ = 0;
        partial_ = 0;
        memo_.clear();
        return search(learner, dims::VersionSubset::full(members_), horizon, true);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    struct Part {
        TokenString feedback;
        dims::VersionSubset members;
    };

    std::uint64_t search(const Learner& learner, const dims::VersionSubset& v, std::uint64_t h, bool root = false) {
        if (h == 0) return 0;
        if (++nodes_ > budget_) throw BudgetExceeded("exhaustive_worst_case: node budget exceeded", partial_);
        const std::string fp = learner.fingerprint();
        std::string key;
        if (!fp.empty()) {
            key = fp + '|' + v.to_string() + '|' + std::to_string(h);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        std::uint64_t best = 0;
        for (std::size_t i = 0; i < pool_.size() && best < h; ++i) {
            std::vector<const Part*> live;
            std::vector<dims::VersionSubset> restricted;
            for (const Part& p : parts_[i]) {
                dims::VersionSubset r = p.members & v;
                if (r.empty()) continue;
                live.push_back(&p);
                restricted.push_back(std::move(r));
            }
            auto probe = learner.clone();
            const Bit pred = probe->predict(pool_[i]);
            for (std::size_t k = 0; k < live.size() && best < h; ++k) {
                auto next = probe->clone();
                next->update(pool_[i], live[k]->feedback);
                const bool mistake = pred != live[k]->feedback.back();
                const bool stalled = live.size() == 1 && !fp.empty() && next->fingerprint() == fp;
                std::uint64_t value;
                if (stalled && !mistake) continue;  // nothing changes
                if (stalled) value = h;             // the same mistake can be repeated every round
                else value = (mistake ? 1 : 0) + search(*next, restricted[k], h - 1);
                best = std::max(best, value);
                if (root) partial_ = std::max(partial_, best);
            }
        }
        if (!fp.empty()) memo_.emplace(std::move(key), best);
        return best;
    }

    std::vector<TokenString> pool_;
    std::size_t members_ = 0;
    std::vector<std::vector<Part>> parts_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::uint64_t partial_ = 0;
    std::unordered_map<std::string, std::uint64_t> memo_;
};

// Value of the end-to-end mistake game on a table, by direct minimax over
// version spaces: the adversary picks an instance, the learner a bit, the
// adversary any label some survivor produces. Instances on which all
// survivors agree are skipped since they cost nothing and change nothing.
inline int minimax_game_value(const dims::BinaryTable& t) {
    std::unordered_map<std::string, int> memo;
    std::function<int(const std::vector<std::size_t>&)> value = [&](const std::vector<std::size_t>& v) -> int {
        std::string key;
        for (std::size_t m : v) key += std::to_string(m) + ',';
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int best = 0;
        for (std::size_t i = 0; i < t.instances(); ++i) {
            std::vector<std::size_t> side[2];
            for (std::size_t m : v) side[t.label(m, i)].push_back(m);
            if (side[0].empty() || side[1].empty()) continue;
            const int rest[2] = {value(side[0]), value(side[1])};
            int learner_best = INT32_MAX;
            for (int guess : {0, 1}) {
                int adversary_best = 0;
                for (int y : {0, 1}) adversary_best = std::max(adversary_best, (y != guess ? 1 : 0) + rest[y]);
                learner_best = std::min(learner_best, adversary_best);
            }
            best = std::max(best, learner_best);
        }
        memo.emplace(std::move(key), best);
        return best;
    };
    std::vector<std::size_t> all(t.members());
    for (std::size_t m = 0; m < all.size(); ++m) all[m] = m;
    return value(all);
}

inline std::uint64_t exhaustive_worst_case(const Learner& learner, const GeneratorList& cls,
                                           const std::vector<TokenString>& pool, std::uint64_t M, FeedbackMode mode,
                                           std::uint64_t horizon, std::uint64_t node_budget = 20'000'000) {
    return ExhaustiveSearch(cls, pool, M, mode, node_budget).worst_case(learner, horizon);
}

}  // namespace arlab::game
