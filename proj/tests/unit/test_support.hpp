#pragma once

#include "arlab/classes/random.hpp"
#include "arlab/core/generation.hpp"
#include "arlab/dims/class_table.hpp"
#include "arlab/util/rng.hpp"

#include <string>
#include <vector>

namespace testsupport {

using namespace arlab;

using classes::hashed_generator;
using classes::random_class;
using classes::random_pool;
using classes::random_string;

inline dims::BinaryTable random_binary_table(rng::Stream& s, std::size_t members, std::size_t instances) {
    std::vector<TokenString> pool;
    for (std::size_t i = 0; i < instances; ++i) pool.push_back(TokenString::repeat(1, i));
    std::vector<std::string> ids;
    std::vector<std::vector<Bit>> rows;
    for (std::size_t m = 0; m < members; ++m) {
        ids.push_back("m" + std::to_string(m));
        std::vector<Bit> row;
        for (std::size_t i = 0; i < instances; ++i) row.push_back(static_cast<Bit>(s.below(2)));
        rows.push_back(row);
    }
    return dims::BinaryTable(pool, ids, rows);
}

// Unmemoized Littlestone recursion over explicit member lists.
template <class Label>
int brute_littlestone(const dims::ClassTable<Label>& t, const std::vector<std::size_t>& alive) {
    int best = 0;
    for (std::size_t i = 0; i < t.instances(); ++i) {
        std::vector<std::pair<Label, std::vector<std::size_t>>> groups;
        for (std::size_t m : alive) {
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t.label(m, i); });
            if (it == groups.end()) groups.push_back({t.label(m, i), {m}});
            else it->second.push_back(m);
        }
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                best = std::max(best, 1 + std::min(brute_littlestone(t, groups[a].second),
                                                   brute_littlestone(t, groups[b].second)));
    }
    return best;
}

template <class Label>
int brute_littlestone(const dims::ClassTable<Label>& t) {
    std::vector<std::size_t> all(t.members());
    for (std::size_t m = 0; m < all.size(); ++m) all[m] = m;
    return brute_littlestone(t, all);
}

}  // namespace testsupport
