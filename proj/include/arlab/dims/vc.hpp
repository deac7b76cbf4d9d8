#pragma once

// VC dimension by level-wise search: a set of size k can only be shattered if
// every subset of size k-1 is, so candidates of size k extend shattered sets of
// size k-1 by a larger index. The search stops at the first empty level.

#include "arlab/dims/class_table.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace arlab::dims {

struct VcResult {
    int dimension = 0;
    std::vector<std::size_t> witness;  // pool indices of one largest shattered set
};

inline bool shatters(const BinaryTable& table, const std::vector<std::size_t>& set) {
    if (set.size() > 24) throw std::length_error("shatters: set too large");
    const std::size_t need = std::size_t{1} << set.size();
    if (table.members() < need) return false;
    std::vector<char> seen(need, 0);
    std::size_t hit = 0;
    for (std::size_t m = 0; m < table.members(); ++m) {
        std::size_t code = 0;
        for (std::size_t k = 0; k < set.size(); ++k) code |= std::size_t{table.label(m, set[k])} << k;
        if (!seen[code]) {
            seen[code] = 1;
            if (++hit == need) return true;
        }
    }
    return false;
}

inline VcResult vc_search(const BinaryTable& table) {
    if (table.empty()) throw EmptyClassError();
    VcResult result;
    std::vector<std::vector<std::size_t>> level{{}};
    while (!level.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : level) {
            const std::size_t from = s.empty() ? 0 : s.back() + 1;
            for (std::size_t j = from; j < table.instances(); ++j) {
                std::vector<std::size_t> t = s;
                t.push_back(j);
                if (shatters(table, t)) next.push_back(std::move(t));
            }
        }
        if (next.empty()) break;
        result.dimension = static_cast<int>(next.front().size());
        result.witness = next.front();
        level = std::move(next);
    }
    return result;
}

inline int vc_dim(const BinaryTable& table) { return vc_search(table).dimension; }

}  // namespace arlab::dims
