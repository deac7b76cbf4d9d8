#pragma once

// Branch counting on Littlestone trees, the binomial-sum bound and tree
// inflation by generation trees.

#include "arlab/core/generation.hpp"
#include "arlab/dims/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

namespace arlab::dims {

// Branches b of the tree such that some member agrees with every
// (instance, edge label) pair along b. label(member, instance) gives the bit.
template <class Labeler>
std::set<TokenString> realized_branches(std::size_t members, const LittlestoneTree& tree, Labeler&& label) {
    std::set<TokenString> out;
    std::vector<std::size_t> all(members);
    for (std::size_t m = 0; m < members; ++m) all[m] = m;
    std::function<void(int, const std::vector<std::size_t>&, TokenString&)> go =
        [&](int i, const std::vector<std::size_t>& alive, TokenString& path) {
            if (alive.empty()) return;
            const auto& node = tree.node(i);
            if (node.leaf()) {
                out.insert(path);
                return;
            }
            std::vector<std::size_t> side[2];
            for (std::size_t m : alive) side[label(m, *node.instance) ? 1 : 0].push_back(m);
            for (Bit b : {Bit{0}, Bit{1}}) {
                path.push_back(b);
                go(node.child[b], side[b], path);
                path = path.prefix(path.size() - 1);
            }
        };
    TokenString path;
    go(0, all, path);
    return out;
}

// Next-token labels g(x).
inline std::set<TokenString> realized_branches(const GeneratorList& cls, const LittlestoneTree& tree) {
    return realized_branches(cls.size(), tree, [&](std::size_t m, const TokenString& x) { return cls[m](x); });
}

// End-to-end labels after M generation steps.
inline std::set<TokenString> realized_branches_e2e(const GeneratorList& cls, const LittlestoneTree& tree,
                                                   std::uint64_t M) {
    return realized_branches(cls.size(), tree, [&](std::size_t m, const TokenString& x) { return e2e(cls[m], x, M); });
}

inline bool shattered_by(const GeneratorList& cls, const LittlestoneTree& tree, std::uint64_t M) {
    return realized_branches_e2e(cls, tree, M).size() == tree.branches().size();
}

// Sum of C(n, i) for i = 0..min(d, n). Throws on 64-bit overflow.
inline std::uint64_t ssp_bound(std::uint64_t n, std::uint64_t d) {
    const std::uint64_t top = std::min(d, n);
    unsigned __int128 c = 1, sum = 1;
    constexpr unsigned __int128 limit = ~std::uint64_t{0};
    for (std::uint64_t i = 1; i <= top; ++i) {
        c = c * (n - i + 1) / i;
        sum += c;
        if (c > limit || sum > limit) throw std::overflow_error("ssp_bound: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(sum);
}

// Replaces every internal node of the base tree by the depth-M generation tree
// of its instance. A leaf of that generation tree whose last edge is labeled b
// continues with the inflation of the base subtree behind edge b. The class
// plays no role in the construction.
inline LittlestoneTree inflate_tree(const LittlestoneTree& base, std::uint64_t M) {
    if (M < 1) throw std::invalid_argument("inflate_tree: M must be >= 1");
    std::function<LittlestoneTree(int)> inflate = [&](int i) -> LittlestoneTree {
        const auto& node = base.node(i);
        if (node.leaf()) return LittlestoneTree::leaf();
        const LittlestoneTree tail[2] = {inflate(node.child[0]), inflate(node.child[1])};
        const TokenString& x = *node.instance;
        std::function<LittlestoneTree(const TokenString&)> gen = [&](const TokenString& u) -> LittlestoneTree {
            return LittlestoneTree::internal(x + u,
                                             u.size() + 1 == M ? tail[0] : gen(u + Bit{0}),
                                             u.size() + 1 == M ? tail[1] : gen(u + Bit{1}));
        };
        return gen(TokenString());
    };
    return inflate(0);
}

}  // namespace arlab::dims
