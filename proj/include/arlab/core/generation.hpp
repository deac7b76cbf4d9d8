#pragma once

// Autoregressive generation: apply-and-append, the M-step chain of thought,
// the end-to-end output and generation trees.

#include "arlab/core/generator.hpp"
#include "arlab/core/token_string.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace arlab {

inline TokenString apply_and_append(const Generator& g, const TokenString& x) {
    TokenString out = x;
    out.push_back(g(x));
    return out;
}

// The length-M suffix of the M-fold apply-and-append iteration.
inline TokenString cot(const Generator& g, const TokenString& x, std::uint64_t M) {
    if (M < 1) throw std::invalid_argument("cot: M must be >= 1");
    TokenString current = x;
    TokenString trajectory;
    for (std::uint64_t i = 0; i < M; ++i) {
        const Bit b = g(current);
        current.push_back(b);
        trajectory.push_back(b);
    }
    return trajectory;
}

inline Bit e2e(const Generator& g, const TokenString& x, std::uint64_t M) { return cot(g, x, M).back(); }

// Perfect binary tree of depth M rooted at x; the node reached by edge labels u
// carries the instance x + u. Nodes are implicit.
class GenerationTree {
public:
    GenerationTree(TokenString root, std::uint64_t depth) : root_(std::move(root)), depth_(depth) {
        if (depth_ < 1) throw std::invalid_argument("generation_tree: M must be >= 1");
    }

    const TokenString& root() const { return root_; }
    std::uint64_t depth() const { return depth_; }

    TokenString node(const TokenString& u) const {
        if (u.size() > depth_) throw std::out_of_range("GenerationTree::node: prefix longer than depth");
        return root_ + u;
    }

    // All node instances in breadth-first order, left (0) before right (1).
    std::vector<TokenString> nodes() const {
        std::vector<TokenString> out{root_};
        std::size_t level_begin = 0;
        for (std::uint64_t d = 0; d < depth_; ++d) {
            const std::size_t level_end = out.size();
            for (std::size_t i = level_begin; i < level_end; ++i) {
                out.push_back(out[i] + Bit{0});
                out.push_back(out[i] + Bit{1});
            }
            level_begin = level_end;
        }
        return out;
    }

    // Edge-label sequences of all 2^M branches in lexicographic order.
    std::vector<TokenString> branches() const { return all_strings(depth_); }

    bool contains_branch(const TokenString& b) const { return b.size() == depth_; }

    static std::vector<TokenString> all_strings(std::uint64_t n) {
        if (n > 24) throw std::length_error("GenerationTree: too many branches to enumerate");
        std::vector<TokenString> out;
        out.reserve(std::size_t{1} << n);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
            TokenString s;
            for (std::uint64_t i = 0; i < n; ++i) s.push_back(static_cast<Bit>((code >> (n - 1 - i)) & 1));
            out.push_back(std::move(s));
        }
        return out;
    }

private:
    TokenString root_;
    std::uint64_t depth_;
};

inline GenerationTree generation_tree(const TokenString& x, std::uint64_t M) { return GenerationTree(x, M); }

// The branch of generation_tree(x, M) followed by g.
inline TokenString trajectory_branch(const Generator& g, const TokenString& x, std::uint64_t M) {
    return cot(g, x, M);
}

// All strings of length at most n, shortest first, lexicographic within a length.
inline std::vector<TokenString> strings_up_to(std::uint64_t n) {
    std::vector<TokenString> out;
    for (std::uint64_t len = 0; len <= n; ++len) {
        auto level = GenerationTree::all_strings(len);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Every instance that generation from a pool element can query within M steps:
// x + u for x in pool and |u| < M. Deduplicated, first-seen order.
inline std::vector<TokenString> generation_closure(const std::vector<TokenString>& pool, std::uint64_t M) {
    std::vector<TokenString> out;
    std::unordered_set<TokenString> seen;
    for (const TokenString& x : pool) {
        for (std::uint64_t len = 0; len < M; ++len) {
            for (const TokenString& u : GenerationTree::all_strings(len)) {
                TokenString y = x + u;
                if (seen.insert(y).second) out.push_back(std::move(y));
            }
        }
    }
    return out;
}

}  // namespace arlab
