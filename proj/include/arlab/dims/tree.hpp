#pragma once

// Instance-labeled binary trees with edge labels 0 and 1. The child reached by
// the edge labeled b is child(b). A node with no instance is a leaf.

#include "arlab/core/token_string.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace arlab::dims {

class LittlestoneTree {
public:
    struct Node {
        std::optional<TokenString> instance;
        int child[2] = {-1, -1};
        bool leaf() const { return !instance.has_value(); }
    };

    LittlestoneTree() : nodes_{Node{}} {}

    static LittlestoneTree leaf() { return LittlestoneTree(); }

    static LittlestoneTree internal(TokenString instance, const LittlestoneTree& left, const LittlestoneTree& right) {
        LittlestoneTree t;
        t.nodes_[0].instance = std::move(instance);
        t.nodes_[0].child[0] = t.graft(left);
        t.nodes_[0].child[1] = t.graft(right);
        return t;
    }

    // Perfect tree of the given depth; the node reached by edge labels u carries label(u).
    static LittlestoneTree perfect(std::size_t depth, const std::function<TokenString(const TokenString&)>& label) {
        std::function<LittlestoneTree(const TokenString&)> build = [&](const TokenString& u) -> LittlestoneTree {
            if (u.size() == depth) return leaf();
            return internal(label(u), build(u + Bit{0}), build(u + Bit{1}));
        };
        return build(TokenString());
    }

    const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    const Node& root() const { return nodes_[0]; }
    std::size_t size() const { return nodes_.size(); }

    // Length of the longest root-to-leaf path.
    std::size_t depth() const { return depth_from(0); }

    // True when every leaf sits at the same depth.
    bool perfect() const {
        const std::size_t d = depth();
        bool ok = true;
        walk([&](int i, const TokenString& path) {
            if (nodes_[i].leaf() && path.size() != d) ok = false;
        });
        return ok;
    }

    // Edge-label sequences of all root-to-leaf paths, left before right.
    std::vector<TokenString> branches() const {
        std::vector<TokenString> out;
        walk([&](int i, const TokenString& path) {
            if (nodes_[i].leaf()) out.push_back(path);
        });
        return out;
    }

    // Instances along one branch, one per edge.
    std::vector<TokenString> instances_along(const TokenString& branch) const {
        std::vector<TokenString> out;
        int cur = 0;
        for (std::uint64_t k = 0; k < branch.size(); ++k) {
            const Node& n = nodes_[cur];
            if (n.leaf()) throw std::out_of_range("LittlestoneTree: branch longer than tree path");
            out.push_back(*n.instance);
            cur = n.child[branch[k]];
        }
        if (!nodes_[cur].leaf()) throw std::invalid_argument("LittlestoneTree: branch does not end at a leaf");
        return out;
    }

    // Distinct instances on internal nodes, in preorder.
    std::vector<TokenString> instances() const {
        std::vector<TokenString> out;
        std::unordered_set<TokenString> seen;
        walk([&](int i, const TokenString&) {
            if (!nodes_[i].leaf() && seen.insert(*nodes_[i].instance).second) out.push_back(*nodes_[i].instance);
        });
        return out;
    }

    // Preorder traversal with the edge-label path to each node.
    template <class F>
    void walk(F&& visit) const {
        TokenString path;
        walk_from(0, path, visit);
    }

private:
    int graft(const LittlestoneTree& sub) {
        const int offset = static_cast<int>(nodes_.size());
        for (Node n : sub.nodes_) {
            for (int& c : n.child)
                if (c >= 0) c += offset;
            nodes_.push_back(std::move(n));
        }
        return offset;
    }

    std::size_t depth_from(int i) const {
        const Node& n = nodes_[i];
        if (n.leaf()) return 0;
        return 1 + std::max(depth_from(n.child[0]), depth_from(n.child[1]));
    }

    template <class F>
    void walk_from(int i, TokenString& path, F& visit) const {
        visit(i, path);
        const Node& n = nodes_[i];
        if (n.leaf()) return;
        for (Bit b : {Bit{0}, Bit{1}}) {
            TokenString next = path + b;
            walk_from(n.child[b], next, visit);
        }
    }

    std::vector<Node> nodes_;
};

}  // namespace arlab::dims
