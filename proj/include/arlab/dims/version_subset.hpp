#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace arlab::dims {

// A subset of the member indices [0, n) of a class table, packed into 64-bit
// words. Equal subsets have equal word vectors, so the subset itself is a
// canonical memoization key.
class VersionSubset {
public:
    VersionSubset() = default;
    explicit VersionSubset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static VersionSubset full(std::size_t n) {
        VersionSubset s(n);
        for (std::size_t i = 0; i < n; ++i) s.insert(i);
        return s;
    }

    std::size_t universe() const { return n_; }

    void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        throw std::out_of_range("VersionSubset::first on empty subset");
    }

    VersionSubset& operator&=(const VersionSubset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    VersionSubset& operator|=(const VersionSubset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    friend VersionSubset operator&(VersionSubset a, const VersionSubset& b) { return a &= b; }
    friend VersionSubset operator|(VersionSubset a, const VersionSubset& b) { return a |= b; }

    bool subset_of(const VersionSubset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~o.words_[k]) != 0) return false;
        return true;
    }

    bool operator==(const VersionSubset&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::size_t hash() const {
        std::size_t h = n_;
        for (std::uint64_t w : words_) h = h * 0x100000001b3ULL ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t k = words_.size(); k-- > 0;) {
            static constexpr char hex[] = "0123456789abcdef";
            for (int nib = 15; nib >= 0; --nib) s += hex[(words_[k] >> (4 * nib)) & 0xF];
        }
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VersionSubsetHash {
    std::size_t operator()(const VersionSubset& s) const noexcept { return s.hash(); }
};

}  // namespace arlab::dims
