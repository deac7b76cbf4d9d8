#pragma once

// Binary token strings stored as maximal runs.
//
// Constructions in this library routinely build strings such as 0^s 1 0^k
// with s in the tens of thousands, so the representation keeps one entry per
// run together with its exclusive end offset. Externally a TokenString is a
// plain sequence of bits: equality, ordering and hashing depend only on the
// bit sequence.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arlab {

using Bit = std::uint8_t;

class TokenString {
public:
    struct Run {
        Bit bit;
        std::uint64_t end;  // exclusive offset of the run's last bit + 1

        bool operator==(const Run&) const = default;
    };

    TokenString() = default;

    // Accepts only '0' and '1'.
    explicit TokenString(std::string_view bits) {
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("TokenString: invalid symbol '" + std::string(1, c) + "'");
            push_back(static_cast<Bit>(c - '0'));
        }
    }

    static TokenString repeat(Bit b, std::uint64_t n) {
        TokenString s;
        s.append_run(b, n);
        return s;
    }

    static TokenString zeros(std::uint64_t n) { return repeat(0, n); }

    std::uint64_t size() const { return runs_.empty() ? 0 : runs_.back().end; }
    bool empty() const { return runs_.empty(); }
    const std::vector<Run>& runs() const { return runs_; }
    std::uint64_t run_length(std::size_t i) const {
        return runs_[i].end - (i == 0 ? 0 : runs_[i - 1].end);
    }

    Bit operator[](std::uint64_t i) const {
        auto it = std::upper_bound(runs_.begin(), runs_.end(), i,
                                   [](std::uint64_t pos, const Run& r) { return pos < r.end; });
        return it->bit;
    }

    Bit at(std::uint64_t i) const {
        if (i >= size()) throw std::out_of_range("TokenString::at");
        return (*this)[i];
    }

    Bit back() const {
        if (empty()) throw std::out_of_range("TokenString::back on empty string");
        return runs_.back().bit;
    }

    void push_back(Bit b) { append_run(b, 1); }

    void append_run(Bit b, std::uint64_t n) {
        if (b > 1) throw std::invalid_argument("TokenString: bit must be 0 or 1");
        if (n == 0) return;
        if (!runs_.empty() && runs_.back().bit == b)
            runs_.back().end += n;
        else
            runs_.push_back({b, size() + n});
    }

    TokenString& operator+=(const TokenString& other) {
        std::uint64_t prev = 0;
        for (const Run& r : other.runs_) {
            append_run(r.bit, r.end - prev);
            prev = r.end;
        }
        return *this;
    }

    TokenString& operator+=(Bit b) {
        push_back(b);
        return *this;
    }

    friend TokenString operator+(TokenString a, const TokenString& b) { return a += b; }
    friend TokenString operator+(TokenString a, Bit b) { return a += b; }

    // Bits [pos, pos + len), clamped to the string end.
    TokenString substr(std::uint64_t pos, std::uint64_t len = UINT64_MAX) const {
        TokenString out;
        const std::uint64_t n = size();
        if (pos >= n) return out;
        const std::uint64_t stop = (len >= n - pos) ? n : pos + len;
        std::uint64_t start = 0;
        for (const Run& r : runs_) {
            const std::uint64_t lo = std::max(start, pos);
            const std::uint64_t hi = std::min(r.end, stop);
            if (lo < hi) out.append_run(r.bit, hi - lo);
            start = r.end;
            if (start >= stop) break;
        }
        return out;
    }

    TokenString prefix(std::uint64_t n) const { return substr(0, n); }
    TokenString suffix(std::uint64_t n) const {
        const std::uint64_t len = size();
        return n >= len ? *this : substr(len - n);
    }

    bool starts_with(const TokenString& p) const {
        return p.size() <= size() && prefix(p.size()) == p;
    }

    bool ends_with(const TokenString& p) const {
        return p.size() <= size() && suffix(p.size()) == p;
    }

    // Number of ones.
    std::uint64_t count_ones() const {
        std::uint64_t total = 0, prev = 0;
        for (const Run& r : runs_) {
            if (r.bit == 1) total += r.end - prev;
            prev = r.end;
        }
        return total;
    }

    bool all_zero() const { return runs_.empty() || (runs_.size() == 1 && runs_[0].bit == 0); }

    std::string to_string() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(size()));
        std::uint64_t prev = 0;
        for (const Run& r : runs_) {
            s.append(static_cast<std::size_t>(r.end - prev), static_cast<char>('0' + r.bit));
            prev = r.end;
        }
        return s;
    }

    // Run-length rendering, e.g. "0^12 1 0^3"; "eps" for the empty string.
    std::string to_compact() const {
        if (empty()) return "eps";
        std::string s;
        std::uint64_t prev = 0;
        for (const Run& r : runs_) {
            if (!s.empty()) s += ' ';
            s += static_cast<char>('0' + r.bit);
            if (r.end - prev > 1) s += '^' + std::to_string(r.end - prev);
            prev = r.end;
        }
        return s;
    }

    bool operator==(const TokenString& other) const { return runs_ == other.runs_; }

    // Lexicographic on the bit sequence; a proper prefix orders first.
    std::strong_ordering operator<=>(const TokenString& other) const {
        std::size_t i = 0, j = 0;
        std::uint64_t pos = 0;
        while (i < runs_.size() && j < other.runs_.size()) {
            if (runs_[i].bit != other.runs_[j].bit) return runs_[i].bit <=> other.runs_[j].bit;
            const std::uint64_t next = std::min(runs_[i].end, other.runs_[j].end);
            pos = next;
            if (runs_[i].end == pos) ++i;
            if (other.runs_[j].end == pos) ++j;
        }
        return size() <=> other.size();
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (const Run& r : runs_) {
            h ^= std::hash<std::uint64_t>{}(r.end * 2 + r.bit) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::vector<Run> runs_;
};

inline std::ostream& operator<<(std::ostream& os, const TokenString& s) {
    return os << (s.size() <= 64 ? (s.empty() ? std::string("eps") : s.to_string()) : s.to_compact());
}

// Sequential consumer over the runs of a string, used by the pattern matchers
// of the concrete constructions.
class RunReader {
public:
    explicit RunReader(const TokenString& s) : s_(&s) {}

    bool done() const { return pos_ == s_->size(); }
    std::uint64_t position() const { return pos_; }
    std::uint64_t remaining() const { return s_->size() - pos_; }

    Bit peek() const { return s_->runs()[run_].bit; }

    // Bits left in the current run.
    std::uint64_t available() const { return done() ? 0 : s_->runs()[run_].end - pos_; }

    // Consumes the rest of the current run and returns its length.
    std::uint64_t take_run() {
        const std::uint64_t n = available();
        advance(n);
        return n;
    }

    // Consumes exactly n copies of b; returns false (consuming nothing) otherwise.
    bool take(Bit b, std::uint64_t n) {
        if (n == 0) return true;
        if (done() || peek() != b || available() < n) return false;
        advance(n);
        return true;
    }

    // Consumes the maximal run of b at the cursor (possibly empty).
    std::uint64_t take_all(Bit b) {
        if (done() || peek() != b) return 0;
        return take_run();
    }

private:
    void advance(std::uint64_t n) {
        pos_ += n;
        while (run_ < s_->runs().size() && s_->runs()[run_].end <= pos_) ++run_;
    }

    const TokenString* s_;
    std::uint64_t pos_ = 0;
    std::size_t run_ = 0;
};

}  // namespace arlab

template <>
struct std::hash<arlab::TokenString> {
    std::size_t operator()(const arlab::TokenString& s) const noexcept { return s.hash(); }
};
