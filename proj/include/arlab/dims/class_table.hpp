#pragma once

// A finite hypothesis class evaluated over a finite instance pool. Labels are
// either single bits (base and end-to-end tables) or length-M trajectories
// (chain-of-thought tables).

#include "arlab/core/generation.hpp"
#include "arlab/dims/version_subset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace arlab::dims {

struct EmptyClassError : std::invalid_argument {
    EmptyClassError() : std::invalid_argument("empty class") {}
};

template <class Label>
class ClassTable {
public:
    using label_type = Label;

    ClassTable() = default;

    ClassTable(std::vector<TokenString> pool, std::vector<std::string> ids, std::vector<std::vector<Label>> rows)
        : pool_(std::move(pool)), ids_(std::move(ids)), rows_(std::move(rows)) {
        if (ids_.size() != rows_.size()) throw std::invalid_argument("ClassTable: id/row count mismatch");
        std::unordered_set<std::string> seen;
        for (std::size_t m = 0; m < rows_.size(); ++m) {
            if (rows_[m].size() != pool_.size())
                throw std::invalid_argument("ClassTable: row " + ids_[m] + " is not rectangular");
            if (!seen.insert(ids_[m]).second) throw std::invalid_argument("ClassTable: duplicate member id " + ids_[m]);
        }
        for (std::size_t i = 0; i < pool_.size(); ++i) index_.emplace(pool_[i], i);
        if (index_.size() != pool_.size()) throw std::invalid_argument("ClassTable: duplicate pool instance");
    }

    std::size_t members() const { return rows_.size(); }
    std::size_t instances() const { return pool_.size(); }
    bool empty() const { return rows_.empty(); }

    const std::vector<TokenString>& pool() const { return pool_; }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<Label>& row(std::size_t member) const { return rows_[member]; }
    const Label& label(std::size_t member, std::size_t instance) const { return rows_[member][instance]; }

    std::optional<std::size_t> instance_index(const TokenString& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Members whose row repeats an earlier member's row.
    std::vector<std::size_t> duplicate_rows() const {
        std::vector<std::size_t> dups;
        std::map<std::vector<Label>, std::size_t> first;
        for (std::size_t m = 0; m < rows_.size(); ++m)
            if (!first.emplace(rows_[m], m).second) dups.push_back(m);
        return dups;
    }

    // Keeps the first member of every distinct row.
    ClassTable dedup() const {
        std::vector<std::string> ids;
        std::vector<std::vector<Label>> rows;
        std::map<std::vector<Label>, std::size_t> first;
        for (std::size_t m = 0; m < rows_.size(); ++m) {
            if (first.emplace(rows_[m], m).second) {
                ids.push_back(ids_[m]);
                rows.push_back(rows_[m]);
            }
        }
        return ClassTable(pool_, std::move(ids), std::move(rows));
    }

    ClassTable restrict(const VersionSubset& keep) const {
        std::vector<std::string> ids;
        std::vector<std::vector<Label>> rows;
        for (std::size_t m : keep.members()) {
            ids.push_back(ids_[m]);
            rows.push_back(rows_[m]);
        }
        return ClassTable(pool_, std::move(ids), std::move(rows));
    }

    // Members grouped by their label on one instance, in first-seen label order.
    std::vector<std::pair<Label, VersionSubset>> partition(std::size_t instance) const {
        std::vector<std::pair<Label, VersionSubset>> groups;
        for (std::size_t m = 0; m < rows_.size(); ++m) {
            const Label& y = rows_[m][instance];
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == y; });
            if (it == groups.end()) {
                groups.emplace_back(y, VersionSubset(rows_.size()));
                it = std::prev(groups.end());
            }
            it->second.insert(m);
        }
        return groups;
    }

private:
    std::vector<TokenString> pool_;
    std::vector<std::string> ids_;
    std::vector<std::vector<Label>> rows_;
    std::unordered_map<TokenString, std::size_t> index_;
};

using BinaryTable = ClassTable<Bit>;
using TrajectoryTable = ClassTable<TokenString>;

namespace detail {
inline std::vector<std::string> ids_of(const GeneratorList& cls) {
    std::vector<std::string> ids;
    ids.reserve(cls.size());
    std::unordered_map<std::string, int> used;
    for (const Generator& g : cls) {
        // Identical ids are disambiguated so that tables stay well-formed.
        const int n = used[g.id()]++;
        ids.push_back(n == 0 ? g.id() : g.id() + "#" + std::to_string(n));
    }
    return ids;
}
}  // namespace detail

// Next-token labels g(x).
inline BinaryTable base_table(const GeneratorList& cls, const std::vector<TokenString>& pool) {
    std::vector<std::vector<Bit>> rows;
    for (const Generator& g : cls) {
        std::vector<Bit> row;
        row.reserve(pool.size());
        for (const TokenString& x : pool) row.push_back(g(x));
        rows.push_back(std::move(row));
    }
    return BinaryTable(pool, detail::ids_of(cls), std::move(rows));
}

inline BinaryTable e2e_table(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
    std::vector<std::vector<Bit>> rows;
    for (const Generator& g : cls) {
        std::vector<Bit> row;
        row.reserve(pool.size());
        for (const TokenString& x : pool) row.push_back(e2e(g, x, M));
        rows.push_back(std::move(row));
    }
    return BinaryTable(pool, detail::ids_of(cls), std::move(rows));
}

inline TrajectoryTable cot_table(const GeneratorList& cls, const std::vector<TokenString>& pool, std::uint64_t M) {
    std::vector<std::vector<TokenString>> rows;
    for (const Generator& g : cls) {
        std::vector<TokenString> row;
        row.reserve(pool.size());
        for (const TokenString& x : pool) row.push_back(cot(g, x, M));
        rows.push_back(std::move(row));
    }
    return TrajectoryTable(pool, detail::ids_of(cls), std::move(rows));
}

// End-to-end view of a trajectory table: the last bit of every label.
inline BinaryTable final_bits(const TrajectoryTable& t) {
    std::vector<std::vector<Bit>> rows;
    for (std::size_t m = 0; m < t.members(); ++m) {
        std::vector<Bit> row;
        for (const TokenString& y : t.row(m)) row.push_back(y.back());
        rows.push_back(std::move(row));
    }
    return BinaryTable(t.pool(), t.ids(), std::move(rows));
}

}  // namespace arlab::dims
