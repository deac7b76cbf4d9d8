#pragma once

#include "arlab/dims/class_table.hpp"
#include "arlab/game/protocol.hpp"
#include "arlab/learners/base.hpp"

#include <memory>
#include <stdexcept>

namespace arlab::learners {

// Halving on end-to-end outputs of a generator list; ties predict 1.
// Trajectory feedback is matched whole, single-bit feedback on the final bit.
class HalvingLearner : public game::Learner {
public:
    HalvingLearner(GeneratorList cls, std::uint64_t M)
        : cls_(std::make_shared<const GeneratorList>(std::move(cls))), M_(M) {
        if (cls_->empty()) throw std::invalid_argument("halving: empty class");
        for (std::size_t i = 0; i < cls_->size(); ++i) alive_.push_back(i);
    }

    Bit predict(const TokenString& x) override {
        std::size_t ones = 0;
        for (std::size_t i : alive_) ones += e2e((*cls_)[i], x, M_);
        return 2 * ones >= alive_.size() ? 1 : 0;
    }

    void update(const TokenString& x, const TokenString& fb) override {
        std::vector<std::size_t> keep;
        for (std::size_t i : alive_) {
            const TokenString c = cot((*cls_)[i], x, M_);
            if (fb.size() == 1 ? c.back() == fb.back() : c == fb) keep.push_back(i);
        }
        if (keep.empty()) throw game::RealizabilityError("halving: no survivor agrees with the feedback");
        alive_ = std::move(keep);
    }

    std::unique_ptr<game::Learner> clone() const override { return std::make_unique<HalvingLearner>(*this); }
    std::string fingerprint() const override {
        std::string s;
        for (std::size_t i : alive_) s += std::to_string(i) + ',';
        return s;
    }
    std::string name() const override { return "halving"; }

    std::size_t survivors() const { return alive_.size(); }
    std::uint64_t mistake_bound() const { return floor_log2(cls_->size()); }

private:
    std::shared_ptr<const GeneratorList> cls_;
    std::uint64_t M_;
    std::vector<std::size_t> alive_;
};

// Halving over the rows of an end-to-end table.
class TableHalving : public game::Learner {
public:
    explicit TableHalving(dims::BinaryTable table)
        : table_(std::make_shared<const dims::BinaryTable>(std::move(table))),
          v_(dims::VersionSubset::full(table_->members())) {
        if (table_->empty()) throw dims::EmptyClassError();
    }

    Bit predict(const TokenString& x) override {
        const std::size_t i = index(x);
        std::size_t ones = 0;
        for (std::size_t m : v_.members()) ones += table_->label(m, i);
        return 2 * ones >= v_.count() ? 1 : 0;
    }

    void update(const TokenString& x, const TokenString& fb) override {
        const std::size_t i = index(x);
        dims::VersionSubset keep(table_->members());
        for (std::size_t m : v_.members())
            if (table_->label(m, i) == fb.back()) keep.insert(m);
        if (keep.empty()) throw game::RealizabilityError("halving: no survivor agrees with the feedback");
        v_ = std::move(keep);
    }

    std::unique_ptr<game::Learner> clone() const override { return std::make_unique<TableHalving>(*this); }
    std::string fingerprint() const override { return v_.to_string(); }
    std::string name() const override { return "table-halving"; }
    std::uint64_t mistake_bound() const { return floor_log2(table_->members()); }

private:
    std::size_t index(const TokenString& x) const {
        const auto i = table_->instance_index(x);
        if (!i) throw std::out_of_range("halving: instance outside the table");
        return *i;
    }

    std::shared_ptr<const dims::BinaryTable> table_;
    dims::VersionSubset v_;
};

}  // namespace arlab::learners
