#pragma once

// Base (next-token) learners: labeled examples x -> bit with no generation.

#include "arlab/classes/linear.hpp"
#include "arlab/core/generator.hpp"
#include "arlab/game/protocol.hpp"

#include <bit>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::learners {

class BaseLearner {
public:
    virtual ~BaseLearner() = default;
    virtual Bit predict(const TokenString& x) = 0;
    virtual void update(const TokenString& x, Bit y) = 0;
    virtual std::unique_ptr<BaseLearner> clone() const = 0;
    virtual std::uint64_t mistake_bound() const = 0;
    virtual std::string fingerprint() const { return {}; }
    virtual std::string name() const = 0;
};

inline std::uint64_t floor_log2(std::uint64_t n) { return n == 0 ? 0 : std::bit_width(n) - 1; }

// Majority vote of the surviving generators; ties predict 1.
class BaseHalving : public BaseLearner {
public:
    explicit BaseHalving(GeneratorList cls) : cls_(std::make_shared<const GeneratorList>(std::move(cls))) {
        if (cls_->empty()) throw std::invalid_argument("halving: empty class");
        for (std::size_t i = 0; i < cls_->size(); ++i) alive_.push_back(i);
    }

    Bit predict(const TokenString& x) override {
        std::size_t ones = 0;
        for (std::size_t i : alive_) ones += (*cls_)[i](x);
        return 2 * ones >= alive_.size() ? 1 : 0;
    }

    void update(const TokenString& x, Bit y) override {
        std::vector<std::size_t> keep;
        for (std::size_t i : alive_)
            if ((*cls_)[i](x) == y) keep.push_back(i);
        if (keep.empty()) throw game::RealizabilityError("halving: no survivor agrees with the label");
        alive_ = std::move(keep);
    }

    std::unique_ptr<BaseLearner> clone() const override { return std::make_unique<BaseHalving>(*this); }
    std::uint64_t mistake_bound() const override { return floor_log2(cls_->size()); }
    std::string fingerprint() const override {
        std::string s;
        for (std::size_t i : alive_) s += std::to_string(i) + ',';
        return s;
    }
    std::string name() const override { return "halving"; }
    std::size_t survivors() const { return alive_.size(); }

private:
    std::shared_ptr<const GeneratorList> cls_;
    std::vector<std::size_t> alive_;
};

// The last d bits of x, left-padded with zeros.
inline TokenString suffix_map(const TokenString& x, std::uint64_t d) {
    if (x.size() >= d) return x.suffix(d);
    return TokenString::zeros(d - x.size()) + x;
}

class SuffixProjection : public BaseLearner {
public:
    SuffixProjection(std::unique_ptr<BaseLearner> base, std::uint64_t d) : base_(std::move(base)), d_(d) {
        if (d_ < 1) throw std::invalid_argument("suffix_projection: d must be >= 1");
    }
    SuffixProjection(const SuffixProjection& o) : base_(o.base_->clone()), d_(o.d_) {}

    Bit predict(const TokenString& x) override { return base_->predict(suffix_map(x, d_)); }
    void update(const TokenString& x, Bit y) override { base_->update(suffix_map(x, d_), y); }
    std::unique_ptr<BaseLearner> clone() const override { return std::make_unique<SuffixProjection>(*this); }
    std::uint64_t mistake_bound() const override { return base_->mistake_bound(); }
    std::string fingerprint() const override { return base_->fingerprint(); }
    std::string name() const override { return "suffix(" + std::to_string(d_) + ")/" + base_->name(); }

private:
    std::unique_ptr<BaseLearner> base_;
    std::uint64_t d_;
};

// Halving over every distinct threshold function on {0,1}^d.
inline std::unique_ptr<BaseLearner> ltf_halving_base(std::size_t d, std::size_t max_d = 4) {
    if (d < 1 || d > max_d) throw std::invalid_argument("ltf_halving_base: d=" + std::to_string(d) + " above budget");
    GeneratorList cls;
    for (const auto& g : classes::enumerate_thresholds(d, classes::default_weight_bound(d)))
        cls.push_back(classes::as_generator(g));
    return std::make_unique<BaseHalving>(std::move(cls));
}

}  // namespace arlab::learners
