#pragma once

// Propositional rules over atoms (x, y), read as "f(x) = y", with conjunction
// and disjunction.

#include "arlab/core/generation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace arlab::classes {

using Rational = boost::multiprecision::cpp_rational;

class Rule {
public:
    enum class Kind { True, False, Atom, And, Or };

    static Rule truth() { return Rule(Kind::True); }
    static Rule falsity() { return Rule(Kind::False); }

    static Rule atom(TokenString x, Bit y) {
        Rule r(Kind::Atom);
        r.x_ = std::move(x);
        r.y_ = y;
        return r;
    }

    static Rule all_of(std::vector<Rule> parts) {
        Rule r(Kind::And);
        r.parts_ = std::move(parts);
        return r;
    }

    static Rule any_of(std::vector<Rule> parts) {
        Rule r(Kind::Or);
        r.parts_ = std::move(parts);
        return r;
    }

    friend Rule operator&&(Rule a, Rule b) { return all_of({std::move(a), std::move(b)}); }
    friend Rule operator||(Rule a, Rule b) { return any_of({std::move(a), std::move(b)}); }

    Kind kind() const { return kind_; }
    const TokenString& instance() const { return x_; }
    Bit label() const { return y_; }
    const std::vector<Rule>& parts() const { return parts_; }

    // label(x) gives the assignment's bit on x.
    template <class Labeler>
    bool holds(Labeler&& label) const {
        switch (kind_) {
            case Kind::True: return true;
            case Kind::False: return false;
            case Kind::Atom: return label(x_) == y_;
            case Kind::And:
                for (const Rule& p : parts_)
                    if (!p.holds(label)) return false;
                return true;
            case Kind::Or:
                for (const Rule& p : parts_)
                    if (p.holds(label)) return true;
                return false;
        }
        return false;
    }

    bool holds_for(const Generator& g) const { return holds([&](const TokenString& x) { return g(x); }); }

    std::set<TokenString> instances() const {
        std::set<TokenString> out;
        collect(out);
        return out;
    }

    bool independent_of(const TokenString& x) const { return instances().count(x) == 0; }

    // The rule with f(x) fixed to y, simplified.
    Rule condition(const TokenString& x, Bit y) const {
        switch (kind_) {
            case Kind::True:
            case Kind::False: return *this;
            case Kind::Atom:
                if (x_ != x) return *this;
                return y_ == y ? truth() : falsity();
            case Kind::And: {
                std::vector<Rule> kept;
                for (const Rule& p : parts_) {
                    Rule c = p.condition(x, y);
                    if (c.kind_ == Kind::False) return falsity();
                    if (c.kind_ != Kind::True) kept.push_back(std::move(c));
                }
                if (kept.empty()) return truth();
                if (kept.size() == 1) return kept.front();
                return all_of(std::move(kept));
            }
            case Kind::Or: {
                std::vector<Rule> kept;
                for (const Rule& p : parts_) {
                    Rule c = p.condition(x, y);
                    if (c.kind_ == Kind::True) return truth();
                    if (c.kind_ != Kind::False) kept.push_back(std::move(c));
                }
                if (kept.empty()) return falsity();
                if (kept.size() == 1) return kept.front();
                return any_of(std::move(kept));
            }
        }
        return *this;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::True: return "T";
            case Kind::False: return "F";
            case Kind::Atom: return "(" + x_.to_compact() + "," + std::to_string(y_) + ")";
            case Kind::And:
            case Kind::Or: {
                std::string s = "(";
                for (std::size_t i = 0; i < parts_.size(); ++i) {
                    if (i) s += kind_ == Kind::And ? " & " : " | ";
                    s += parts_[i].to_string();
                }
                return s + ")";
            }
        }
        return "";
    }

private:
    explicit Rule(Kind k) : kind_(k) {}

    void collect(std::set<TokenString>& out) const {
        if (kind_ == Kind::Atom) out.insert(x_);
        for (const Rule& p : parts_) p.collect(out);
    }

    Kind kind_;
    TokenString x_;
    Bit y_ = 0;
    std::vector<Rule> parts_;
};

// Members of the class satisfying the rule.
inline GeneratorList rule_filter(const GeneratorList& cls, const Rule& R) {
    GeneratorList out;
    for (const Generator& g : cls)
        if (R.holds_for(g)) out.push_back(g);
    return out;
}

// The first t generated bits from x follow y: AND_{s<=t} (x y_1..y_{s-1}, y_s).
inline Rule prefix_path_rule(const TokenString& x, const TokenString& y, std::uint64_t t) {
    if (t > y.size()) throw std::invalid_argument("prefix_path_rule: t exceeds |y|");
    std::vector<Rule> atoms;
    TokenString cur = x;
    for (std::uint64_t s = 0; s < t; ++s) {
        atoms.push_back(Rule::atom(cur, y[s]));
        cur.push_back(y[s]);
    }
    if (atoms.empty()) return Rule::truth();
    return Rule::all_of(std::move(atoms));
}

inline Rule path_rule(const TokenString& x, const TokenString& y) { return prefix_path_rule(x, y, y.size()); }

// Exact probability that a random assignment satisfies R, when the labels of
// distinct instances are independent and p_one(x) = Pr[f(x) = 1]. Computed by
// conditioning on one instance at a time.
inline Rational rule_probability(const Rule& R, const std::function<Rational(const TokenString&)>& p_one) {
    switch (R.kind()) {
        case Rule::Kind::True: return Rational(1);
        case Rule::Kind::False: return Rational(0);
        default: break;
    }
    const TokenString x = *R.instances().begin();
    const Rational p = p_one(x);
    Rational out(0);
    if (p != 0) out += p * rule_probability(R.condition(x, 1), p_one);
    if (p != 1) out += (1 - p) * rule_probability(R.condition(x, 0), p_one);
    return out;
}

}  // namespace arlab::classes
