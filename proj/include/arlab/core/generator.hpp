#pragma once

#include "arlab/core/token_string.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arlab {

// A deterministic next-token generator: a total map from token strings to a
// bit, carried with a stable identifier. Copies share the underlying rule.
class Generator {
public:
    using Rule = std::function<Bit(const TokenString&)>;

    Generator() = default;
    Generator(std::string id, Rule rule)
        : id_(std::move(id)), rule_(std::make_shared<const Rule>(std::move(rule))) {}

    Bit operator()(const TokenString& x) const { return (*rule_)(x); }

    const std::string& id() const { return id_; }
    bool valid() const { return static_cast<bool>(rule_); }

private:
    std::string id_;
    std::shared_ptr<const Rule> rule_;
};

using GeneratorList = std::vector<Generator>;

// Wraps g with a synchronized cache keyed by input. Outputs are unchanged.
inline Generator memoized(const Generator& g) {
    struct Cache {
        std::mutex mu;
        std::unordered_map<TokenString, Bit> values;
    };
    auto cache = std::make_shared<Cache>();
    return Generator(g.id(), [g, cache](const TokenString& x) -> Bit {
        {
            std::lock_guard<std::mutex> lock(cache->mu);
            if (auto it = cache->values.find(x); it != cache->values.end()) return it->second;
        }
        const Bit y = g(x);
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->values.emplace(x, y);
        return y;
    });
}

inline Generator constant_generator(Bit b) {
    return Generator("const" + std::to_string(b), [b](const TokenString&) { return b; });
}

// g(x) = last bit of x, g(empty) = 0.
inline Generator copy_last_bit() {
    return Generator("copy-last", [](const TokenString& x) -> Bit { return x.empty() ? 0 : x.back(); });
}

// Finite lookup table with a default label outside its support.
inline Generator table_generator(std::string id, std::unordered_map<TokenString, Bit> table, Bit fallback = 0) {
    auto t = std::make_shared<const std::unordered_map<TokenString, Bit>>(std::move(table));
    return Generator(std::move(id), [t, fallback](const TokenString& x) -> Bit {
        auto it = t->find(x);
        return it == t->end() ? fallback : it->second;
    });
}

}  // namespace arlab
