#pragma once

// Experiment manifests (JSON) and the class, learner and adversary builders
// they select. Schema in manifests/README.md.

#include "arlab/classes.hpp"
#include "arlab/cli/claims.hpp"
#include "arlab/dims.hpp"
#include "arlab/game.hpp"
#include "arlab/learners.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arlab::cli {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetError : std::length_error {
    using std::length_error::length_error;
};

struct Budgets {
    std::uint64_t max_class = 4096;
    std::uint64_t max_pool = 512;
    std::uint64_t nodes = 20'000'000;
};

struct ClassSpec {
    std::string construction = "random";
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 1;
};

struct Manifest {
    std::string experiment = "experiment";
    std::string kind;
    ClassSpec cls;
    std::vector<std::uint64_t> Ms{1};
    std::string learner = "soa-cot";
    std::string adversary = "exhaustive";
    game::FeedbackMode mode = game::FeedbackMode::COT;
    std::uint64_t horizon = 20;
    std::uint64_t seed = 1;
    Budgets budgets;
    std::string claim = "all";
    nlohmann::json stochastic = nlohmann::json::object();
    std::map<std::string, std::pair<double, double>> expect;  // metric -> window
    std::string text;                                          // canonical JSON of the manifest
};

namespace detail {

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("manifest field '") + key + "': " + e.what());
    }
}

inline double window_bound(const nlohmann::json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw ConfigError("manifest window bound '" + s + "' is not a number");
    }
    return v.get<double>();
}

}  // namespace detail

inline Manifest parse_manifest(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("manifest must be a JSON object");
    static const std::set<std::string> known{"experiment", "kind",    "class", "M",      "M_range", "learner",
                                             "adversary",  "mode",    "horizon", "seed", "budgets", "claim",
                                             "stochastic", "expect"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw ConfigError("manifest: unknown field '" + key + "'");
    Manifest m;
    m.experiment = detail::get_or<std::string>(j, "experiment", m.experiment);
    m.kind = detail::get_or<std::string>(j, "kind", "");
    if (j.contains("class")) {
        const auto& c = j.at("class");
        m.cls.construction = detail::get_or<std::string>(c, "construction", m.cls.construction);
        if (c.contains("params")) m.cls.params = c.at("params");
        m.cls.seed = detail::get_or<std::uint64_t>(c, "seed", m.cls.seed);
    }
    if (j.contains("M") && j.contains("M_range")) throw ConfigError("manifest: give either M or M_range");
    if (j.contains("M")) {
        m.Ms = j.at("M").is_array() ? detail::get_or<std::vector<std::uint64_t>>(j, "M", {})
                                     : std::vector<std::uint64_t>{detail::get_or<std::uint64_t>(j, "M", 1)};
        if (m.Ms.empty()) throw ConfigError("manifest: M list must not be empty");
    }
    if (j.contains("M_range")) {
        const auto r = detail::get_or<std::vector<std::uint64_t>>(j, "M_range", {});
        if (r.size() != 2 || r[0] > r[1]) throw ConfigError("manifest: M_range must be [lo, hi] with lo <= hi");
        m.Ms.clear();
        for (std::uint64_t M = r[0]; M <= r[1]; ++M) m.Ms.push_back(M);
    }
    m.learner = detail::get_or<std::string>(j, "learner", m.learner);
    m.adversary = detail::get_or<std::string>(j, "adversary", m.adversary);
    try {
        m.mode = game::parse_mode(detail::get_or<std::string>(j, "mode", "cot"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    m.horizon = detail::get_or<std::uint64_t>(j, "horizon", m.horizon);
    m.seed = detail::get_or<std::uint64_t>(j, "seed", m.seed);
    if (j.contains("budgets")) {
        const auto& b = j.at("budgets");
        m.budgets.max_class = detail::get_or<std::uint64_t>(b, "max_class", m.budgets.max_class);
        m.budgets.max_pool = detail::get_or<std::uint64_t>(b, "max_pool", m.budgets.max_pool);
        m.budgets.nodes = detail::get_or<std::uint64_t>(b, "nodes", m.budgets.nodes);
    }
    m.claim = detail::get_or<std::string>(j, "claim", m.claim);
    if (j.contains("stochastic")) m.stochastic = j.at("stochastic");
    if (j.contains("expect")) {
        for (const auto& [metric, w] : j.at("expect").items()) {
            if (!w.is_array() || w.size() != 2) throw ConfigError("manifest: expect." + metric + " must be [lo, hi]");
            m.expect[metric] = {detail::window_bound(w[0]), detail::window_bound(w[1])};
        }
    }
    m.text = j.dump();
    return m;
}

inline Manifest load_manifest(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open manifest " + path);
    try {
        return parse_manifest(nlohmann::json::parse(is));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("manifest " + path + ": " + e.what());
    }
}

struct BuiltClass {
    GeneratorList cls;
    std::vector<TokenString> pool;
    std::optional<classes::TaxonomyParams> taxonomy;
};

inline classes::TaxonomyParams taxonomy_params(const nlohmann::json& p) {
    classes::TaxonomyParams tp;
    const auto M0 = detail::get_or<std::uint64_t>(p, "M0", 256);
    try {
        tp.rate = classes::rate_by_name(detail::get_or<std::string>(p, "rate", "quarter_log"), M0);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    tp.s_max = detail::get_or<std::uint64_t>(p, "s_max", tp.s_max);
    return tp;
}

inline BuiltClass build_class(const ClassSpec& spec, const Budgets& budgets) {
    const auto& p = spec.params;
    BuiltClass out;
    const std::string& c = spec.construction;
    if (c == "random") {
        const auto members = detail::get_or<std::uint64_t>(p, "members", 8);
        if (members > budgets.max_class) throw BudgetError("class size exceeds max_class");
        out.cls = classes::random_class(spec.seed, members);
        rng::Stream s(spec.seed, {0x9001});
        out.pool = classes::random_pool(s, detail::get_or<std::uint64_t>(p, "pool_size", 4),
                                        detail::get_or<std::uint64_t>(p, "max_len", 3));
    } else if (c == "taxonomy") {
        const auto tp = taxonomy_params(p);
        const auto window = detail::get_or<std::vector<std::uint64_t>>(p, "window", {256, 257, 300});
        if (window.empty()) throw ConfigError("taxonomy: window must not be empty");
        out.cls = classes::taxonomy_class(tp, window);
        out.pool = claims::taxonomy_pool(tp, window);
        out.taxonomy = tp;
    } else if (c == "alternating") {
        const auto m_max = detail::get_or<std::uint64_t>(p, "m_max", 3);
        const auto n_max = detail::get_or<std::uint64_t>(p, "n_max", 3);
        const auto count = detail::get_or<std::uint64_t>(p, "members", 64);
        if (count > budgets.max_class) throw BudgetError("class size exceeds max_class");
        for (std::uint64_t a = 0; a < count; ++a)
            out.cls.push_back(classes::alternating_member(classes::random_alpha(m_max, n_max, rng::mix(spec.seed, {a}))));
        out.pool = classes::alternating_special_instances(m_max, n_max);
    } else if (c == "linear") {
        const auto d = detail::get_or<std::uint64_t>(p, "d", 3);
        const bool latch = detail::get_or<bool>(p, "latch_pool", true);
        const auto gens = classes::enumerate_thresholds(d, classes::default_weight_bound(d));
        if (gens.size() > budgets.max_class) throw BudgetError("class size exceeds max_class");
        for (const auto& g : gens) out.cls.push_back(classes::as_generator(g));
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code)
            out.pool.push_back(claims::bits_msb_first(code, d) + (latch ? TokenString("10") : TokenString()));
    } else if (c == "hard") {
        classes::HardClassParams hp;
        hp.d = detail::get_or<std::uint64_t>(p, "d", 1);
        hp.M = detail::get_or<std::uint64_t>(p, "M", 4);
        hp.N = detail::get_or<std::uint64_t>(p, "N", 64);
        hp.seed = spec.seed;
        hp.budget = budgets.max_class;
        try {
            const classes::HardClass F(hp);
            out.cls = F.generators();
            for (std::uint64_t i = 1; i <= F.z_size(); ++i) out.pool.push_back(TokenString::zeros(i));
        } catch (const std::length_error& e) {
            throw BudgetError(e.what());
        }
    } else {
        throw ConfigError("unknown class construction '" + c +
                          "' (known: random, taxonomy, alternating, linear, hard)");
    }
    if (out.cls.size() > budgets.max_class) throw BudgetError("class size exceeds max_class");
    if (out.pool.size() > budgets.max_pool) throw BudgetError("pool size exceeds max_pool");
    return out;
}

inline std::unique_ptr<game::Learner> make_learner(const std::string& name, const BuiltClass& b, std::uint64_t M) {
    if (name == "soa-cot") return std::make_unique<learners::SoaCot>(b.cls, b.pool, M);
    if (name == "halving") return std::make_unique<learners::HalvingLearner>(b.cls, M);
    if (name == "minimax-e2e") return std::make_unique<game::MinimaxE2ELearner>(b.cls, b.pool, M);
    if (name == "minimax-cot") return std::make_unique<game::MinimaxCotLearner>(b.cls, b.pool, M);
    if (name == "cot-reduction")
        return std::make_unique<learners::CotReduction>(std::make_unique<learners::BaseHalving>(b.cls), M);
    if (name == "taxonomy") {
        if (!b.taxonomy) throw ConfigError("learner 'taxonomy' needs the taxonomy class construction");
        return std::make_unique<learners::TaxonomyLearner>(*b.taxonomy, M);
    }
    throw ConfigError("unknown learner '" + name +
                      "' (known: soa-cot, halving, minimax-e2e, minimax-cot, cot-reduction, taxonomy)");
}

inline std::unique_ptr<game::Adversary> make_adversary(const Manifest& m, const BuiltClass& b, std::uint64_t M) {
    if (m.adversary == "random-target")
        return std::make_unique<game::FixedTargetAdversary>(
            game::random_target_adversary(b.cls, b.pool, M, m.mode, m.horizon, m.seed));
    if (m.adversary == "tree" || m.adversary == "tree-random") {
        const auto tree = dims::shattered_tree(dims::e2e_table(b.cls, b.pool, M));
        return std::make_unique<game::TreeAdversary>(b.cls, tree, M, m.mode,
                                                     game::TieBreak{m.adversary == "tree-random", m.seed});
    }
    throw ConfigError("unknown adversary '" + m.adversary + "' (known: exhaustive, random-target, tree, tree-random)");
}

}  // namespace arlab::cli
