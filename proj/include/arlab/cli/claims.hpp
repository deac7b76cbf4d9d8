#pragma once

// Registered verification suites. Each returns result records whose pass
// flags follow from value and window.

#include "arlab/classes.hpp"
#include "arlab/cli/records.hpp"
#include "arlab/dims.hpp"
#include "arlab/game.hpp"
#include "arlab/learners.hpp"
#include "arlab/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace arlab::cli {

struct ClaimContext {
    std::uint64_t seed = 1;
    std::uint64_t node_budget = 20'000'000;
};

struct Claim {
    std::string id;
    int criterion = 0;
    std::string summary;
    std::function<std::vector<ResultRecord>(const ClaimContext&)> run;
};

namespace claims {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline TokenString bits_msb_first(std::uint64_t code, std::uint64_t n) {
    TokenString x;
    for (std::uint64_t i = n; i-- > 0;) x.push_back(static_cast<Bit>((code >> i) & 1));
    return x;
}

struct SmallInstance {
    GeneratorList cls;
    std::vector<TokenString> pool;
    std::uint64_t M = 1;
};

// At most 10 members, at most 5 pool strings of length <= 3, M in {1, 2, 3}.
inline SmallInstance small_instance(std::uint64_t seed, std::uint64_t trial) {
    rng::Stream s(seed, {0x5a11, trial});
    SmallInstance out;
    out.cls = classes::random_class(rng::mix(seed, {0xc1a5, trial}), 1 + s.below(10));
    out.pool = classes::random_pool(s, 1 + s.below(5), 3);
    out.M = 1 + s.below(3);
    return out;
}

inline std::vector<ResultRecord> latch(const ClaimContext&) {
    const std::string id = "latch";
    std::uint64_t cases = 0, expected = 0, bad = 0, not_constant = 0;
    for (std::uint64_t m = 1; m <= 3; ++m) {
        const std::uint64_t vcodes = static_cast<std::uint64_t>(std::pow(5, m));
        expected += vcodes * 7 * (std::uint64_t{1} << m) * 7;
        for (std::uint64_t vc = 0; vc < vcodes; ++vc) {
            std::vector<classes::Rational> v;
            for (std::uint64_t i = 0, r = vc; i < m; ++i, r /= 5) v.emplace_back(static_cast<long long>(r % 5) - 2);
            for (long long c = -3; c <= 3; ++c) {
                const classes::LinearGen base{v, classes::Rational(c)};
                const Generator g = classes::as_generator(classes::latch_embed(v, classes::Rational(c)).gen);
                for (std::uint64_t zc = 0; zc < (std::uint64_t{1} << m); ++zc) {
                    const TokenString z = bits_msb_first(zc, m);
                    const Bit want = classes::linear_eval(base, z);
                    const TokenString traj = cot(g, z + TokenString("10"), 8);
                    for (std::uint64_t M = 2; M <= 8; ++M) {
                        ++cases;
                        if (traj[M - 1] != want) ++bad;
                        if (traj.prefix(M) != TokenString::repeat(want, M)) ++not_constant;
                    }
                }
            }
        }
    }
    const double n = static_cast<double>(expected);
    return {make_record(id, "cases", static_cast<double>(cases), n, n, id),
            make_record(id, "e2e_mismatches", static_cast<double>(bad), 0, 0, id),
            make_record(id, "non_constant_trajectories", static_cast<double>(not_constant), 0, 0, id)};
}

inline std::vector<ResultRecord> cot_bound(const ClaimContext& ctx) {
    const std::string id = "cot-bound";
    const std::uint64_t trials = 200;
    std::uint64_t dim_violations = 0, soa_violations = 0, largest_L = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const SmallInstance in = small_instance(ctx.seed, t);
        const int base_L = dims::littlestone_dim(dims::base_table(in.cls, generation_closure(in.pool, in.M)));
        const int cot_L = dims::littlestone_dim_multiclass(dims::cot_table(in.cls, in.pool, in.M));
        learners::SoaCot soa(in.cls, in.pool, in.M);
        const auto worst = game::exhaustive_worst_case(soa, in.cls, in.pool, in.M, game::FeedbackMode::COT,
                                                       in.cls.size() + 1, ctx.node_budget);
        dim_violations += cot_L > base_L;
        soa_violations += static_cast<int>(worst) > base_L;
        largest_L = std::max<std::uint64_t>(largest_L, base_L);
    }
    return {make_record(id, "classes", trials, 200, kInf, id),
            make_record(id, "cot_dim_above_base_dim", static_cast<double>(dim_violations), 0, 0, id),
            make_record(id, "soa_cot_worst_above_base_dim", static_cast<double>(soa_violations), 0, 0, id),
            make_record(id, "largest_base_dim", static_cast<double>(largest_L), 0, kInf, id)};
}

inline std::vector<ResultRecord> online_characterization(const ClaimContext& ctx) {
    const std::string id = "online-char";
    std::uint64_t tables = 0, mismatches = 0, learner_mismatches = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        const SmallInstance in = small_instance(ctx.seed, t);
        for (const auto& table : {dims::base_table(in.cls, in.pool), dims::e2e_table(in.cls, in.pool, in.M)}) {
            ++tables;
            mismatches += dims::littlestone_dim(table) != game::minimax_game_value(table);
        }
        const auto worst = game::exhaustive_worst_case(game::MinimaxE2ELearner(in.cls, in.pool, in.M), in.cls,
                                                       in.pool, in.M, game::FeedbackMode::E2E, in.cls.size() + 1,
                                                       ctx.node_budget);
        learner_mismatches += static_cast<int>(worst) != dims::optimal_e2e_mistake_bound(in.cls, in.pool, in.M);
    }
    return {make_record(id, "tables", static_cast<double>(tables), 400, 400, id),
            make_record(id, "dim_vs_game_value_mismatches", static_cast<double>(mismatches), 0, 0, id),
            make_record(id, "minimax_learner_worst_case_mismatches", static_cast<double>(learner_mismatches), 0, 0,
                        id)};
}

inline std::vector<ResultRecord> ssp_trees(const ClaimContext& ctx) {
    const std::string id = "ssp-trees";
    const std::uint64_t pairs = 500;
    std::uint64_t violations = 0, deepest = 0;
    double tightest = 0;
    for (std::uint64_t t = 0; t < pairs; ++t) {
        rng::Stream s(ctx.seed, {0x55b, t});
        const GeneratorList cls = classes::random_class(rng::mix(ctx.seed, {0x55c, t}), 2 + s.below(15));
        const auto pool = classes::random_pool(s, 2 + s.below(5), 4);
        const std::uint64_t depth = 1 + s.below(12);
        const auto tree = dims::LittlestoneTree::perfect(depth, [&](const TokenString& u) {
            return pool[rng::mix(ctx.seed, {0x55d, t, u.hash(), u.size()}) % pool.size()];
        });
        const auto B = dims::realized_branches(cls, tree);
        const auto L = static_cast<std::uint64_t>(dims::littlestone_dim(dims::base_table(cls, tree.instances())));
        const std::uint64_t bound = dims::ssp_bound(depth, L);
        violations += B.size() > bound;
        tightest = std::max(tightest, static_cast<double>(B.size()) / static_cast<double>(bound));
        deepest = std::max(deepest, depth);
    }
    return {make_record(id, "pairs", pairs, 500, kInf, id),
            make_record(id, "violations", static_cast<double>(violations), 0, 0, id),
            make_record(id, "max_branches_over_bound", tightest, 0, 1, id),
            make_record(id, "max_depth", static_cast<double>(deepest), 1, 12, id)};
}

inline std::vector<ResultRecord> inflation(const ClaimContext& ctx) {
    const std::string id = "inflation";
    std::uint64_t checked = 0, below = 0, above = 0;
    for (std::uint64_t t = 0; t < 400 && checked < 60; ++t) {
        rng::Stream s(ctx.seed, {0x1f1, t});
        const GeneratorList cls = classes::random_class(rng::mix(ctx.seed, {0x1f2, t}), 4 + s.below(9));
        const auto pool = classes::random_pool(s, 2 + s.below(3), 3);
        const std::uint64_t M = 1 + s.below(3);
        const auto et = dims::e2e_table(cls, pool, M);
        const int m = std::min(3, dims::littlestone_dim(et));
        if (m == 0) continue;
        const auto tree = dims::shattered_tree(et, m);
        const auto big = dims::inflate_tree(tree, M);
        const auto B = dims::realized_branches(cls, big);
        const auto L = static_cast<std::uint64_t>(dims::littlestone_dim(dims::base_table(cls, big.instances())));
        below += B.size() < (std::size_t{1} << m);
        above += B.size() > dims::ssp_bound(static_cast<std::uint64_t>(m) * M, L);
        ++checked;
    }
    return {make_record(id, "trees", static_cast<double>(checked), 20, kInf, id),
            make_record(id, "fewer_than_2^m_branches", static_cast<double>(below), 0, 0, id),
            make_record(id, "above_ssp_bound", static_cast<double>(above), 0, 0, id)};
}

// Bucket points, one baseline-tail point per s, and a zero string.
inline std::vector<TokenString> taxonomy_pool(const classes::TaxonomyParams& p, const std::vector<std::uint64_t>& window) {
    std::vector<TokenString> pool;
    for (std::uint64_t s : window) {
        for (std::uint64_t i = 0; i <= p.k_max(s) + 1; ++i) pool.push_back(classes::bucket_point(s, i));
        pool.push_back(classes::taxonomy_point(s, p.k_min(s)) + Bit{1} + TokenString::zeros(s - p.k_min(s) - 1));
    }
    pool.push_back(TokenString::zeros(window.front()));
    return pool;
}

inline std::vector<ResultRecord> taxonomy(const ClaimContext& ctx) {
    const std::string id = "taxonomy";
    const classes::TaxonomyParams p;
    std::vector<ResultRecord> out;

    const std::vector<std::uint64_t> window{256, 257, 300};
    std::vector<TokenString> pool;
    for (std::uint64_t s : window)
        for (std::uint64_t k : p.K(s)) pool.push_back(classes::taxonomy_point(s, k));
    for (const auto& x : taxonomy_pool(p, window)) pool.push_back(x);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const auto cls = classes::taxonomy_class(p, window);
    out.push_back(make_record(id, "window_base_dim", dims::littlestone_dim(dims::base_table(cls, pool)), 1, 1, id));

    const std::uint64_t M = 256;
    std::set<std::vector<Bit>> realized;
    for (int code = 0; code < 4; ++code) {
        const std::vector<Bit> y{static_cast<Bit>(code & 1), static_cast<Bit>((code >> 1) & 1)};
        try {
            realized.insert(classes::taxonomy_shatter_witness(p, M, y).outputs);
        } catch (const std::logic_error&) {
        }
    }
    out.push_back(make_record(id, "rate_at_M", static_cast<double>(p.rate(M)), 2, 2, id));
    out.push_back(make_record(id, "labelings_of_A_M_realized", static_cast<double>(realized.size()), 4, 4, id));

    const std::vector<std::uint64_t> game_window{256, 300, 2600, 2700};
    const auto game_cls = classes::taxonomy_class(p, game_window);
    const auto worst = game::exhaustive_worst_case(learners::TaxonomyLearner(p, M), game_cls,
                                                   taxonomy_pool(p, game_window), M, game::FeedbackMode::E2E,
                                                   game_cls.size() + 2, ctx.node_budget);
    out.push_back(make_record(id, "learner_worst_case", static_cast<double>(worst), 0,
                              static_cast<double>(1 + 10 * p.rate(M) + 1), id));
    return out;
}

inline std::vector<ResultRecord> second_mistake(const ClaimContext&) {
    const std::string id = "second-mistake";
    const classes::TaxonomyParams p;
    std::uint64_t cases = 0, bad = 0;
    for (std::uint64_t M = 1; M <= 12; ++M) {
        for (std::uint64_t s : {std::max<std::uint64_t>(256, 10 * M), std::uint64_t{1000}, std::uint64_t{4096}}) {
            for (std::uint64_t k : p.K(s)) {
                const Generator g = classes::taxonomy_member(p, s, k);
                for (std::uint64_t i = 0; i <= k; ++i) {
                    ++cases;
                    bad += (e2e(g, classes::bucket_point(s, i), M) == 1) != (M == k - i + 1);
                }
            }
        }
    }
    return {make_record(id, "cases", static_cast<double>(cases), 1, kInf, id),
            make_record(id, "mismatches", static_cast<double>(bad), 0, 0, id)};
}

inline std::vector<ResultRecord> alternating(const ClaimContext& ctx) {
    const std::string id = "alternating";
    const std::uint64_t m_max = 3, n_max = 3;
    GeneratorList cls;
    const classes::AlternatingParams shape{m_max, n_max, {}};
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << shape.cells()); ++code) {
        classes::AlternatingParams a = shape;
        a.alpha.resize(a.cells());
        for (std::size_t i = 0; i < a.cells(); ++i) a.alpha[i] = static_cast<Bit>((code >> i) & 1);
        cls.push_back(classes::alternating_member(a));
    }
    std::vector<ResultRecord> out;
    out.push_back(make_record(id, "members", static_cast<double>(cls.size()), 64, kInf, id));
    for (std::uint64_t m = 2; m <= m_max; ++m) {
        const auto tree = dims::LittlestoneTree::perfect(
            n_max + 1, [&](const TokenString& u) { return classes::alternating_u(m, u.size()); });
        const auto B = dims::realized_branches_e2e(cls, tree, 2 * m);
        out.push_back(make_record(id, "M=" + std::to_string(2 * m) + ":depth4_branches_realized",
                                  static_cast<double>(B.size()), 16, 16, id));
    }
    std::vector<TokenString> probes = classes::alternating_special_instances(m_max, n_max);
    rng::Stream s(ctx.seed, {0xa1});
    for (int i = 0; i < 1000; ++i) probes.push_back(classes::random_string(s, 30));
    for (std::uint64_t M : {5, 7}) {
        std::uint64_t disagree = 0;
        for (const auto& x : probes) {
            const Bit first = e2e(cls.front(), x, M);
            for (const auto& g : cls)
                if (e2e(g, x, M) != first) {
                    ++disagree;
                    break;
                }
        }
        out.push_back(make_record(id, "M=" + std::to_string(M) + ":instances_with_disagreement",
                                  static_cast<double>(disagree), 0, 0, id));
    }
    return out;
}

inline std::vector<ResultRecord> hard_class(const ClaimContext& ctx) {
    const std::string id = "hard-class";
    classes::HardClassParams hp;
    hp.d = 1;
    hp.M = 8;
    hp.N = 100000;
    hp.seed = ctx.seed;
    const classes::HardClass F(hp);
    const std::uint64_t M = hp.M;

    std::vector<std::pair<std::string, classes::Rule>> rules;
    for (std::uint64_t j = 1; j <= 4; ++j) {
        rules.emplace_back("green_" + std::to_string(j), classes::green_rule(j, M));
        rules.emplace_back("red_" + std::to_string(j), classes::red_rule(j, M));
    }
    const auto gr = classes::green_red_branches(1, M);
    for (std::uint64_t t = 1; t <= M; ++t)
        rules.emplace_back("green_prefix_" + std::to_string(t),
                           classes::prefix_path_rule(classes::hard_instance(1, M), gr.green, t));
    for (std::size_t q = 0; q < gr.reds.size(); ++q)
        rules.emplace_back("red_branch_" + std::to_string(q + 1),
                           classes::path_rule(classes::hard_instance(1, M), gr.reds[q]));
    for (std::uint64_t n = 2; n <= 3; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
            std::vector<Bit> u;
            std::string name = "labeling_";
            for (std::uint64_t j = 0; j < n; ++j) {
                u.push_back(static_cast<Bit>((code >> j) & 1));
                name += static_cast<char>('0' + u.back());
            }
            rules.emplace_back(name, classes::labeling_rule(u, M));
        }
    for (std::uint64_t i = 1; i <= M; ++i)
        rules.emplace_back("atom_0^" + std::to_string(i), classes::Rule::atom(TokenString::zeros(i), 1));

    std::vector<ResultRecord> out;
    out.push_back(make_record(id, "rules", static_cast<double>(rules.size()), 1, 50, id));
    const double N = static_cast<double>(F.members());
    for (const auto& [name, R] : rules) {
        const double p = F.rule_probability(R).convert_to<double>();
        const double frac = static_cast<double>(F.count_satisfying(R)) / N;
        const double half = 4 * std::sqrt(p * (1 - p) / N);
        out.push_back(make_record(id, "fraction:" + name, frac, p - half, p + half, id));
    }
    std::set<std::pair<Bit, Bit>> labelings;
    const TokenString x1 = classes::hard_instance(1, M), x2 = classes::hard_instance(2, M);
    for (std::uint64_t a = 0; a < F.members() && labelings.size() < 4; ++a) {
        const Generator g = F.generator(a);
        labelings.emplace(e2e(g, x1, M), e2e(g, x2, M));
    }
    out.push_back(make_record(id, "e2e_labelings_of_x1_x2", static_cast<double>(labelings.size()), 4, 4, id));
    return out;
}

inline std::vector<ResultRecord> glue(const ClaimContext& ctx) {
    const std::string id = "glue";
    const auto short_strings = strings_up_to(2);
    const auto domain = strings_up_to(8);
    std::uint64_t overlaps = 0, excess = 0, pairs = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        rng::Stream s(ctx.seed, {0x61, t});
        auto part = [&](const std::string& name) {
            GeneratorList cls;
            const std::size_t n = 2 + s.below(4);
            for (std::size_t m = 0; m < n; ++m) {
                std::unordered_map<TokenString, Bit> table;
                for (const auto& x : short_strings) table[x] = static_cast<Bit>(s.below(2));
                cls.push_back(table_generator(name + std::to_string(m), table));
            }
            return cls;
        };
        const GeneratorList a = part("a"), b = part("b");
        const std::uint64_t shift_b = 3 + s.below(3);
        const GeneratorList glued = classes::glue_classes({{a, 0, 2}, {b, shift_b, 2}});
        for (const auto& x : domain) {
            bool in_a = false, in_b = false;
            for (std::size_t m = 0; m < a.size(); ++m) in_a = in_a || glued[m](x);
            for (std::size_t m = a.size(); m < glued.size(); ++m) in_b = in_b || glued[m](x);
            overlaps += in_a && in_b;
        }
        const int La = dims::littlestone_dim(dims::base_table(a, domain));
        const int Lb = dims::littlestone_dim(dims::base_table(b, domain));
        excess += dims::littlestone_dim(dims::base_table(glued, domain)) > std::max(La, Lb) + 1;
        ++pairs;
    }
    return {make_record(id, "glued_pairs", static_cast<double>(pairs), 2, kInf, id),
            make_record(id, "support_overlaps", static_cast<double>(overlaps), 0, 0, id),
            make_record(id, "dim_above_max_plus_one", static_cast<double>(excess), 0, 0, id)};
}

inline std::vector<ResultRecord> cot_reduction(const ClaimContext& ctx) {
    const std::string id = "cot-reduction";
    std::uint64_t failures = 0, over_bound = 0, mode_mismatch = 0, total_mistakes = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        rng::Stream s(ctx.seed, {0xc07, t});
        const GeneratorList cls = classes::random_class(rng::mix(ctx.seed, {0xc08, t}), 2 + s.below(9));
        const auto pool = classes::random_pool(s, 1 + s.below(5), 3);
        const std::uint64_t M = 1 + s.below(3);
        auto adv = game::random_target_adversary(cls, pool, M, game::FeedbackMode::COT, 20, rng::mix(ctx.seed, {t}));
        learners::CotReduction red(std::make_unique<learners::BaseHalving>(cls), M);
        const auto tr = game::run_game(red, adv, M, game::FeedbackMode::COT, 20);
        failures += !learners::check_charging(red.prototype(), red.history()).ok();
        over_bound += tr.mistakes() > learners::BaseHalving(cls).mistake_bound();
        total_mistakes += tr.mistakes();
        learners::CotReduction slow(std::make_unique<learners::BaseHalving>(cls), M,
                                    learners::CotReduction::Mode::FromScratch);
        for (const auto& r : tr.rounds) {
            mode_mismatch += slow.predict(r.instance) != r.prediction;
            slow.update(r.instance, r.feedback);
        }
    }
    return {make_record(id, "games", 100, 100, kInf, id),
            make_record(id, "charging_failures", static_cast<double>(failures), 0, 0, id),
            make_record(id, "mistakes_above_halving_bound", static_cast<double>(over_bound), 0, 0, id),
            make_record(id, "from_scratch_vs_incremental_mismatches", static_cast<double>(mode_mismatch), 0, 0, id),
            make_record(id, "total_final_mistakes", static_cast<double>(total_mistakes), 0, kInf, id)};
}

inline std::vector<ResultRecord> linear(const ClaimContext& ctx) {
    const std::string id = "linear";
    std::vector<ResultRecord> out;
    const std::size_t d = 3;
    GeneratorList cls;
    for (const auto& g : classes::enumerate_thresholds(d, classes::default_weight_bound(d)))
        cls.push_back(classes::as_generator(g));
    std::vector<TokenString> pool;
    for (std::uint64_t code = 0; code < 8; ++code) pool.push_back(bits_msb_first(code, d) + TokenString("10"));
    for (std::uint64_t M : {1, 2, 3}) {
        const auto table = dims::e2e_table(cls, pool, M).dedup();
        learners::TableHalving halving(table);
        const auto worst = game::exhaustive_worst_case(halving, cls, pool, M, game::FeedbackMode::E2E, 12,
                                                       ctx.node_budget);
        out.push_back(make_record(id, "M=" + std::to_string(M) + ":halving_worst_case", static_cast<double>(worst), 0,
                                  static_cast<double>(learners::floor_log2(table.members())), id));
    }

    // Forced mistakes of the inner game on {0,1} with M = 1.
    const std::vector<TokenString> cube1{TokenString("0"), TokenString("1")};
    const auto inner_class = classes::enumerate_thresholds(1, 1);
    GeneratorList inner_gens;
    for (const auto& g : inner_class) inner_gens.push_back(classes::as_generator(g));
    const auto inner_tree = dims::shattered_tree(dims::base_table(inner_gens, cube1));
    game::TreeAdversary inner_adv(inner_gens, inner_tree, 1, game::FeedbackMode::E2E);
    learners::HalvingLearner inner_learner(inner_gens, 1);
    const auto inner_forced = game::run_game(inner_learner, inner_adv, 1, game::FeedbackMode::E2E, 10).mistakes();
    out.push_back(make_record(id, "inner_m=1_forced", static_cast<double>(inner_forced), 1, kInf, id));

    std::vector<TokenString> latch_pool{TokenString("010"), TokenString("110")};
    double fewest = kInf;
    for (std::uint64_t M : {2, 3, 4}) {
        for (game::FeedbackMode mode : {game::FeedbackMode::E2E, game::FeedbackMode::COT}) {
            for (int which = 0; which < 3; ++which) {
                auto inner = std::make_unique<game::TreeAdversary>(inner_gens, inner_tree, 1, game::FeedbackMode::E2E);
                game::LatchAdversary adv(std::move(inner), inner_class, M, mode);
                std::unique_ptr<game::Learner> learner;
                if (which == 0) learner = std::make_unique<learners::HalvingLearner>(adv.declared_class(), M);
                if (which == 1) learner = std::make_unique<learners::SoaCot>(adv.declared_class(), latch_pool, M);
                if (which == 2) learner = std::make_unique<game::MinimaxE2ELearner>(adv.declared_class(), latch_pool, M);
                fewest = std::min(fewest, static_cast<double>(game::run_game(*learner, adv, M, mode, 10).mistakes()));
            }
        }
    }
    out.push_back(make_record(id, "latch_forced_min_over_learners_and_modes", fewest,
                              static_cast<double>(inner_forced), kInf, id));
    return out;
}

inline std::vector<ResultRecord> stochastic_separation(const ClaimContext& ctx) {
    using namespace stochastic;
    const std::string id = "stoch-sep";
    std::vector<ResultRecord> out;
    std::uint64_t q_bad = 0;
    for (int sigma : {-1, 1})
        for (std::uint64_t M = 0; M <= 40; ++M) q_bad += e2e_one_prob(sigma, M) != e2e_one_prob_recursive(sigma, M);
    out.push_back(make_record(id, "closed_form_vs_recursion_mismatches", static_cast<double>(q_bad), 0, 0, id));

    double worst_z = 0;
    const std::uint64_t mc = 100000;
    for (int sigma : {-1, 1})
        for (std::uint64_t M = 1; M <= 7; ++M) {
            std::uint64_t ones = 0;
            for (std::uint64_t k = 0; k < mc; ++k) ones += sample_final_bit(sigma, M, ctx.seed + M, k);
            const double q = to_double(e2e_one_prob(sigma, M));
            const double se = std::sqrt(q * (1 - q) / static_cast<double>(mc));
            worst_z = std::max(worst_z, std::abs(static_cast<double>(ones) / mc - q) / se);
        }
    out.push_back(make_record(id, "monte_carlo_max_se_distance", worst_z, 0, 4, id));

    std::uint64_t good = 0;
    double largest = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        bool ok = true;
        for (int sigma : {-1, 1}) {
            const auto r = simulate_direct_game([] { return std::make_unique<EmpiricalMeanLearner>(); }, sigma, 10000,
                                                random_instances(rng::mix(ctx.seed, {seed})),
                                                rng::mix(ctx.seed, {seed, 1}), 10);
            ok = ok && r.regret <= 5;
            largest = std::max(largest, r.regret);
        }
        good += ok;
    }
    out.push_back(make_record(id, "direct_game_fraction_of_seeds_regret<=5", good / 200.0, 0.99, 1, id));
    out.push_back(make_record(id, "direct_game_largest_regret", largest, 0, kInf, id));

    const auto names = std::vector<std::string>{"empirical-mean", "constant-0", "constant-1", "follow-last"};
    const auto makers = deterministic_learners();
    for (std::uint64_t M : {1, 3}) {
        for (std::size_t i = 0; i < makers.size(); ++i) {
            const auto w = worst_target_regret(makers[i], M, ctx.seed, 10000);
            const auto& r = w.worst();
            out.push_back(make_record(id, "M=" + std::to_string(M) + ":" + names[i] + ":regret_minus_floor_plus_3se",
                                      r.regret - r.theory_floor + 3 * r.se, 0, kInf, id));
        }
    }
    return out;
}

inline std::vector<ResultRecord> kl_bound(const ClaimContext&) {
    const std::string id = "kl-bound";
    double worst = -kInf;
    for (int k = 1; k <= 1000; ++k) {
        const double delta = 0.25 * k / 1000.0;
        worst = std::max(worst, stochastic::kl_symmetric(delta) - 16 * delta * delta);
    }
    return {make_record(id, "max_kl_minus_16delta^2", worst, -kInf, 0, id)};
}

}  // namespace claims

inline const std::vector<Claim>& registry() {
    static const std::vector<Claim> all = {
        {"latch", 1, "latched thresholds reproduce f_{v,c}(z) at every horizon", claims::latch},
        {"cot-bound", 2, "trajectory dimension and SOA-CoT mistakes stay below the base dimension", claims::cot_bound},
        {"online-char", 3, "Littlestone dimension equals the minimax game value", claims::online_characterization},
        {"ssp-trees", 4, "realized branches obey the tree Sauer-Shelah-Perles bound", claims::ssp_trees},
        {"inflation", 5, "inflated shattered trees sit between 2^m and the SSP bound", claims::inflation},
        {"taxonomy", 6, "taxonomy window: dimension one, shattered A_M, learner bound", claims::taxonomy},
        {"second-mistake", 7, "end-to-end output on buckets is 1 exactly when M = k - i + 1", claims::second_mistake},
        {"alternating", 8, "alternating class: shattered at even M, constant at odd M", claims::alternating},
        {"hard-class", 9, "hard class rule frequencies and x^(1), x^(2) labelings", claims::hard_class},
        {"glue", 10, "glued supports are disjoint and the dimension grows by at most one", claims::glue},
        {"cot-reduction", 11, "every final mistake charges a distinct base mistake", claims::cot_reduction},
        {"linear", 12, "halving bound on latched thresholds and latch-forced mistakes", claims::linear},
        {"stoch-sep", 13, "stochastic marginals, direct-game regret and end-to-end regret floors",
         claims::stochastic_separation},
        {"kl-bound", 14, "symmetric Bernoulli KL is at most 16 delta^2", claims::kl_bound},
    };
    return all;
}

inline const Claim* find_claim(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

inline std::string known_claim_ids() {
    std::string s;
    for (const auto& c : registry()) s += (s.empty() ? "" : ", ") + c.id;
    return s + ", all";
}

}  // namespace arlab::cli
