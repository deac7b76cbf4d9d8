#pragma once

// The four runner commands. Each writes its outputs under out/<experiment>/
// and returns the records it emitted; exit codes follow from the pass flags.

#include "arlab/cli/claims.hpp"
#include "arlab/cli/manifest.hpp"
#include "arlab/cli/records.hpp"
#include "arlab/stochastic.hpp"

#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace arlab::cli {

enum ExitCode : int { kAllPass = 0, kSomeFail = 1, kConfigError = 2 };

struct CommandResult {
    std::vector<ResultRecord> records;
    std::vector<std::filesystem::path> files;
    int exit_code() const { return all_pass(records) ? kAllPass : kSomeFail; }
};

namespace detail {

inline ResultRecord windowed(const Manifest& m, const std::string& metric, double value, double lo, double hi,
                             const std::string& claim) {
    if (auto it = m.expect.find(metric); it != m.expect.end()) {
        lo = it->second.first;
        hi = it->second.second;
    }
    return make_record(m.experiment, metric, value, lo, hi, claim);
}

inline ResultRecord failure(const Manifest& m, const std::string& metric, const std::string& claim) {
    return make_record(m.experiment, metric, std::numeric_limits<double>::quiet_NaN(), 0, 0, claim);
}

inline std::filesystem::path experiment_dir(const std::filesystem::path& out, const Manifest& m) {
    return out / m.experiment;
}

}  // namespace detail

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// Base, trajectory and end-to-end Littlestone dimensions plus e2e VC.
inline CommandResult cmd_dims(const Manifest& m, const std::filesystem::path& out) {
    CommandResult res;
    const std::string claim = "dims:" + m.cls.construction;
    try {
        const BuiltClass b = build_class(m.cls, m.budgets);
        res.records.push_back(detail::windowed(m, "base_L", dims::littlestone_dim(dims::base_table(b.cls, b.pool)),
                                               -kUnbounded, kUnbounded, claim));
        for (std::uint64_t M : m.Ms) {
            const std::string tag = "M=" + std::to_string(M) + ":";
            const auto et = dims::e2e_table(b.cls, b.pool, M);
            res.records.push_back(detail::windowed(m, tag + "cot_L",
                                                   dims::littlestone_dim_multiclass(dims::cot_table(b.cls, b.pool, M)),
                                                   -kUnbounded, kUnbounded, claim));
            res.records.push_back(
                detail::windowed(m, tag + "e2e_L", dims::littlestone_dim(et), -kUnbounded, kUnbounded, claim));
            res.records.push_back(detail::windowed(m, tag + "e2e_VC", dims::vc_dim(et), -kUnbounded, kUnbounded, claim));
        }
    } catch (const std::length_error& e) {
        res.records.push_back(detail::failure(m, std::string("budget_exceeded: ") + e.what(), claim));
    }
    const auto path = detail::experiment_dir(out, m) / "dims.csv";
    write_atomic(path, records_csv(res.records));
    res.files.push_back(path);
    return res;
}

inline CommandResult cmd_game(const Manifest& m, const std::filesystem::path& out) {
    CommandResult res;
    const std::string claim = "game:" + m.learner + "/" + m.adversary;
    const auto dir = detail::experiment_dir(out, m);
    try {
        const BuiltClass b = build_class(m.cls, m.budgets);
        for (std::uint64_t M : m.Ms) {
            const std::string tag = "M=" + std::to_string(M) + ":";
            auto learner = make_learner(m.learner, b, M);
            if (m.adversary == "exhaustive") {
                try {
                    const auto worst = game::exhaustive_worst_case(*learner, b.cls, b.pool, M, m.mode, m.horizon,
                                                                   m.budgets.nodes);
                    res.records.push_back(
                        detail::windowed(m, tag + "worst_case_mistakes", static_cast<double>(worst), 0, kUnbounded, claim));
                } catch (const game::BudgetExceeded& e) {
                    res.records.push_back(make_record(m.experiment, tag + "budget_exceeded_partial_bound",
                                                      static_cast<double>(e.partial), 0, -1, claim));
                }
                continue;
            }
            auto adv = make_adversary(m, b, M);
            try {
                auto tr = game::run_game(*learner, *adv, M, m.mode, m.horizon);
                tr.seed = m.seed;
                tr.config = m.text;
                std::ostringstream os;
                game::write_jsonl(os, tr);
                const auto path = dir / ("transcript_M" + std::to_string(M) + ".jsonl");
                write_atomic(path, os.str());
                res.files.push_back(path);
                res.records.push_back(
                    detail::windowed(m, tag + "mistakes", static_cast<double>(tr.mistakes()), 0, kUnbounded, claim));
            } catch (const game::RealizabilityError& e) {
                res.records.push_back(detail::failure(m, tag + "realizability_violation", claim));
            }
        }
    } catch (const std::length_error& e) {
        res.records.push_back(detail::failure(m, std::string("budget_exceeded: ") + e.what(), claim));
    }
    const auto path = dir / "summary.csv";
    write_atomic(path, records_csv(res.records));
    res.files.push_back(path);
    return res;
}

// Runs one registered claim or all of them.
inline CommandResult cmd_verify(const std::string& claim_id, const ClaimContext& ctx, const std::filesystem::path& out,
                                const std::string& experiment = "verify") {
    std::vector<const Claim*> selected;
    if (claim_id == "all") {
        for (const auto& c : registry()) selected.push_back(&c);
    } else if (const Claim* c = find_claim(claim_id)) {
        selected.push_back(c);
    } else {
        throw ConfigError("unknown claim '" + claim_id + "'; known claims: " + known_claim_ids());
    }
    CommandResult res;
    for (const Claim* c : selected)
        for (auto& r : c->run(ctx)) res.records.push_back(std::move(r));
    const auto path = out / experiment / "records.csv";
    write_atomic(path, records_csv(res.records));
    res.files.push_back(path);
    return res;
}

inline stochastic::LearnerFactory stochastic_learner(const std::string& name) {
    using namespace stochastic;
    if (name == "empirical-mean") return [] { return std::make_unique<EmpiricalMeanLearner>(); };
    if (name == "constant-0") return [] { return std::make_unique<ConstantLearner>(0); };
    if (name == "constant-1") return [] { return std::make_unique<ConstantLearner>(1); };
    if (name == "follow-last") return [] { return std::make_unique<FollowLastLearner>(); };
    throw ConfigError("unknown stochastic learner '" + name +
                      "' (known: empirical-mean, constant-0, constant-1, follow-last)");
}

// Params: game ("direct" or "e2e"), learners, sigmas, T (0 selects the
// separation horizon for e2e), trials, M (odd, e2e only).
inline CommandResult cmd_stochastic(const Manifest& m, const std::filesystem::path& out) {
    const auto& p = m.stochastic;
    const auto kind = detail::get_or<std::string>(p, "game", "e2e");
    const auto names = detail::get_or<std::vector<std::string>>(p, "learners", {"empirical-mean"});
    const auto sigmas = detail::get_or<std::vector<int>>(p, "sigmas", {-1, 1});
    const auto T_in = detail::get_or<std::uint64_t>(p, "T", 0);
    const auto trials = detail::get_or<std::uint64_t>(p, "trials", 1000);
    if (kind != "direct" && kind != "e2e") throw ConfigError("stochastic.game must be 'direct' or 'e2e'");
    for (int s : sigmas)
        if (s != 1 && s != -1) throw ConfigError("stochastic.sigmas entries must be -1 or 1");
    if (kind == "e2e")
        for (std::uint64_t M : m.Ms)
            if (M % 2 == 0) throw ConfigError("stochastic: M must be odd, got " + std::to_string(M));
    if (kind == "direct" && T_in == 0) throw ConfigError("stochastic: the direct game needs T");

    CommandResult res;
    std::ostringstream csv;
    stochastic::write_csv_header(csv);
    const std::vector<std::uint64_t> Ms = kind == "direct" ? std::vector<std::uint64_t>{0} : m.Ms;
    for (const auto& name : names) {
        const auto make = stochastic_learner(name);
        for (std::uint64_t M : Ms) {
            const std::uint64_t T = T_in ? T_in : stochastic::separation_horizon(M);
            double worst_regret = -kUnbounded, worst_floor = 0, worst_se = 0;
            for (int sigma : sigmas) {
                const auto r = kind == "direct"
                                   ? stochastic::simulate_direct_game(make, sigma, T, stochastic::random_instances(m.seed),
                                                                      m.seed, trials)
                                   : stochastic::simulate_e2e_game(make, sigma, M, T, m.seed, trials);
                stochastic::write_csv_row(csv, r);
                if (r.regret > worst_regret) {
                    worst_regret = r.regret;
                    worst_floor = r.theory_floor;
                    worst_se = r.se;
                }
            }
            const std::string tag = name + ":M=" + std::to_string(M) + ":";
            res.records.push_back(detail::windowed(m, tag + "max_regret", worst_regret, -kUnbounded, kUnbounded,
                                                   "stochastic:" + kind));
            if (kind == "e2e")
                res.records.push_back(detail::windowed(m, tag + "max_regret_minus_floor_plus_3se",
                                                       worst_regret - worst_floor + 3 * worst_se, 0, kUnbounded,
                                                       "stochastic:e2e"));
        }
    }
    if (detail::get_or<bool>(p, "q_check", true) && kind == "e2e") {
        std::uint64_t bad = 0;
        for (int sigma : {-1, 1})
            for (std::uint64_t M = 0; M <= 40; ++M)
                bad += stochastic::e2e_one_prob(sigma, M) != stochastic::e2e_one_prob_recursive(sigma, M);
        res.records.push_back(make_record(m.experiment, "q_closed_form_mismatches", static_cast<double>(bad), 0, 0,
                                          "stochastic:q"));
    }
    const auto dir = detail::experiment_dir(out, m);
    write_atomic(dir / "regret.csv", csv.str());
    write_atomic(dir / "records.csv", records_csv(res.records));
    res.files = {dir / "regret.csv", dir / "records.csv"};
    return res;
}

}  // namespace arlab::cli
