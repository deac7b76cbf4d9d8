// Experiment runner: arlab {dims,game,verify,stochastic} [--manifest PATH] [--seed N] [--out DIR] [--budget-*]

#include "arlab/cli/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>

namespace {

struct Common {
    std::string manifest;
    std::optional<std::uint64_t> seed;
    std::string out = "results";
    std::optional<std::uint64_t> max_class, max_pool, nodes;
};

void add_common(CLI::App* sub, Common& c, bool manifest_required) {
    auto* opt = sub->add_option("--manifest", c.manifest, "experiment manifest (JSON)");
    if (manifest_required) opt->required();
    sub->add_option("--seed", c.seed, "override the manifest seed");
    sub->add_option("--out", c.out, "output directory")->capture_default_str();
    sub->add_option("--budget-max-class", c.max_class, "largest class the oracles may build");
    sub->add_option("--budget-max-pool", c.max_pool, "largest instance pool");
    sub->add_option("--budget-nodes", c.nodes, "node budget for exhaustive game search");
}

arlab::cli::Manifest resolve(const Common& c) {
    arlab::cli::Manifest m = c.manifest.empty() ? arlab::cli::Manifest{} : arlab::cli::load_manifest(c.manifest);
    if (c.manifest.empty()) m.experiment = "verify";
    if (c.seed) {
        m.seed = *c.seed;
        m.cls.seed = *c.seed;
    }
    if (c.max_class) m.budgets.max_class = *c.max_class;
    if (c.max_pool) m.budgets.max_pool = *c.max_pool;
    if (c.nodes) m.budgets.nodes = *c.nodes;
    return m;
}

void report(const arlab::cli::CommandResult& r) {
    for (const auto& rec : r.records)
        std::cout << (rec.pass ? "PASS " : "FAIL ") << rec.experiment << ' ' << rec.metric << " = "
                  << arlab::cli::format_number(rec.value) << " in [" << arlab::cli::format_number(rec.lo) << ", "
                  << arlab::cli::format_number(rec.hi) << "]\n";
    for (const auto& f : r.files) std::cout << "wrote " << f.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"autoregressive learnability lab"};
    app.require_subcommand(1);
    Common dims_opts, game_opts, verify_opts, stoch_opts;
    std::string claim;
    auto* dims = app.add_subcommand("dims", "dimension computations for a manifest's class");
    add_common(dims, dims_opts, true);
    auto* game = app.add_subcommand("game", "run a learner against an adversary");
    add_common(game, game_opts, true);
    auto* verify = app.add_subcommand("verify", "run registered verification suites");
    add_common(verify, verify_opts, false);
    verify->add_option("--claim", claim, "claim id or 'all'");
    auto* stoch = app.add_subcommand("stochastic", "stochastic regret simulations");
    add_common(stoch, stoch_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : arlab::cli::kConfigError;
    }

    try {
        arlab::cli::CommandResult result;
        if (dims->parsed()) {
            result = arlab::cli::cmd_dims(resolve(dims_opts), dims_opts.out);
        } else if (game->parsed()) {
            result = arlab::cli::cmd_game(resolve(game_opts), game_opts.out);
        } else if (verify->parsed()) {
            const auto m = resolve(verify_opts);
            arlab::cli::ClaimContext ctx;
            ctx.seed = m.seed;
            ctx.node_budget = m.budgets.nodes;
            const std::string id = claim.empty() ? m.claim : claim;
            result = arlab::cli::cmd_verify(id, ctx, verify_opts.out, m.experiment);
        } else {
            result = arlab::cli::cmd_stochastic(resolve(stoch_opts), stoch_opts.out);
        }
        report(result);
        return result.exit_code();
    } catch (const arlab::cli::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return arlab::cli::kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return arlab::cli::kConfigError;
    }
}
