#include "arlab/cli/commands.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arlab;
using namespace arlab::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("arlab_test_cli_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Manifest manifest(const std::string& text) { return parse_manifest(nlohmann::json::parse(text)); }

}  // namespace

TEST_CASE("csv fields are quoted only when needed") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(csv_row({"x", "y,z"}) == "x,\"y,z\"\n");
}

TEST_CASE("record pass flags agree with their windows") {
    CHECK(make_record("e", "m", 1, 0, 1, "c").pass);
    CHECK_FALSE(make_record("e", "m", 1.5, 0, 1, "c").pass);
    CHECK_FALSE(make_record("e", "m", std::nan(""), 0, 1, "c").pass);
    CHECK(make_record("e", "m", 1e9, 0, kUnbounded, "c").pass);
    CHECK_FALSE(all_pass({}));
}

TEST_CASE("atomic writes replace the target and leave no temporary") {
    const auto dir = scratch("atomic");
    write_atomic(dir / "f.csv", "one\n");
    write_atomic(dir / "f.csv", "two\n");
    CHECK(slurp(dir / "f.csv") == "two\n");
    CHECK_FALSE(std::filesystem::exists(dir / "f.csv.tmp"));
}

TEST_CASE("manifest parsing") {
    const auto m = manifest(R"({"experiment": "x", "class": {"construction": "random", "seed": 5}, "M_range": [2, 4],
                                "mode": "e2e", "budgets": {"nodes": 7}, "expect": {"base_L": [0, "inf"]}})");
    CHECK(m.experiment == "x");
    CHECK(m.cls.seed == 5);
    CHECK(m.Ms == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(m.mode == game::FeedbackMode::E2E);
    CHECK(m.budgets.nodes == 7);
    CHECK(m.budgets.max_class == Budgets{}.max_class);
    CHECK(std::isinf(m.expect.at("base_L").second));
    CHECK(manifest(R"({"M": [1, 3]})").Ms == std::vector<std::uint64_t>{1, 3});

    CHECK_THROWS_AS(manifest(R"({"colour": 1})"), ConfigError);
    CHECK_THROWS_AS(manifest(R"({"M": 1, "M_range": [1, 2]})"), ConfigError);
    CHECK_THROWS_AS(manifest(R"({"M_range": [3, 2]})"), ConfigError);
    CHECK_THROWS_AS(manifest(R"({"mode": "sideways"})"), ConfigError);
    CHECK_THROWS_AS(manifest(R"({"horizon": "long"})"), ConfigError);
    CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), ConfigError);
}

TEST_CASE("class builders respect budgets") {
    Budgets tight;
    tight.max_class = 3;
    ClassSpec spec;
    spec.params = {{"members", 4}};
    CHECK_THROWS_AS(build_class(spec, tight), BudgetError);
    spec.construction = "hard";
    spec.params = {{"M", 4}, {"N", 10}};
    CHECK_THROWS_AS(build_class(spec, tight), BudgetError);
    spec.construction = "nonsense";
    CHECK_THROWS_AS(build_class(spec, Budgets{}), ConfigError);

    spec.construction = "linear";
    spec.params = {{"d", 2}};
    const auto b = build_class(spec, Budgets{});
    CHECK(b.cls.size() == 14);
    CHECK(b.pool.size() == 4);
    CHECK_THROWS_AS(make_learner("taxonomy", b, 2), ConfigError);
    CHECK_THROWS_AS(make_learner("oracle", b, 2), ConfigError);
}

TEST_CASE("dims on the taxonomy window reports base dimension one") {
    const auto m = manifest(R"({"experiment": "tax", "class": {"construction": "taxonomy",
                                "params": {"window": [256, 257, 300]}}, "M": 256, "expect": {"base_L": [1, 1]}})");
    const auto out = scratch("dims");
    const auto res = cmd_dims(m, out);
    REQUIRE(res.exit_code() == kAllPass);
    CHECK(res.records.front().metric == "base_L");
    CHECK(res.records.front().value == 1);
    CHECK(slurp(out / "tax" / "dims.csv").rfind("experiment,metric,value,lo,hi,pass,claim\n", 0) == 0);
}

TEST_CASE("dims flags a budget overrun as a failing record") {
    const auto m = manifest(R"({"experiment": "big", "class": {"construction": "random", "params": {"members": 50}},
                                "budgets": {"max_class": 10}})");
    const auto res = cmd_dims(m, scratch("budget"));
    CHECK(res.exit_code() == kSomeFail);
    REQUIRE(res.records.size() == 1);
    CHECK(std::isnan(res.records[0].value));
}

TEST_CASE("game writes transcripts that replay against the target") {
    const auto m = manifest(R"({"experiment": "g", "class": {"construction": "random", "params": {"members": 6},
                                "seed": 3}, "M": 2, "learner": "halving", "adversary": "random-target",
                                "mode": "cot", "horizon": 10, "seed": 9})");
    const auto out = scratch("game");
    const auto res = cmd_game(m, out);
    REQUIRE(res.exit_code() == kAllPass);
    std::ifstream is(out / "g" / "transcript_M2.jsonl");
    const auto tr = game::read_jsonl(is);
    CHECK(tr.rounds.size() == 10);
    CHECK(tr.seed == 9);
    CHECK(static_cast<double>(tr.mistakes()) == res.records.front().value);
    const auto b = build_class(m.cls, m.budgets);
    bool some_consistent = false;
    for (const auto& g : b.cls) some_consistent = some_consistent || game::transcript_consistent_with(tr, g);
    CHECK(some_consistent);
}

TEST_CASE("exhaustive game under a tiny node budget fails with a partial bound") {
    const auto m = manifest(R"({"experiment": "e", "class": {"construction": "linear", "params": {"d": 2}}, "M": 2,
                                "learner": "halving", "mode": "e2e", "budgets": {"nodes": 1}})");
    const auto res = cmd_game(m, scratch("nodes"));
    CHECK(res.exit_code() == kSomeFail);
    CHECK(res.records.front().metric == "M=2:budget_exceeded_partial_bound");
}

TEST_CASE("stochastic outputs are byte-identical across reruns") {
    const auto m = manifest(R"({"experiment": "s", "M": [1, 3], "seed": 4,
                                "stochastic": {"game": "e2e", "learners": ["empirical-mean", "follow-last"],
                                               "trials": 200}})");
    const auto a = scratch("stoch_a"), b = scratch("stoch_b");
    cmd_stochastic(m, a);
    cmd_stochastic(m, b);
    CHECK(slurp(a / "s" / "regret.csv") == slurp(b / "s" / "regret.csv"));
    CHECK(slurp(a / "s" / "records.csv") == slurp(b / "s" / "records.csv"));
    CHECK(slurp(a / "s" / "regret.csv").rfind("sigma,M,T,trials,regret,se,theory_floor,seed\n", 0) == 0);

    CHECK_THROWS_AS(cmd_stochastic(manifest(R"({"M": 2})"), scratch("even")), ConfigError);
    CHECK_THROWS_AS(cmd_stochastic(manifest(R"({"stochastic": {"game": "direct"}})"), scratch("noT")), ConfigError);
    CHECK_THROWS_AS(cmd_stochastic(manifest(R"({"M": 1, "stochastic": {"learners": ["oracle"]}})"), scratch("l")),
                    ConfigError);
}

TEST_CASE("verify runs single claims and rejects unknown ids") {
    const auto out = scratch("verify");
    const auto res = cmd_verify("kl-bound", ClaimContext{}, out);
    CHECK(res.exit_code() == kAllPass);
    for (const auto& r : res.records) CHECK(r.pass == r.recompute());
    CHECK(std::filesystem::exists(out / "verify" / "records.csv"));
    try {
        cmd_verify("nope", ClaimContext{}, out);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("latch") != std::string::npos);
    }
}

TEST_CASE("registry covers fourteen criteria with distinct ids") {
    std::set<std::string> ids;
    std::set<int> criteria;
    for (const auto& c : registry()) {
        ids.insert(c.id);
        criteria.insert(c.criterion);
    }
    CHECK(ids.size() == 14);
    CHECK(criteria == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});
    CHECK(find_claim("all") == nullptr);
}
