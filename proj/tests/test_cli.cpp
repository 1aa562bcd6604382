#include <doctest.h>

#include "jsrlab/cli/config.hpp"
#include "jsrlab/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace jsrlab;
using namespace jsrlab::cli;
using json = nlohmann::json;

TEST_CASE("config entries cover every knob and reject the rest") {
    RunConfig cfg;
    apply_config_entry(cfg, "input", "a.json");
    apply_config_entry(cfg, "out", "r.json");
    apply_config_entry(cfg, "format", "csv");
    apply_config_entry(cfg, "norm", "2");
    apply_config_entry(cfg, "delta", "0.25");
    apply_config_entry(cfg, "dedup_tol", "1e-9");
    apply_config_entry(cfg, "idem_tol", "1e-6");
    apply_config_entry(cfg, "budget_products", "1234");
    apply_config_entry(cfg, "budget_powers", "5");
    apply_config_entry(cfg, "budget_depth", "7");
    apply_config_entry(cfg, "seed", "42");
    apply_config_entry(cfg, "trials", "3");
    apply_config_entry(cfg, "eps", "0.125");
    CHECK(cfg.input == "a.json");
    CHECK(cfg.out == "r.json");
    CHECK(cfg.format == "csv");
    CHECK(cfg.norm == "2");
    CHECK(cfg.delta == 0.25);
    CHECK(cfg.dedup_tol == 1e-9);
    CHECK(cfg.idem_tol == 1e-6);
    CHECK(cfg.budget_products == 1234);
    CHECK(cfg.budget_powers == 5);
    CHECK(cfg.budget_depth == 7);
    CHECK(cfg.seed == 42u);
    CHECK(cfg.trials == 3);
    CHECK(cfg.eps == 0.125);

    CHECK_THROWS_AS(apply_config_entry(cfg, "zzz", "1"), ParseError);
    CHECK_THROWS_AS(apply_config_entry(cfg, "command", "jsr"), ParseError); // driver-owned
    CHECK_THROWS_AS(apply_config_entry(cfg, "delta", "fast"), ParseError);
    CHECK_THROWS_AS(apply_config_entry(cfg, "seed", "1.5"), ParseError);
}

TEST_CASE("config text: comments, blanks, trimming, line positions") {
    RunConfig cfg;
    apply_config_text(cfg, "# full-line comment\n\n  delta = 0.125  # trailing\n\tseed=7\n");
    CHECK(cfg.delta == 0.125);
    CHECK(cfg.seed == 7u);

    auto where_of = [](const std::string& text) {
        RunConfig c;
        try {
            apply_config_text(c, text);
        } catch (const ParseError& e) {
            return e.where;
        }
        return std::string("no error");
    };
    CHECK(where_of("delta: 0.1") == "line 1");
    CHECK(where_of("delta=0.1\n=5") == "line 2");
    CHECK(where_of("delta=0.1\n\nbudget=1") == "budget"); // unknown key names itself
}

TEST_CASE("config validation bounds") {
    RunConfig cfg;
    CHECK_NOTHROW(validate_config(cfg));
    auto bad = [](auto&& poke) {
        RunConfig c;
        poke(c);
        CHECK_THROWS_AS(validate_config(c), ValidationError);
    };
    bad([](RunConfig& c) { c.delta = 0.0; });
    bad([](RunConfig& c) { c.dedup_tol = -1.0; });
    bad([](RunConfig& c) { c.idem_tol = 0.0; });
    bad([](RunConfig& c) { c.eps = 0.0; });
    bad([](RunConfig& c) { c.budget_products = 0; });
    bad([](RunConfig& c) { c.budget_powers = -1; });
    bad([](RunConfig& c) { c.budget_depth = 0; });
    bad([](RunConfig& c) { c.trials = 0; });
    bad([](RunConfig& c) { c.norm = "euclid"; });
    bad([](RunConfig& c) { c.format = "xml"; });
}

TEST_CASE("canonical form and hash: deterministic, plumbing-free") {
    RunConfig a, b;
    a.command = b.command = "jsr";
    a.input = b.input = "set.json";
    CHECK(canonical_config(a) == canonical_config(b));
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).substr(0, 6) == "fnv1a:");
    CHECK(config_hash(a).size() == 6 + 16);

    // report destination and projection do not change identity
    b.out = "elsewhere.json";
    b.format = "csv";
    CHECK(config_hash(a) == config_hash(b));
    CHECK(canonical_config(a).find("out=") == std::string::npos);

    // any semantic knob does
    b.delta = 0.2;
    CHECK(config_hash(a) != config_hash(b));

    // frozen so accidental canonical-form drift shows up in review
    RunConfig g;
    g.command = "jsr";
    g.input = "data/sets/golden_pair.json";
    CHECK(config_hash(g) == "fnv1a:6819b7003ebbb3a1");
}

// ------------------------------------------------------------- binary driving

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string capture = "/tmp/jsrlab_cli_capture.txt";
    const std::string cmd = std::string(JSRLAB_BIN) + " " + args + " >" + capture + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(capture);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string golden = std::string(JSRLAB_DATA_DIR) + "/sets/golden_pair.json";

} // namespace

TEST_CASE("jsr on the golden pair: bracket, report shape, exit 0") {
    auto r = run_cli("jsr --input " + golden + " --delta 0.05");
    REQUIRE(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["version"] == "0.1.0");
    CHECK(rep["command"] == "jsr");
    CHECK(rep["config"]["delta"] == 0.05);
    CHECK(rep["config_hash"].get<std::string>().substr(0, 6) == "fnv1a:");
    const double phi = 1.6180339887498949;
    CHECK(rep["result"]["lower"].get<double>() <= phi);
    CHECK(phi <= rep["result"]["upper"].get<double>());
    CHECK(rep["result"]["upper"].get<double>() - rep["result"]["lower"].get<double>() <= 0.05);
    CHECK(rep["result"]["witness"] == json::array({0, 1}));
    CHECK(rep["result"].contains("depth"));
    CHECK(rep["result"].contains("budget_spent"));
}

TEST_CASE("reports are byte-identical for identical config and input") {
    REQUIRE(run_cli("jsr --input " + golden + " --out /tmp/jsrlab_rep_a.json").code == 0);
    REQUIRE(run_cli("jsr --input " + golden + " --out /tmp/jsrlab_rep_b.json").code == 0);
    const std::string a = slurp("/tmp/jsrlab_rep_a.json");
    CHECK(!a.empty());
    CHECK(a == slurp("/tmp/jsrlab_rep_b.json"));
}

TEST_CASE("csv projection shares the json run's identity") {
    auto rj = run_cli("jsr --input " + golden);
    auto rc = run_cli("jsr --input " + golden + " --format csv");
    REQUIRE(rj.code == 0);
    REQUIRE(rc.code == 0);
    const std::string hash = json::parse(rj.out)["config_hash"];
    CHECK(rc.out.find("# config_hash=" + hash) != std::string::npos);
    CHECK(rc.out.find("lower,upper,depth,budget_spent") != std::string::npos);
}

TEST_CASE("schema errors exit 1") {
    std::ofstream("/tmp/jsrlab_empty_set.json") << "{\"dim\": 2, \"members\": []}";
    CHECK(run_cli("jsr --input /tmp/jsrlab_empty_set.json").code == 1);
    CHECK(run_cli("jsr --input /tmp/jsrlab_no_such_file.json").code == 1);
    CHECK(run_cli("jsr --input " + golden + " --delta nonsense").code == 1);
    CHECK(run_cli("jsr --input " + golden + " --no-such-flag 1").code == 1);
    CHECK(run_cli("radcal normalize \"Rcq v\"").code == 1);

    std::ofstream("/tmp/jsrlab_bad_cfg.txt") << "budget=10\n";
    CHECK(run_cli("jsr --input " + golden + " --config /tmp/jsrlab_bad_cfg.txt").code == 1);
}

TEST_CASE("config file applies and flags override it") {
    std::ofstream("/tmp/jsrlab_cfg.txt") << "delta = 0.2\nseed = 9\n";
    auto base = run_cli("jsr --input " + golden + " --config /tmp/jsrlab_cfg.txt");
    REQUIRE(base.code == 0);
    CHECK(json::parse(base.out)["config"]["delta"] == 0.2);
    CHECK(json::parse(base.out)["config"]["seed"] == 9);

    auto over = run_cli("jsr --input " + golden + " --config /tmp/jsrlab_cfg.txt --delta 0.05");
    REQUIRE(over.code == 0);
    CHECK(json::parse(over.out)["config"]["delta"] == 0.05);
    CHECK(json::parse(over.out)["config"]["seed"] == 9);
}

TEST_CASE("verification and budget exits: 2 and 3") {
    // an open question is not a verified identity
    CHECK(run_cli("radcal prove --leq Rad Rbw").code == 2);
    // starved bracket search reports exhaustion
    auto r = run_cli("jsr --input " + golden + " --delta 1e-6 --budget 50");
    CHECK(r.code == 3);
    CHECK(json::parse(r.out)["result"]["exhausted"] == true);
}

TEST_CASE("the scattered-radical identity proves from the command line") {
    auto r = run_cli("radcal prove \"Rad v Rhc\" Rsc");
    REQUIRE(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["result"]["verdict"] == "yes");
    CHECK(!rep["result"]["steps"].empty());
}

TEST_CASE("radcal eval reads a bundled witness") {
    const std::string algebra_path = std::string(JSRLAB_DATA_DIR) + "/algebras/ut2.json";
    auto r = run_cli("radcal eval --algebra " + algebra_path + " Rad");
    REQUIRE(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["result"]["subspace"]["dim"] == 1);
    CHECK(rep["result"]["subspace"]["ambient"] == 3);
}

TEST_CASE("accept command runs the gate and reports per criterion") {
    auto r = run_cli("accept --out /tmp/jsrlab_accept.json");
    REQUIRE(r.code == 0);
    for (int i = 1; i <= 11; ++i)
        CHECK(r.out.find("criterion " + std::to_string(i) + ":") != std::string::npos);
    json rep = json::parse(slurp("/tmp/jsrlab_accept.json"));
    CHECK(rep["result"]["failures"] == 0);
    CHECK(rep["result"]["criteria"].size() == 11);
}
