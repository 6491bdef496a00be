#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "muig/cli.hpp"
#include "muig/gen.hpp"
#include "muig/io.hpp"
#include "oracles.hpp"

using namespace muig;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Run r = run(std::move(args));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return json::parse(r.out);
}

std::string fixture(const std::string& name) { return std::string(MUIG_FIXTURES) + "/" + name; }
std::string scratch(const std::string& name) { return std::string(MUIG_SCRATCH) + "/" + name; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("counterexample") {
    const Run r = run({"counterexample", "--with-cut"});
    CHECK(r.code == 0);
    CHECK(r.out.find("brute=7 dp=7 bounded=7 claimed=8") != std::string::npos);
    const json doc = run_json({"counterexample"});
    CHECK(doc["subcommand"] == "counterexample");
    CHECK(doc["version"] == kVersion);
    CHECK(doc["result"]["claimed"] == 8);
    CHECK(doc["result"]["example_cut"] == json::array({1, 4, 5}));
    CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("maxcut with every algorithm") {
    for (const char* algo : {"brute", "dp", "bounded"}) {
        const json doc = run_json({"maxcut", fixture("ce.json"), "--algo", algo, "--with-cut"});
        CHECK(doc["result"]["value"] == 7);
        CHECK(doc["result"]["cut"].size() >= 1);
    }
    const Run human = run({"maxcut", fixture("claw.muir")});
    CHECK(human.code == 0);
    CHECK(human.out.rfind("maxcut 3 (dp)", 0) == 0);
    CHECK(run({"--parallel", "2", "maxcut", fixture("ce.json"), "--threshold", "1"}).out.rfind("maxcut 7", 0) == 0);
    CHECK(run({"maxcut", fixture("ce.json"), "--algo", "fast"}).code == 1);
}

TEST_CASE("expression commands") {
    const json doc = run_json({"eval-expr", fixture("diamond.sexp")});
    CHECK(doc["result"]["n"] == 4);
    CHECK(doc["result"]["m"] == 5);
    CHECK(doc["result"]["width"] == 2);

    for (const char* method : {"columns", "groups"}) {
        const std::string path = scratch(std::string("ce_") + method + ".sexp");
        const json c = run_json({"cwd", fixture("ce.json"), "--method", method, "-o", path});
        CHECK(c["result"]["width"] <= c["result"]["bound"]);
        const json e = run_json({"eval-expr", path});
        CHECK(e["result"]["m"] == 10);
        CHECK(e["result"]["n"] == 6);
    }

    const json b = run_json({"bounds", fixture("ce.json")});
    CHECK(b["result"]["k"] == 2);
    CHECK(b["result"]["bounds"]["columns"] == 5);
    CHECK(b["result"]["bounds"]["rows"] == 6);
}

TEST_CASE("build-model and verify") {
    const std::string path = scratch("claw_model.json");
    const Run built = run({"build-model", fixture("claw.muir"), "-o", path});
    REQUIRE(built.code == 0);
    const UBubbleModel m = model_from_json(json::parse(read_file(path)));
    CHECK(m.column_count() == 3);
    CHECK(run({"verify", path}).code == 0);
    CHECK(run({"verify", fixture("ce.json")}).code == 0);

    const Run bad = run({"verify", fixture("bad_model.json")});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("FAILED") != std::string::npos);
    CHECK(run({"maxcut", fixture("bad_model.json")}).code == 1);
}

TEST_CASE("input errors exit with 1") {
    CHECK(run({"build-model", fixture("empty.muir")}).code == 1);
    const Run dup = run({"build-model", fixture("duplicate.muir")});
    CHECK(dup.code == 1);
    CHECK(!dup.err.empty());
    CHECK(run({"maxcut", fixture("missing.json")}).code == 1);
    CHECK(run({"eval-expr", fixture("ce.json")}).code == 1);
    CHECK(run({"--frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"gen", "--n", "0", "--seed", "1"}).code == 1);
    CHECK(run({"gen", "--n", "3", "--seed", "1", "--kinds", "1,2"}).code == 1);
}

TEST_CASE("help and version") {
    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("maxcut") != std::string::npos);
    CHECK(run({"--version"}).out.find(kVersion) != std::string::npos);
}

TEST_CASE("gen is deterministic and agrees with the library") {
    const std::vector<std::string> args = {"gen", "--n", "25", "--seed", "77", "--grid", "3", "--kinds", "1,0,2,1"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    GenParams p;
    p.n = 25;
    p.seed = 77;
    p.grid = 3;
    p.kind_weights = {1, 0, 2, 1};
    CHECK(a.out == write_muir(random_representation(p)));

    const std::string path = scratch("gen_model.json");
    CHECK(run({"gen", "--n", "25", "--seed", "77", "--grid", "3", "--kinds", "1,0,2,1", "--model", "-o", path}).code == 0);
    CHECK(model_from_json(json::parse(read_file(path))) == random_model(p));
}

TEST_CASE("brute force and DP agree through the command line") {
    const auto corpus = oracle::load_corpus(MUIG_FIXTURES "/corpus.jsonl");
    for (std::size_t i = 0; i < corpus.size(); i += 5) {
        const std::string path = scratch("corpus_" + std::to_string(i) + ".json");
        write_file(path, model_to_json(corpus[i].model).dump());
        const json brute = run_json({"maxcut", path, "--algo", "brute"});
        const json dp = run_json({"maxcut", path, "--algo", "dp", "--with-cut"});
        CHECK(brute["result"]["value"] == corpus[i].maxcut);
        CHECK(dp["result"]["value"] == corpus[i].maxcut);
    }
}

}
