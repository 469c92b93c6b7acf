#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "wckit/cli.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = wc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("no arguments prints usage and exits 2") {
    const auto r = run({});
    CHECK(r.code == 2);
    CHECK(r.err.find("usage:") != std::string::npos);
}

TEST_CASE("unknown subcommand and unknown keys exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"classify", "n=5", "mood=low"}).code == 2);
    CHECK(run({"classify"}).code == 2);              // missing n
    CHECK(run({"classify", "n=5", "n=7"}).code == 2); // duplicate key
    CHECK(run({"classify", "n=5", "--frob"}).code == 2);
}

TEST_CASE("guard violations exit 2") {
    CHECK(run({"sp", "genus=2", "m=8"}).code == 2);
    CHECK(run({"orbit", "N=1", "m=100", "phi=1", "start=1,0"}).code == 2);
    CHECK(run({"ffcurve", "p=4", "a=1", "b=1"}).code == 2);
}

TEST_CASE("classify JSON matches the order-5 model and round-trips byte-identically") {
    const auto r = run({"classify", "n=5", "aut=1,4", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = ordered_json::parse(r.out);
    CHECK(doc["command"] == "classify");
    CHECK(doc["inputs"]["n"] == 5);
    CHECK(doc["result"]["iso_class_count"] == 3);
    CHECK(doc["result"]["derived_class_count"] == 2);
    CHECK(doc["result"]["iso_classes_among_generators"] == 2);
    CHECK(doc["result"]["derived_classes_among_generators"] == 1);
    for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);
    CHECK(doc.dump(2) + "\n" == r.out); // canonical serialization: parse + dump is identity
    CHECK(r.out.find("0.") == std::string::npos); // integers only, no floats
}

TEST_CASE("json documents keep the fixed key order") {
    const auto r = run({"h1-real", "a=-1/1", "b=0/1", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "checks"});
    CHECK(doc["result"]["h1_real_size"] == 2);
}

TEST_CASE("h1 subcommand reproduces both real-example module sizes") {
    const auto trivial =
        run({"h1", "group=cyclic:2", "module=2,2", "action=trivial", "--json"});
    REQUIRE(trivial.code == 0);
    CHECK(ordered_json::parse(trivial.out)["result"]["h1_size"] == 4);

    const auto swap =
        run({"h1", "group=cyclic:2", "module=2,2", "action=mat:1,0|0,1;0,1|1,0", "--json"});
    REQUIRE(swap.code == 0);
    CHECK(ordered_json::parse(swap.out)["result"]["h1_size"] == 1);
}

TEST_CASE("cocycle-check reports verdicts in the result") {
    const auto good = run({"cocycle-check", "group=cyclic:4", "module=5", "action=mult:1,2,4,3",
                           "values=0;1;3;2", "--json"});
    REQUIRE(good.code == 0);
    const auto gdoc = ordered_json::parse(good.out);
    CHECK(gdoc["result"]["is_cocycle"] == true);
    CHECK(gdoc["result"]["is_coboundary"] == false);

    const auto bad = run({"cocycle-check", "group=cyclic:4", "module=5", "action=mult:1,2,4,3",
                          "values=0;1;1;1", "--json"});
    REQUIRE(bad.code == 0); // a negative verdict is a result, not a failure
    CHECK(ordered_json::parse(bad.out)["result"]["is_cocycle"] == false);
}

TEST_CASE("picd subcommand certifies the multiplication lemma instance") {
    const auto r = run({"picd", "group=cyclic:4", "module=5", "action=mult:1,2,4,3",
                        "values=0;1;3;2", "d=3", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = ordered_json::parse(r.out);
    CHECK(doc["result"]["picd_values"][1][0] == 3);
}

TEST_CASE("ffcurve accepts the wcurve text form") {
    const auto r = run({"ffcurve", "wcurve", "5", "1", "0", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = ordered_json::parse(r.out);
    CHECK(doc["result"]["group_order"] == 4);
    CHECK(doc["result"]["aut_order"] == 4);
    CHECK(run({"ffcurve", "p=5", "a=1", "b=0", "--json"}).out == r.out);
    CHECK(run({"ffcurve", "wcurve", "5", "0", "0"}).code == 2);
}

TEST_CASE("cubic accepts the text form and reduces") {
    const auto r = run({"cubic", "cubic", "5", "1", "0", "0", "0", "0", "0", "1", "0", "0", "1",
                        "--json"});
    REQUIRE(r.code == 0);
    const auto doc = ordered_json::parse(r.out);
    CHECK(doc["result"]["point_count"] == 6);
    CHECK(doc["result"]["weierstrass"]["p"] == 5);
    const auto singular =
        run({"cubic", "cubic", "5", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"});
    CHECK(singular.code == 2);
}

TEST_CASE("orbit and polarized-check exit codes track the checks") {
    const auto orb = run({"orbit", "N=1", "m=5", "phi=1", "start=1,0", "--json"});
    REQUIRE(orb.code == 0);
    CHECK(ordered_json::parse(orb.out)["result"]["orbit_size"] == 24);

    CHECK(run({"polarized-check", "N=3", "m=9", "phi=1"}).code == 0);
    // failed check: non-unit multiplier, exit 1 with the failure in the report
    const auto fail = run({"polarized-check", "N=1", "m=4", "phi=2", "--json"});
    CHECK(fail.code == 1);
    CHECK(ordered_json::parse(fail.out)["result"]["pass"] == false);
}

TEST_CASE("sp and brauer subcommands") {
    const auto sp1 = run({"sp", "genus=1", "m=7", "--json"});
    REQUIRE(sp1.code == 0);
    CHECK(ordered_json::parse(sp1.out)["result"]["size"] == 336);

    const auto br = run({"brauer", "n=3", "br=2", "alpha=1:1", "beta=2:1", "--json"});
    REQUIRE(br.code == 0);
    const auto doc = ordered_json::parse(br.out);
    CHECK(doc["result"]["two_sided_related"] == true);
    CHECK(doc["result"]["witness_forward"] == 5);
    CHECK(doc["result"]["same_cyclic_in_quotient"] == true);
}

TEST_CASE("every reproduce scenario passes") {
    for (const std::string name :
         {"existence", "real", "finite-field", "moduli-spaces", "polarized", "fibration"}) {
        const auto r = run({"reproduce", name});
        CHECK(r.code == 0);
        CHECK(r.out.find("[FAIL]") == std::string::npos);
    }
    CHECK(run({"reproduce", "moduli-spaces", "N=7"}).code == 0);
    CHECK(run({"reproduce", "nonsense"}).code == 2);
}
