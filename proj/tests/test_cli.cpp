// Exercises the executable surfaces end to end: exit-code semantics, the
// file formats, and report fields. Each case shells out to the built binary.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "/tmp/homcat_cli_test_out.json";
    std::string cmd = std::string(HOMCAT_CLI) + " " + args + " --out " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), os.str()};
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check-axioms exit codes reflect the verdicts") {
    auto finset = run("check-axioms --instance finset --level 2");
    CHECK(finset.exit_code == 1);  // the join fails there
    auto j = parse(finset);
    CHECK(j["axioms"][0]["status"] == "pass");
    CHECK(j["axioms"][1]["status"] == "pass");
    CHECK(j["axioms"][2]["status"] == "pass");
    CHECK(j["axioms"][3]["status"] == "fail");
    CHECK(j["axioms"][4]["status"] == "pass");

    auto fixture = run("check-axioms --instance table:fixture");
    CHECK(fixture.exit_code == 0);
    CHECK(parse(fixture)["all_pass"] == true);

    auto sset = run("check-axioms --instance sset --level 3");
    CHECK(sset.exit_code == 1);
    auto s = parse(sset);
    CHECK(s["axioms"][0]["status"] == "pass");
    CHECK(s["axioms"][1]["status"] == "pass");
    CHECK(s["axioms"][2]["status"] == "fail");
    CHECK(s["axioms"][3]["status"] == "fail");
    CHECK(s["axioms"][4]["status"] == "pass");
}

TEST_CASE("homology reports carry degrees, torsion and validity") {
    auto torus = run("homology --raw " + data("torus.json"));
    REQUIRE(torus.exit_code == 0);
    auto j = parse(torus);
    REQUIRE(j["groups"].size() == 3);
    CHECK(j["groups"][0]["betti"] == 1);
    CHECK(j["groups"][1]["betti"] == 2);
    CHECK(j["groups"][2]["betti"] == 1);
    for (const auto& g : j["groups"]) CHECK(g["valid"] == true);

    auto klein = run("homology --raw " + data("klein.json"));
    auto k = parse(klein);
    CHECK(k["groups"][1]["torsion"] == nlohmann::json::array({"2"}));

    auto nerve_run = run("homology --instance sset --level 2 --object delta:1 --reduced true");
    auto n = parse(nerve_run);
    CHECK(n["groups"][0]["betti"] == 0);   // reduced point-like homology
    CHECK(n["groups"][2]["valid"] == false);  // the truncation edge
}

TEST_CASE("malformed input exits with code 2") {
    std::ofstream("/tmp/homcat_bad_input.json") << "{ not json";
    auto r = run("homology --raw /tmp/homcat_bad_input.json");
    CHECK(r.exit_code == 2);

    auto missing = run("homology --raw /tmp/homcat_no_such_file.json");
    CHECK(missing.exit_code == 2);

    auto bad_object = run("homology --instance sset --level 2 --object nonsense:9");
    CHECK(bad_object.exit_code == 2);
}

TEST_CASE("the budget bound is honored and reported as a resource error") {
    auto r = run("check-axioms --instance sset --level 3 --bound 50");
    CHECK(r.exit_code == 2);
    // the environment variable overrides the flag
    std::string cmd = std::string("HOMCAT_BOUND=50 ") + HOMCAT_CLI +
                      " check-axioms --instance finset --level 2 --out /tmp/homcat_env.json 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
}

TEST_CASE("build subcommand: spheres, diagrams, recipes") {
    auto sphere = run("build --instance sset --level 3 --sphere 1");
    REQUIRE(sphere.exit_code == 0);
    auto s = parse(sphere);
    CHECK(s["groups"][1]["betti"] == 1);

    auto diagram = run("build --instance sset --level 3 --diagram " + data("torus_diagram.json"));
    REQUIRE(diagram.exit_code == 0);
    CHECK(parse(diagram)["groups"][1]["betti"] == 2);

    auto recipe = run("build --instance sset --level 3 --recipe " + data("rp2_recipe.json"));
    REQUIRE(recipe.exit_code == 0);
    auto r = parse(recipe);
    REQUIRE(r["skeleta"].size() == 3);
    CHECK(r["skeleta"][2]["groups"][1]["torsion"] == nlohmann::json::array({"2"}));
}

TEST_CASE("invariance and classes subcommands") {
    auto inv = run("invariance --instance sset --level 3 --src delta:0 --dst delta:1 --f 1 --g 0");
    REQUIRE(inv.exit_code == 0);
    auto j = parse(inv);
    CHECK(j["homotopic"] == true);
    CHECK(j["equal_induced_maps"] == true);

    // the reverse direction is not homotopic in this instance
    auto rev = run("invariance --instance sset --level 3 --src delta:0 --dst delta:1 --f 0 --g 1");
    CHECK(rev.exit_code == 1);
    CHECK(parse(rev)["homotopic"] == false);

    auto cls = run("homotopy-classes --instance finset --level 2 --src set:2 --dst set:2");
    REQUIRE(cls.exit_code == 0);
    auto c = parse(cls);
    CHECK(c["classes"].size() == 1);
    CHECK(c["raw_equals_closure"] == true);
}

TEST_CASE("chain-homotopy with an explicit cone file round-trips") {
    auto auto_run = run("chain-homotopy --instance sset --level 2 --object delta:1");
    REQUIRE(auto_run.exit_code == 0);
    CHECK(parse(auto_run)["acyclic"] == true);

    // a deliberately broken explicit cone is rejected with a witness
    std::ofstream("/tmp/homcat_cone.json")
        << R"({"object": "delta:1", "maps": {"0": {"0": 0, "1": 0}, "1": {"0": 0, "1": 0, "2": 0}}})";
    auto broken = run("chain-homotopy --instance sset --level 2 --object delta:1 "
                      "--cone /tmp/homcat_cone.json");
    CHECK(broken.exit_code == 1);
    CHECK(parse(broken)["cone_verified"] == false);
}

TEST_CASE("a custom cosimplicial spec loads against a built-in instance") {
    // the standard cells written out explicitly, faces by hom index: the face
    // image of d_{n,i} inside hom(delta[n-1], delta[n]) sits at the rank of
    // its classifying monotone map among all simplicial maps, which for the
    // representables is the rank among monotone tuples
    std::ofstream("/tmp/homcat_cos.json") << R"json({
      "level": 2,
      "cells": ["delta:0", "delta:1", "delta:2"],
      "faces": {
        "(1,0)": 1, "(1,1)": 0,
        "(2,0)": 4, "(2,1)": 2, "(2,2)": 1
      }
    })json";
    auto r = run("homology --instance sset --level 2 --object boundary:2 "
                 "--cosimplicial /tmp/homcat_cos.json");
    REQUIRE(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["groups"][0]["betti"] == 1);
    CHECK(j["groups"][1]["betti"] == 1);
}

TEST_CASE("the pipeline report carries the dependency chart labels") {
    auto r = run("pipeline --instance table:fixture");
    REQUIRE(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j["theorem"] == "thm1");
    for (const char* a : {"A1", "A2", "A3", "A4", "A5"}) CHECK(j["axioms"][a] == true);
    CHECK(j["claim_i"]["P1_dimension_axiom"] == true);
    CHECK(j["claim_iii"]["P5_prism_built"] == true);
    CHECK(j["claim_iii"]["P3_invariance"] == true);
}
