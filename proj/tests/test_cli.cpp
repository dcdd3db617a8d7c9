// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(HAMCIRC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("classify emits the full report") {
    CliResult r = run_cli("classify --a 1 --b 1 --m 2 --lambda 2");
    REQUIRE(r.status == 0);
    json rep = json::parse(r.out);
    CHECK(rep["action"]["a"] == 1);
    CHECK(rep["action"]["lambda"] == "2");
    CHECK(rep["manifold"] == "S2xS2");
    CHECK(rep["homotopy_type"] == "OmegaS3xT3");
    REQUIRE(rep["strata"].size() == 2);
    CHECK(rep["strata"][0]["s"] == 0);
    CHECK(rep["strata"][0]["codim"] == 0);
    CHECK(rep["strata"][1]["s"] == 2);
    CHECK(rep["strata"][1]["codim"] == 1);
    CHECK(rep["homology_ranks"]["ranks"][0] == 1);
    CHECK(rep["homology_ranks"]["ranks"][2] == 4);
    CHECK(rep["graph"]["vertices"].size() == 4);
    CHECK(rep["warnings"].empty());

    CliResult r2 = run_cli("classify --a 0 --b 1 --m 4 --lambda 3");
    json rep2 = json::parse(r2.out);
    CHECK(rep2["homotopy_type"] == "S1xSO3");
    REQUIRE(rep2["strata"].size() == 1);
    CHECK(rep2["strata"][0]["s"] == 4);

    CliResult pretty = run_cli("classify --a 1 --b 1 --m 2 --lambda 2 --pretty");
    CHECK(pretty.status == 0);
    CHECK(pretty.out.find("Omega S^3 x T^3") != std::string::npos);
}

TEST_CASE("invalid parameters exit with code 2 and a reason") {
    CliResult r = run_cli("classify --a 2 --b 4 --m 2 --lambda 2");
    CHECK(r.status == 2);
    CHECK(r.out.find("non-effective") != std::string::npos);

    r = run_cli("classify --a 1 --b 1 --m 2 --lambda 1");
    CHECK(r.status == 2);
    CHECK(r.out.find("lambda") != std::string::npos);

    // decimal widths are rejected: exact rationals only
    r = run_cli("classify --a 1 --b 1 --m 2 --lambda 2.5");
    CHECK(r.status == 2);
    CHECK(r.out.find("p/q") != std::string::npos);

    CHECK(run_cli("").status == 2);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("graph output formats") {
    CliResult r = run_cli("graph --a 1 --b 0 --m 2 --lambda 2 --format json");
    REQUIRE(r.status == 0);
    json g = json::parse(r.out);
    REQUIRE(g["vertices"].size() == 3);
    CHECK(g["vertices"][0]["kind"] == "fat");
    CHECK(g["vertices"][0]["moment"] == "0");
    CHECK(g["vertices"][0]["area"] == "1");
    CHECK(g["edges"][0]["k"] == 2);

    CliResult dot = run_cli("graph --a 1 --b 0 --m 2 --lambda 2 --format dot");
    CHECK(dot.out.find("graph action {") != std::string::npos);
    CHECK(dot.out.find("v0 [shape=ellipse, label=\"μ=0, A=1\"];") != std::string::npos);
    CHECK(dot.out.find("[label=\"2\"]") != std::string::npos);
    // byte-determinism
    CHECK(run_cli("graph --a 1 --b 0 --m 2 --lambda 2 --format dot").out == dot.out);

    CliResult tikz = run_cli("graph --a 1 --b 0 --m 2 --lambda 2 --format tikz");
    CHECK(tikz.out.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(tikz.out.find("ellipse") != std::string::npos);
    CHECK(tikz.out.find("$\\mu=0$") != std::string::npos);
}

TEST_CASE("canonical graphs agree for sign-flipped rotations") {
    std::string flags = " --m 2 --lambda 2 --format json --canonical";
    CliResult pos = run_cli("graph --a 1 --b 0" + flags);
    CliResult neg = run_cli("graph --a -1 --b 0" + flags);
    REQUIRE(pos.status == 0);
    REQUIRE(neg.status == 0);
    CHECK(pos.out == neg.out);

    // without canonicalization the raw graphs differ
    CliResult raw_pos = run_cli("graph --a 1 --b 0 --m 2 --lambda 2 --format json");
    CliResult raw_neg = run_cli("graph --a -1 --b 0 --m 2 --lambda 2 --format json");
    CHECK(raw_pos.out != raw_neg.out);
}

TEST_CASE("equiv reports the verdict and a witness") {
    CliResult r = run_cli("equiv --a1 1 --b1 3 --m1 2 --a2 1 --b2 3 --m2 4 --lambda 3");
    REQUIRE(r.status == 0);
    json v = json::parse(r.out);
    CHECK(v["equivalent"] == true);
    CHECK(v["witness"]["m"] == 4);
    CHECK(v["witness"]["a"] == 1);
    CHECK(v["witness"]["b"] == 3);

    r = run_cli("equiv --a1 1 --b1 1 --m1 2 --a2 1 --b2 -1 --m2 2 --lambda 2");
    v = json::parse(r.out);
    CHECK(v["equivalent"] == false);
    CHECK(v["witness"].is_null());

    // different manifolds cannot be compared
    r = run_cli("equiv --a1 1 --b1 1 --m1 2 --a2 1 --b2 1 --m2 1 --lambda 2");
    CHECK(r.status == 2);
}

TEST_CASE("extensions lists the toric targets") {
    CliResult r = run_cli("extensions --a 1 --b 3 --m 2 --lambda 3");
    REQUIRE(r.status == 0);
    json e = json::parse(r.out);
    REQUIRE(e["entries"].size() == 2);
    CHECK(e["entries"][0]["target_m"] == 2);
    CHECK(e["entries"][0]["subcircle"][0] == 1);
    CHECK(e["entries"][0]["subcircle"][1] == 3);
    CHECK(e["entries"][0]["complex_codim"] == 0);
    CHECK(e["entries"][1]["target_m"] == 4);
    CHECK(e["entries"][1]["complex_codim"] == 1);
}

TEST_CASE("codim answers for intersected strata only") {
    CliResult r = run_cli("codim --a 1 --b 3 --m 4 --lambda 3 --s 4");
    REQUIRE(r.status == 0);
    json c = json::parse(r.out);
    CHECK(c["codim"] == 1);
    CHECK(c["deformation_dimension"] == 1);

    r = run_cli("codim --a 1 --b 3 --m 4 --lambda 3 --s 1");
    CHECK(r.status == 2);
    CHECK(r.out.find("stratum") != std::string::npos);
}

TEST_CASE("ranks by homotopy type or by action") {
    CliResult r = run_cli("ranks --type OmegaS3xT3 --max-degree 5");
    REQUIRE(r.status == 0);
    json v = json::parse(r.out);
    CHECK(v["ranks"] == json::array({1, 3, 4, 4, 4, 4}));
    CHECK(v["rational_homotopy_dims"][0] == 3);
    CHECK(v["rational_homotopy_dims"][1] == 1);

    r = run_cli("ranks --a 0 --b 1 --m 2 --lambda 2 --max-degree 5 --char 2");
    v = json::parse(r.out);
    CHECK(v["homotopy_type"] == "S1xSO3");
    CHECK(v["ranks"] == json::array({1, 2, 2, 2, 1, 0}));

    CHECK(run_cli("ranks --type NoSuchType").status == 2);
    CHECK(run_cli("ranks --type Torus2 --char 6").status == 2);
}

TEST_CASE("presentation prints the ring and its Hilbert series") {
    CliResult r = run_cli("presentation --char 2 --max-degree 6");
    REQUIRE(r.status == 0);
    json p = json::parse(r.out);
    CHECK(p["characteristic"] == 2);
    CHECK(p["commutation"] == "commutative");
    CHECK(p["relations"] == json::array({"t^2", "x^2", "y^2"}));
    CHECK(p["hilbert_series"] == json::array({1, 3, 4, 4, 4, 4, 4}));
}

TEST_CASE("sweep runs the requested consistency checks") {
    CliResult r = run_cli(
        "sweep --max-ab 2 --max-m 2 --lambdas 1,2 --checks strata-count,codim-consistency");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("failures") != std::string::npos);

    CHECK(run_cli("sweep --checks no-such-check").status == 2);
    CHECK(run_cli("sweep --lambdas 1/0").status == 2);
}
