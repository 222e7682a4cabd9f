#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "riordan/presets.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RIORDAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("triangle command") {
    auto res = run_cli("triangle --d pascal_d --h pascal_h --rows 5");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "1\n1,1\n1,2,1\n1,3,3,1\n1,4,6,4,1\n");

    auto idres = run_cli("triangle --d 1 --h 0,1 --rows 3");
    CHECK(idres.exit_code == 0);
    CHECK(idres.out == "1\n0,1\n0,0,1\n");

    auto jres = run_cli("triangle --d pascal_d --h pascal_h --rows 6 --format json");
    CHECK(jres.exit_code == 0);
    json parsed = json::parse(jres.out);
    REQUIRE(parsed.contains("rows"));
    auto rows = parsed["rows"];
    REQUIRE(rows.size() == 6);
    riordan::RiordanArray<riordan::Rational> p = riordan::pascal(8);
    for (int n = 0; n < 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(rows[n][k].get<std::string>() == p.entry(n, k).str());

    CHECK(run_cli("triangle --d 0,1 --h 0,1 --rows 3").exit_code == 1);  // d(0) = 0
    CHECK(run_cli("triangle --d oops --h 0,1 --rows 3").exit_code == 1);
}

TEST_CASE("sequence commands") {
    auto ares = run_cli("aseq --d pascal_d --h pascal_h --terms 4");
    CHECK(ares.exit_code == 0);
    CHECK(ares.out == "1,1,0,0\n");
    auto zres = run_cli("zseq --d pascal_d --h pascal_h --terms 3");
    CHECK(zres.exit_code == 0);
    CHECK(zres.out == "1,0,0\n");
    auto triv = run_cli("zseq --d 1 --h 0,1,1 --terms 3");
    CHECK(triv.exit_code == 0);
    CHECK(triv.out == "0,0,0\n");
}

TEST_CASE("product and inverse commands") {
    auto mres = run_cli("mul --d1 pascal_d --h1 pascal_h --d2 pascal_d --h2 pascal_h --terms 4");
    CHECK(mres.exit_code == 0);
    CHECK(mres.out == "d: 1,2,4,8\nh: 0,1,2,4\n");

    auto ires = run_cli("inv --d 1 --h 0,1 --terms 3 --format json");
    CHECK(ires.exit_code == 0);
    json inv = json::parse(ires.out);
    CHECK(inv["d"] == json::array({"1", "0", "0"}));
    CHECK(inv["h"] == json::array({"0", "1", "0"}));

    // inv then mul lands back on the identity, up to the printed terms
    auto ir = run_cli("inv --d pascal_d --h pascal_h --terms 6 --format json");
    REQUIRE(ir.exit_code == 0);
    json ij = json::parse(ir.out);
    std::string dspec, hspec;
    for (const auto& v : ij["d"]) {
        if (!dspec.empty()) dspec += ",";
        dspec += v.get<std::string>();
    }
    for (const auto& v : ij["h"]) {
        if (!hspec.empty()) hspec += ",";
        hspec += v.get<std::string>();
    }
    auto round =
        run_cli("mul --d1 pascal_d --h1 pascal_h --d2 " + dspec + " --h2 " + hspec + " --terms 6");
    CHECK(round.exit_code == 0);
    CHECK(round.out == "d: 1,0,0,0,0,0\nh: 0,1,0,0,0,0\n");
}

TEST_CASE("centralizer command") {
    auto res = run_cli("centralizer --h geometric --order 10 --param-ring");
    CHECK(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["consistent"] == true);
    CHECK(rep["free_positions"] == json::array({2}));
    auto sym = rep["symbolic_coefficients"];
    REQUIRE(sym.size() == 11);
    CHECK(sym[1] == "1");
    CHECK(sym[2] == "r");
    CHECK(sym[3] == "r^2");
    CHECK(sym[10] == "r^9");

    auto allfree = run_cli("centralizer --h 0,1 --order 8");
    CHECK(allfree.exit_code == 0);
    json af = json::parse(allfree.out);
    CHECK(af["free_positions"] == json::array({2, 3, 4, 5, 6, 7, 8}));
    CHECK(af["param_cap_hit"] == true);

    auto odd = run_cli("centralizer --h 0,1,0,1 --order 8 --param-ring");
    CHECK(odd.exit_code == 0);
    json oj = json::parse(odd.out);
    CHECK(oj["consistent"] == true);
    CHECK(oj["free_positions"] == json::array({3}));

    auto bad = run_cli("centralizer --h 0,2 --order 8");
    CHECK(bad.exit_code == 1);  // h'(0) != 1

    auto incons = run_cli("centralizer --h geometric --order 8 --f1 2");
    CHECK(incons.exit_code == 2);
}

TEST_CASE("truncation environment override") {
    // RIORDAN_TRUNC raises the default working precision; results that fit
    // in fewer terms are unaffected
    std::string plain = run_cli("aseq --d pascal_d --h pascal_h --terms 4").out;
    std::string cmd = "RIORDAN_TRUNC=40 " + std::string(RIORDAN_CLI_PATH) +
                      " aseq --d pascal_d --h pascal_h --terms 4 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(out == plain);
}

TEST_CASE("verify command") {
    std::string fixtures = std::string(RIORDAN_SOURCE_DIR) + "/data/oeis";
    auto res = run_cli("verify --suite lehmer-comtet --fixtures " + fixtures);
    CHECK(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["suite"] == "lehmer-comtet");
    CHECK(rep["failures"] == json::array());
    CHECK(rep["checks"].get<int>() >= 4);

    auto ga = run_cli("verify --suite group-axioms --order 8");
    CHECK(ga.exit_code == 0);
    json gj = json::parse(ga.out);
    CHECK(gj["failures"] == json::array());

    auto xax = run_cli("verify --suite xax");
    CHECK(xax.exit_code == 0);

    CHECK(run_cli("verify --suite no-such-suite").exit_code == 1);
}
