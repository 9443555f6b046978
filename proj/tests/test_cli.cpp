#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "haarcomm/cli.hpp"

using namespace haarcomm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exact values with provenance") {
    const auto a = run({"exact", "trace-moment", "--group", "cu", "--n", "2", "--dim", "7"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find(": 1/12 = 0.0833333") != std::string::npos);
    CHECK(a.out.find("[closed-form]") != std::string::npos);
    const auto b = run({"exact", "trace-power", "--group", "co", "--n", "2", "--dim", "5"});
    CHECK(b.out.find(": 34/35 ") != std::string::npos);
    const auto c = run({"exact", "element", "--group", "cu", "--pattern", "11,11*", "--dim", "4"});
    CHECK(c.out.find(": 19/75 ") != std::string::npos);
    CHECK(c.out.find("[oracle]") != std::string::npos);
}

TEST_CASE("dimension ranges expand to independent runs") {
    CHECK(parse_dimensions("5..8") == std::vector<int>{5, 6, 7, 8});
    CHECK(parse_dimensions("4,6,9") == std::vector<int>{4, 6, 9});
    CHECK(parse_dimensions("7") == std::vector<int>{7});
    CHECK_THROWS_AS(parse_dimensions("8..5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimensions("x"), std::invalid_argument);
    const auto r = run({"exact", "trace-moment", "-n", "2", "-N", "3..5", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"].size() == 3);
    CHECK(j["results"][0]["value"] == "1/2");
    CHECK(j["results"][1]["value"] == "4/15");
    CHECK(j["results"][2]["N"] == 5);
    CHECK(j["results"][2]["provenance"] == "closed-form");
}

TEST_CASE("CO at N = n falls back to the word engine") {
    const auto r = run({"exact", "trace-power", "-g", "co", "-n", "3", "-N", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("33/35") != std::string::npos);
    CHECK(r.out.find("[oracle]") != std::string::npos);
    const auto refused = run({"exact", "trace-moment", "-g", "co", "-n", "6", "-N", "5"});
    CHECK(refused.code == kExitDomain);
    CHECK_FALSE(refused.err.empty());
}

TEST_CASE("conjectured values are tagged") {
    const auto r = run({"exact", "correlator", "-g", "co", "--mu", "(2,1)", "-N", "5", "--mode", "conjectured"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[conjectured]") != std::string::npos);
    const auto f = run({"exact", "f-lambda", "-g", "co", "--lambda", "(2)", "-N", "4"});
    CHECK(f.out.find("[closed-form]") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"exact"}).code == kExitUsage);
    CHECK(run({"exact", "nonsense"}).code == kExitUsage);
    CHECK(run({"exact", "trace-moment", "-g", "sp"}).code == kExitUsage);
    CHECK(run({"mc", "bogus:1"}).code == kExitUsage);
    CHECK(run({"verify", "no-such-suite"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("Monte Carlo reports carry the exact comparison") {
    const auto r = run({"mc", "trace:1", "tracepow:2", "-g", "cu", "-N", "4", "--samples", "2000", "--seed", "3",
                        "--workers", "1", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["exact"]["value"] == "1/4");
    CHECK(j["results"][0]["provenance"] == "monte-carlo");
    CHECK(j["results"][0]["samples"] == 2000);
    CHECK(j["results"][1].contains("z"));
    for (const char* key : {"statistic", "group", "N", "samples", "seed", "mean_re", "mean_im", "stderr_re", "stderr_im"})
        CHECK(j["results"][0].contains(key));
    // deterministic given the seed, whatever the worker count
    const auto again = run({"mc", "trace:1", "tracepow:2", "-g", "cu", "-N", "4", "--samples", "2000", "--seed", "3",
                            "--workers", "2", "--format", "json"});
    CHECK(again.out == r.out);
}

TEST_CASE("verify exits by result") {
    const auto pass = run({"verify", "wg-cross", "--max-n", "3"});
    CHECK(pass.code == kExitOk);
    CHECK(pass.out.find("SUITE PASS wg-cross") != std::string::npos);
    const auto conj = run({"verify", "conjecture", "--max-n", "3", "--dims", "5..6", "--format", "json"});
    CHECK(conj.code == kExitOk);
    const auto j = nlohmann::json::parse(conj.out);
    CHECK(j["passed"] == true);
    CHECK(j["suites"][0]["checks"][0]["provenance"] == "conjectured");
    const auto chars = run({"verify", "characters", "--max-n", "6", "--quiet"});
    CHECK(chars.code == kExitOk);
}

TEST_CASE("density emits RFC 4180 CSV") {
    const std::string path = "haarcomm_test_density.csv";
    const auto r = run({"density", "-g", "cu", "-N", "5", "--samples", "500", "--bins", "8", "-o", path,
                        "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0]["histogram"]["bins"].size() == 8);
    std::ifstream in(path, std::ios::binary);
    std::string header;
    std::getline(in, header);
    CHECK(header == "group,N,theta_lo,theta_hi,theta_mid,mc_density,stderr,asymptotic,provenance\r");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 8);
    std::remove(path.c_str());
}

TEST_CASE("histogram statistics export CSV") {
    const std::string path = "haarcomm_test_hist.csv";
    const auto r = run({"mc", "element-hist:1,2", "-g", "cu", "-N", "6", "--samples", "300", "--csv", path});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(path, std::ios::binary);
    std::string header;
    std::getline(in, header);
    CHECK(header == "bin_left,bin_right,density,stderr\r");
    std::remove(path.c_str());
    CHECK(run({"mc", "trace:1", "-N", "6", "--csv", path}).code == kExitUsage);
}

TEST_CASE("series expansions") {
    const auto r = run({"expand", "trace-power", "-n", "3", "--depth", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("N^-3: 9 [closed-form]") != std::string::npos);
    const auto t = run({"expand", "tail", "-N", "4", "--m", "2", "--format", "json"});
    CHECK(nlohmann::json::parse(t.out)["results"].size() == 2);
    const auto f = run({"expand", "fourier", "-g", "cu", "-N", "5", "--max-n", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(f.out)["results"][0]["pi_times_c"] == "1/25");
}

TEST_CASE("report file is written alongside text output") {
    const std::string path = "haarcomm_test_report.json";
    const auto r = run({"exact", "wg", "--mu", "(1,1)", "-N", "3", "--report", path});
    CHECK(r.code == kExitOk);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["results"][0]["value"] == "1/8");
    std::remove(path.c_str());
}
