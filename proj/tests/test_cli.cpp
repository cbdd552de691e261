#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "umbra/cli.hpp"

namespace {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.exit_code = umbra::cli::run(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("seq prints sequence prefixes", "[cli]") {
    RunResult r = run_cli({"seq", "motzkin", "--max", "10"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1 2 4 9 21 51 127 323 835 2188\n");

    r = run_cli({"seq", "telephone", "--max", "10"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1 2 4 10 26 76 232 764 2620 9496\n");

    r = run_cli({"seq", "assoc-motzkin", "--q", "2", "--max", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1/2 1/2 5/6 3/2\n");

    r = run_cli({"seq", "tilde-motzkin", "--q", "3", "--max", "6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 4 15 50 161 504 1554\n");

    r = run_cli({"seq", "gen-telephone", "--m", "4", "--max", "8"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1 1 1 7 31 91 211 1681\n");
}

TEST_CASE("seq json document", "[cli]") {
    RunResult r = run_cli({"seq", "motzkin", "--max", "5", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "sequence");
    CHECK(j["params"]["family"] == "motzkin");
    CHECK(j["params"]["max"] == 5);
    CHECK(j["values"] == nlohmann::json({"1", "1", "2", "4", "9", "21"}));
}

TEST_CASE("triangle csv output", "[cli]") {
    RunResult r = run_cli({"triangle", "motzkin", "--format", "csv"});
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "n,s0,s1,s2,s3,s4,s5,s6,s7,total");
    CHECK(lines[1] == "0,1,,,,,,,,1");
    CHECK(lines[5] == "4,1,0,6,0,2,,,,9");
    CHECK(lines[8] == "7,1,0,21,0,70,0,35,0,127");

    r = run_cli({"triangle", "telephone", "--format", "csv"});
    REQUIRE(r.exit_code == 0);
    lines = lines_of(r.out);
    CHECK(lines[8] == "7,1,0,21,0,105,0,105,0,232");
}

TEST_CASE("triangle table output shape", "[cli]") {
    RunResult r = run_cli({"triangle", "motzkin", "--max", "4"});
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);  // header + rule + 5 rows
    CHECK(lines[0].find("n\\s") != std::string::npos);
    CHECK(lines[0].find("total") != std::string::npos);
    CHECK(lines[6].find('9') != std::string::npos);  // row 4 total
}

TEST_CASE("triangle json document", "[cli]") {
    RunResult r = run_cli({"triangle", "telephone", "--max", "6", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "triangle");
    CHECK(j["params"]["family"] == "telephone");
    CHECK(j["params"]["max"] == 6);
    REQUIRE(j["rows"].size() == 7);
    CHECK(j["rows"][6]["n"] == 6);
    CHECK(j["rows"][6]["total"] == "76");
    CHECK(j["rows"][6]["coeffs"] ==
          nlohmann::json({"1", "0", "15", "0", "45", "0", "15"}));
}

TEST_CASE("series prints closed-form coefficients", "[cli]") {
    // Coefficients of the motzkin EGF: m_n / n! = 1, 1, 1, 2/3, 3/8, ...
    RunResult r = run_cli({"series", "GF-MOTZKIN", "--order", "4"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "1 1 1 2/3 3/8\n");

    // n! times coefficient n must reproduce the telephone numbers.
    r = run_cli({"series", "TEL-GF", "--m", "2", "--order", "6", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["params"]["m"] == 2);
    CHECK(j["values"][4] == "5/12");  // T(4)/4! = 10/24
}

TEST_CASE("verify single identity", "[cli]") {
    RunResult r = run_cli({"verify", "MOTZKIN-CONV", "--max", "40"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "MOTZKIN-CONV [n = 1..40]: 40/40 pass\n");
}

TEST_CASE("verify all identities", "[cli]") {
    RunResult r = run_cli({"verify", "all"});
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 12);
    for (const auto& line : lines) {
        INFO(line);
        CHECK(line.find(" pass") != std::string::npos);
        CHECK(line.find("FAIL") == std::string::npos);
    }
}

TEST_CASE("verify all as json", "[cli]") {
    RunResult r = run_cli({"verify", "all", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "report");
    CHECK(j["params"]["identity"] == "all");
    CHECK(j["result"]["passed"] == true);
    REQUIRE(j["result"]["reports"].size() == 12);
    for (const auto& rep : j["result"]["reports"]) {
        CHECK(rep["passed"] == true);
        CHECK(rep["failures"] == 0);
        CHECK(rep["counterexample"].is_null());
    }
}

TEST_CASE("oeis check against bundled fixtures", "[cli]") {
    RunResult r = run_cli({"oeis", "check", "A001006", "--against", "motzkin", "--offline"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OEIS A001006 vs motzkin") != std::string::npos);
    CHECK(r.out.find(" pass") != std::string::npos);

    r = run_cli({"oeis", "check", "A014532", "--against", "tilde-motzkin", "--q", "3", "--offline"});
    CHECK(r.exit_code == 0);

    r = run_cli({"oeis", "check", "A001470", "--against", "gen-telephone", "--m", "3", "--offline"});
    CHECK(r.exit_code == 0);

    r = run_cli({"oeis", "check", "A001470", "--against", "gen-telephone", "--m", "3", "--format",
                 "json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "report");
    CHECK(j["result"]["passed"] == true);
}

TEST_CASE("oeis check reports mismatches with exit 1", "[cli]") {
    // Triangular numbers are not the motzkin numbers; they clash immediately.
    RunResult r = run_cli({"oeis", "check", "A000217", "--against", "motzkin", "--offline"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("index=0") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    CHECK(run_cli({"seq", "motzkin", "--bogus"}).exit_code == 2);
    CHECK(run_cli({"seq", "nosuchfamily"}).exit_code == 2);
    CHECK(run_cli({"verify", "NO-SUCH-TAG"}).exit_code == 2);
    CHECK(run_cli({"triangle", "hermite"}).exit_code == 2);  // not a triangle family
    CHECK(run_cli({"series", "GF-MOTZKIN", "--format", "yaml"}).exit_code == 2);
    CHECK(run_cli({"series", "TEL-GF", "--m", "1"}).exit_code == 2);
    CHECK(run_cli({"series", "MOTZKIN-CONV"}).exit_code == 2);  // not a GF tag
    CHECK(run_cli({"oeis", "check", "bogus", "--against", "motzkin"}).exit_code == 2);
    CHECK(run_cli({"oeis", "check", "A001006", "--against", "assoc-motzkin"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);  // a subcommand is required
}

TEST_CASE("runtime failures exit 1", "[cli]") {
    // No bundled fixture and the network is forbidden.
    RunResult r = run_cli({"oeis", "check", "A000085", "--against", "telephone", "--offline"});
    CHECK(r.exit_code == 1);
    CHECK_FALSE(r.err.empty());

    r = run_cli({"oeis", "fetch", "A000085", "--offline"});
    CHECK(r.exit_code == 1);
}

TEST_CASE("help requests succeed", "[cli]") {
    std::ostringstream out, err;
    CHECK(umbra::cli::run({"--help"}, out, err) == 0);
    CHECK(out.str().find("seq") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(umbra::cli::run({"seq", "--help"}, out2, err2) == 0);
    CHECK(out2.str().find("--max") != std::string::npos);
}
