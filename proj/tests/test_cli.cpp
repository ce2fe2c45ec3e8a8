#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// End-to-end checks of the command-line tool: exit codes, PASS/FAIL lines,
// and byte-identical reruns.

namespace {

const std::string kCli = INIALG_CLI_PATH;
const std::string kFixtures = INIALG_FIXTURE_DIR;

std::string scratch_path(const std::string& suffix) {
    static int counter = 0;
    return "/tmp/inialg_cli_test_" + std::to_string(getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

struct RunResult {
    int exit_code;
    std::string output; // stdout+stderr
};

RunResult run(const std::string& args) {
    std::string tmp = scratch_path(".out");
    std::string cmd = kCli + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(tmp.c_str());
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

} // namespace

TEST_CASE("validate: shipped fixture exits 0") {
    RunResult r = run("validate --spec " + fixture("rs.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("validate: constant term exits 2 and cites (A1)") {
    // inject a constant term into the rs source generator
    std::ifstream in(fixture("rs.json"));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::string needle = "{\"exp\": [1], \"coef\": [1, 1]}";
    auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, needle.size(),
                 "{\"exp\": [1], \"coef\": [1, 1]}, {\"exp\": [0], \"coef\": [1, 1]}");
    std::string tmp = scratch_path(".json");
    std::ofstream(tmp) << text;
    RunResult r = run("validate --spec " + tmp);
    std::remove(tmp.c_str());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("A1") != std::string::npos);
}

TEST_CASE("validate: malformed JSON exits 1") {
    std::string tmp = scratch_path(".json");
    std::ofstream(tmp) << "{ this is not json";
    RunResult r = run("validate --spec " + tmp);
    std::remove(tmp.c_str());
    CHECK(r.exit_code == 1);
}

TEST_CASE("validate: missing file exits 1") {
    CHECK(run("validate --spec /nonexistent/nope.json").exit_code == 1);
}

TEST_CASE("example rs passes with mingens count equal to the bound") {
    RunResult r = run("example rs --spec " + fixture("rs.json") + " --order lex12 --max-grade 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mingens count 8") != std::string::npos);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("example hanoi reports two classes") {
    RunResult r = run("example hanoi --spec " + fixture("hanoi.json") + " --max-grade 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("2 classes") != std::string::npos);
}

TEST_CASE("example quadratic and doubled pass") {
    CHECK(run("example quadratic --spec " + fixture("quadratic.json") + " --max-grade 8")
              .exit_code == 0);
    CHECK(run("example doubled --spec " + fixture("doubled.json") +
              " --lambda 2 --mu 1/2 --max-grade 4")
              .exit_code == 0);
}

TEST_CASE("example: unknown name exits 1") {
    CHECK(run("example unknown-example").exit_code == 1);
}

TEST_CASE("example: a failing scenario exits 3") {
    // the doubled scenario with equal weights cannot show sensitivity
    RunResult r = run("example doubled --spec " + fixture("doubled.json") +
                      " --lambda 2 --mu 2 --max-grade 4");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("analyze degrees matches the library and is byte-identical across runs") {
    std::string args = "analyze --spec " + fixture("rs.json") +
                       " --which degrees --order lex12 --max-grade 4";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"degrees\"") != std::string::npos);
    CHECK(a.output.find("\"manifest\"") != std::string::npos);
}

TEST_CASE("analyze completeness on rs is incomplete-witnessed") {
    RunResult r = run("analyze --spec " + fixture("rs.json") +
                      " --which completeness --order lex12 --max-grade 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("incomplete-witnessed") != std::string::npos);
}

TEST_CASE("analyze hypothesis on quadratic fails for both embeddings") {
    // o(-w) with w = (2,3) as an order descriptor file
    std::string tmp = scratch_path(".json");
    std::ofstream(tmp) << R"({"dim": 2, "rows": [[[-2, 1], [-3, 1]]]})";
    RunResult r = run("analyze --spec " + fixture("quadratic.json") +
                      " --which hypothesis --order " + tmp + " --format text");
    std::remove(tmp.c_str());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fails") != std::string::npos);
    CHECK(r.output.find("holds") == std::string::npos);
}

TEST_CASE("analyze fingerprints samples orders when none are given") {
    RunResult r = run("analyze --spec " + fixture("hanoi.json") +
                      " --which fingerprints --max-grade 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"class_count\": 2") != std::string::npos);
}

TEST_CASE("analyze mu in text form shows the witnesses") {
    RunResult r = run("analyze --spec " + fixture("rs.json") +
                      " --which mu --order lex21 --max-grade 5 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mu=(1,0)") != std::string::npos);
    CHECK(r.output.find("injective: yes") != std::string::npos);
}

TEST_CASE("analyze writes to --out") {
    std::string tmp = scratch_path(".json");
    RunResult r = run("analyze --spec " + fixture("rs.json") +
                      " --which degrees --max-grade 3 --out " + tmp);
    CHECK(r.exit_code == 0);
    std::ifstream in(tmp);
    CHECK(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(tmp.c_str());
    CHECK(buf.str().find("\"degrees\"") != std::string::npos);
}
