#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin = FREEFACTOR_BIN;
std::string fixtures = FIXTURE_DIR;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = "cli_out.tmp";
    std::string cmd = bin + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {code, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("ef subcommand") {
    RunResult r = run("ef " + fixtures + "/pair_ok.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("inf") != std::string::npos);
    CHECK(r.out.find("26/19") != std::string::npos);
}

TEST_CASE("invariant subcommand") {
    RunResult r = run("invariant " + fixtures + "/pair_ok.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("R") != std::string::npos);
    CHECK(r.out.find("(2pi/ln 2)Z") != std::string::npos);
}

TEST_CASE("classify exit codes") {
    RunResult ok = run("classify " + fixtures + "/pair_ok.json");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("Certified") != std::string::npos);
    RunResult inc = run("classify " + fixtures + "/pair_inconclusive.json");
    CHECK(inc.code == 4);
    CHECK(inc.out.find("Inconclusive") != std::string::npos);
}

TEST_CASE("parse and validation exit codes") {
    CHECK(run("ef " + fixtures + "/bad_parse.json").code == 2);
    CHECK(run("ef " + fixtures + "/bad_weights.json").code == 3);
    CHECK(run("ef /no/such/file.json").code == 2);
    CHECK(run("classify " + fixtures + "/pair_ok.json /extra").code != 0);
}

TEST_CASE("figure outputs are byte-deterministic") {
    RunResult r1 = run("figure1 --samples 40 --out fig1_a.csv");
    RunResult r2 = run("figure1 --samples 40 --out fig1_b.csv");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    std::string a = slurp("fig1_a.csv"), b = slurp("fig1_b.csv");
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove("fig1_a.csv");
    std::remove("fig1_b.csv");

    RunResult g1 = run("figure2 --grid 8 --out fig2_a.csv");
    CHECK(g1.code == 0);
    RunResult g2 = run("figure2 --grid 8 --out fig2_b.csv");
    CHECK(g2.code == 0);
    a = slurp("fig2_a.csv");
    b = slurp("fig2_b.csv");
    CHECK(a == b);
    CHECK(a.find("lambda,mu,in_region,boundary_mu") == 0);
    std::remove("fig2_a.csv");
    std::remove("fig2_b.csv");
}

TEST_CASE("fock subcommand") {
    RunResult r = run("fock " + fixtures + "/pair_inconclusive.json --len 4 --t 0.9");
    CHECK(r.code == 0);
    CHECK(r.out.find("dim") != std::string::npos);
}

TEST_CASE("verification harness exit codes") {
    RunResult ok = run("verify --trials 5 --seed 7");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all suites passed") != std::string::npos);
    RunResult bad = run("verify --trials 5 --seed 7 --inject-corrupt-closed-form");
    CHECK(bad.code == 5);
    CHECK(bad.out.find("VERIFICATION FAILED") != std::string::npos);
}
