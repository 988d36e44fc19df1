#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli_path() {
    const char* env = std::getenv("MATCHPOLY_CLI");
    REQUIRE_MESSAGE(env != nullptr, "MATCHPOLY_CLI must point at the built binary");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_file(const std::string& tag, const std::string& content) {
    std::string path = "/tmp/matchpoly_cli_" + tag + "_" + std::to_string(::getpid());
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    static int counter = 0;
    std::string out_path = "/tmp/matchpoly_cli_out_" + std::to_string(::getpid()) + "_" +
                           std::to_string(counter++);
    std::string cmd = cli_path() + " " + args + " >" + out_path + " 2>/dev/null";
    if (!stdin_text.empty()) {
        std::string in_path = temp_file("stdin" + std::to_string(counter), stdin_text);
        cmd += " <" + in_path;
    } else {
        cmd += " </dev/null";
    }
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    r.out = buf.str();
    std::remove(out_path.c_str());
    return r;
}

const char* kStar = "c l1\nc l2\nc l3\n";
const char* kP5 = "0 1\n1 2\n2 3\n3 4\n";

}  // namespace

TEST_CASE("analyze document for the star at theta 0") {
    RunResult r = run("analyze --theta 0", kStar);
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["graph"]["n"] == 4);
    CHECK(doc["mult"] == 2);
    CHECK(doc["critical"] == false);
    CHECK(doc["decomposition"]["A"] == nlohmann::json::array({"c"}));
    CHECK(doc["decomposition"]["D"].size() == 3);
    CHECK(doc["deficiency"]["value"] == 2);
    CHECK(doc["deficiency"]["witness"] == nlohmann::json::array({"c"}));
    CHECK(doc["barriers"]["equals_A_theta"] == true);
    CHECK(doc["barriers"]["N_theta_empty"] == true);
}

TEST_CASE("analyze at an irrational theta via --theta-poly") {
    RunResult r = run("analyze --theta-poly \"1 0 -3\"", kP5);
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["mult"] == 1);
    CHECK(doc["critical"] == true);
    CHECK(doc["decomposition"]["D"].size() == 5);
    CHECK(doc["deficiency"]["value"] == 1);
}

TEST_CASE("analyze at a non-root rational theta") {
    RunResult r = run("analyze --theta 5", "0 1\n");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["mult"] == 0);
    CHECK(doc["decomposition"]["D"].empty());
    CHECK(doc["decomposition"]["A"].empty());
}

TEST_CASE("analyze JSON round-trips byte for byte") {
    RunResult first = run("analyze --theta 0", kStar);
    REQUIRE(first.exit_code == 0);
    auto doc = nlohmann::json::parse(first.out);
    std::string text = doc["graph"]["text"].get<std::string>();
    std::string minpoly = doc["theta"]["minpoly"].get<std::string>();
    std::string label = doc["theta"]["label"].get<std::string>();
    std::string in_path = temp_file("roundtrip", text);
    RunResult second = run("analyze --input " + in_path + " --theta-poly \"" + minpoly +
                           "\" --label \"" + label + "\"");
    REQUIRE(second.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("graph6 input and text output") {
    RunResult r = run("analyze --format graph6 --theta 0 --output text", "Bw\n");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("mult: 1") != std::string::npos);
    CHECK(r.out.find("critical: true") != std::string::npos);
}

TEST_CASE("roots subcommand") {
    RunResult text = run("roots", kP5);
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("x^5 - 4x^3 + 3x") != std::string::npos);
    CHECK(text.out.find("x^2 - 3: 1") != std::string::npos);

    RunResult json = run("roots --output json", kP5);
    REQUIRE(json.exit_code == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["mu"] == "1 0 -4 0 3 0");
    REQUIRE(doc["candidates"].size() == 4);
    for (const auto& c : doc["candidates"]) CHECK(c["multiplicity"] == 1);

    RunResult empty3 = run("roots", "vertices: 3\n");
    CHECK(empty3.out.find("x: 3") != std::string::npos);
}

TEST_CASE("barriers subcommand always enumerates") {
    RunResult forced = run("barriers --theta 0", kStar);
    REQUIRE(forced.exit_code == 0);
    auto doc = nlohmann::json::parse(forced.out);
    CHECK(doc["barriers"]["all"].size() == 1);

    RunResult same = run("analyze --theta 0", kStar);
    CHECK(forced.out == same.out);

    RunResult rejected = run("barriers --no-barriers", kStar);
    CHECK(rejected.exit_code == 2);
}

TEST_CASE("exit code 2 on bad input") {
    CHECK(run("analyze --theta 0", "0 0\n").exit_code == 2);        // self-loop
    CHECK(run("analyze --theta 0", "garbage\n").exit_code == 2);    // malformed line
    CHECK(run("analyze --theta x", "0 1\n").exit_code == 2);        // bad theta
    CHECK(run("analyze --theta-poly \"1 0 -4\"", "0 1\n").exit_code == 2);  // reducible
    CHECK(run("analyze --theta 0 --theta-poly \"1 0\"", "0 1\n").exit_code == 2);
    CHECK(run("analyze --format graph6 --theta 0", "~~~\n").exit_code == 2);
    CHECK(run("nonsense", "").exit_code == 2);
}

TEST_CASE("exit code 3 above the enumeration cap, 0 with --no-barriers") {
    std::string big = "vertices: 23\n";
    CHECK(run("analyze --theta 0", big).exit_code == 3);
    RunResult skipped = run("analyze --theta 0 --no-barriers", big);
    REQUIRE(skipped.exit_code == 0);
    auto doc = nlohmann::json::parse(skipped.out);
    CHECK(doc["mult"] == 23);
    CHECK(doc["deficiency"].is_null());
    CHECK(doc["barriers"].is_null());
}

TEST_CASE("verify subcommand") {
    RunResult r = run("verify --nmax 4 --theta-policy deg2 --jobs 2");
    REQUIRE(r.exit_code == 0);
    auto rep = nlohmann::json::parse(r.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["graphs"] == 76);
    CHECK(rep["policy"] == "all-candidates-deg2");

    CHECK(run("verify --theta-policy deg2").exit_code == 2);  // no corpus

    RunResult zero = run("verify --nmax 3 --theta-policy zero");
    REQUIRE(zero.exit_code == 0);
    CHECK(nlohmann::json::parse(zero.out)["policy"] == "zero-only");

    std::string thetas = temp_file("thetas", "1 0 -3\n1 -1\n");
    RunResult file = run("verify --nmax 3 --theta-policy file --theta-file " + thetas);
    REQUIRE(file.exit_code == 0);
    CHECK(nlohmann::json::parse(file.out)["policy"] == "explicit(2)");
}

TEST_CASE("verify with a corpus file and report output") {
    std::string corpus = temp_file("corpus", "A_\nBw\nC~\n");
    std::string out = "/tmp/matchpoly_cli_report_" + std::to_string(::getpid()) + ".json";
    RunResult r = run("verify --corpus " + corpus + " --out " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("SUITE PASS") != std::string::npos);  // text summary on stdout
    std::ifstream f(out);
    auto rep = nlohmann::json::parse(f);
    CHECK(rep["graphs"] == 3);
    std::remove(out.c_str());
}

TEST_CASE("hunt subcommand exit codes") {
    RunResult found = run("hunt --target extreme_not_barrier --nmax 4");
    REQUIRE(found.exit_code == 0);
    auto rep = nlohmann::json::parse(found.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["found"].size() == 1);

    CHECK(run("hunt --target special_intersection_gap --nmax 2").exit_code == 1);
    CHECK(run("hunt --target no_such_target --nmax 3").exit_code == 2);
    CHECK(run("hunt --nmax 3").exit_code == 2);  // --target required
}
