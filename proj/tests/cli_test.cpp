#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string temp_path(const char* stem) {
    return std::string("cli_test_") + stem + ".tmp";
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = temp_path("out");
    const std::string err_path = temp_path("err");
    const std::string command = std::string(CHARVAR_BIN) + " " + args + " >" +
                                out_path + " 2>" + err_path;
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp_file(out_path);
    result.err = slurp_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::string config(const char* name) {
    return std::string(CHARVAR_CONFIG_DIR) + "/" + name;
}

} // namespace

TEST_CASE("dim prints the box dimension", "[cli]") {
    const auto result = run("dim " + config("gl-rank10.json"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("delta: 4") != std::string::npos);
    CHECK(result.out.find("charvar_dim: 6") != std::string::npos);
}

TEST_CASE("dim emits json on request", "[cli]") {
    const auto result =
        run("dim " + config("quad-rank10-a.json") + " --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["beta"] == 4);
    CHECK(parsed["l"] == -8);
    CHECK(parsed["delta"] == -4);
}

TEST_CASE("dim text output for quad and overlapping documents", "[cli]") {
    const auto quad = run("dim " + config("quad-rank10-a.json"));
    CHECK(quad.exit_code == 0);
    CHECK(quad.out.find("beta: 4") != std::string::npos);
    CHECK(quad.out.find("l: -8") != std::string::npos);
    CHECK(quad.out.find("delta: -4") != std::string::npos);

    const auto overlap = run("dim " + config("overlap-rank20.json"));
    CHECK(overlap.exit_code == 0);
    CHECK(overlap.out.find("beta: 54") != std::string::npos);
    CHECK(overlap.out.find("l: 6") != std::string::npos);
    CHECK(overlap.out.find("mu: 3") != std::string::npos);
}

TEST_CASE("dim rejects malformed documents with exit 2", "[cli]") {
    const auto bad = run("dim " + config("bad-widths.json"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("sum") != std::string::npos);

    const auto missing = run("dim no-such-file.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("verify gl passes and reports witnesses", "[cli]") {
    const auto result = run("verify gl --max-r 24 --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["status"] == "pass");
    CHECK(parsed["theorem"] == "gl-rank-bound");
    CHECK(parsed["witnesses"].size() == 3);
}

TEST_CASE("verify writes reports to a file", "[cli]") {
    const std::string report_path = temp_path("report");
    const auto result = run("verify quad --range 3 10 --format json --out " +
                            report_path);
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(slurp_file(report_path));
    CHECK(parsed["status"] == "pass");
    CHECK(parsed["witnesses"].empty());
    std::remove(report_path.c_str());
}

TEST_CASE("verify rejects bad flags with exit 2", "[cli]") {
    CHECK(run("verify gl").exit_code == 2);
    CHECK(run("verify nn --range 3 10").exit_code == 2);
    CHECK(run("verify gl --max-r fifty").exit_code == 2);
}

TEST_CASE("mc reduces the hypergeometric tuple", "[cli]") {
    const auto result =
        run("mc " + config("tuple-hypergeometric.json") + " --trace");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("rank sequence: 2 -> 1") != std::string::npos);
    CHECK(result.out.find("step 1") != std::string::npos);
    CHECK(result.out.find("betaT") != std::string::npos);
}

TEST_CASE("mc reports MC-minimal tuples", "[cli]") {
    const auto result = run("mc " + config("tuple-rank10-532.json"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("already MC-minimal (defect 0)") !=
          std::string::npos);
}

TEST_CASE("mc surfaces degenerate kernels with exit 1", "[cli]") {
    const auto result = run("mc " + config("tuple-degenerate.json"));
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("kernel") != std::string::npos);
}

TEST_CASE("diagram writes an svg", "[cli]") {
    const std::string svg_path = temp_path("diagram") + ".svg";
    const auto result =
        run("diagram " + config("gl-rank10.json") + " --out " + svg_path);
    CHECK(result.exit_code == 0);
    const std::string svg = slurp_file(svg_path);
    CHECK(svg.find("<svg") != std::string::npos);
    std::remove(svg_path.c_str());

    CHECK(run("diagram " + config("tuple-hypergeometric.json") +
              " --out unused.svg")
              .exit_code == 2);
}
