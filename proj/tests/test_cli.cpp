#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MAJOLAB_CLI_PATH
#error "MAJOLAB_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MAJOLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("reproduce all exits 0 and prints one line per case") {
    const RunResult r = run_cli("reproduce all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q1.angle2x2") != std::string::npos);
    CHECK(r.out.find("q3.min3x3") != std::string::npos);
    CHECK(r.out.find("q2.delta_xy") != std::string::npos);
    CHECK(r.out.find("q2.g101") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("reproduce of an unknown case is a usage error") {
    CHECK(run_cli("reproduce no.such.case").exit_code == 2);
    CHECK(run_cli("totally-bogus-subcommand").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
}

TEST_CASE("check tru: theorem-backed run exits 0 and emits JSONL") {
    const RunResult r = run_cli("check tru --trials 50 --seed 1 --dim 3");
    CHECK(r.exit_code == 0);
    int lines = 0;
    size_t pos = 0;
    while ((pos = r.out.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 50);
    const auto first = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    CHECK(first.contains("trial"));
    CHECK(first.contains("seed"));
    CHECK(first.contains("checker"));
    CHECK(first.contains("margin"));
    CHECK(first.contains("worst_k"));
    CHECK(first.contains("inputs"));
    CHECK(first["checker"] == "tru");
}

TEST_CASE("check q2.star on the registry matrices reports the violation but exits 0") {
    // Questions report violations as findings, not anomalies.
    write_file("/tmp/majolab_g101.json", R"({"c":0,"a":101,"terms":[[1,1]]})");
    const RunResult r = run_cli("check q2.star --trials 3 --seed 9 --dim 3 --fn /tmp/majolab_g101.json");
    CHECK(r.exit_code == 0);
}

TEST_CASE("delta subcommand prints the vector, blocks, and fd table") {
    write_file("/tmp/majolab_a.json", R"({"n":3,"re":[[3,0,0],[0,2,0],[0,0,1]]})");
    write_file("/tmp/majolab_b.json", R"({"n":3,"re":[[0.5,0.25,0],[0.25,-1,0.125],[0,0.125,2]]})");
    const RunResult r = run_cli("delta --a /tmp/majolab_a.json --b /tmp/majolab_b.json --fd 1e-3,1e-5");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("delta"));
    CHECK(j["delta"].size() == 3);
    // Simple spectrum: delta is the diagonal of B in A's eigenbasis.
    CHECK(std::abs(j["delta"][0].get<double>() - 0.5) < 1e-12);
    CHECK(std::abs(j["delta"][1].get<double>() - (-1.0)) < 1e-12);
    CHECK(std::abs(j["delta"][2].get<double>() - 2.0) < 1e-12);
    REQUIRE(j.contains("fd"));
    CHECK(j["fd"].size() == 2);
    CHECK(j["fd"][0]["per_k"].size() == 3);
    for (const auto& row : j["fd"][1]["per_k"])
        CHECK(row["abs_diff"].get<double>() <= 1e-3);

    CHECK(run_cli("delta --a /tmp/majolab_a.json --b /no/such/file.json").exit_code == 2);
}

TEST_CASE("search: deterministic JSONL and exit 0 on a question target") {
    const RunResult r1 = run_cli("search q1 --dim 2 --trials 40 --seed 42 --out /tmp/majolab_s1.jsonl");
    const RunResult r2 = run_cli("search q1 --dim 2 --trials 40 --seed 42 --workers 3 --out /tmp/majolab_s2.jsonl");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    std::ifstream f1("/tmp/majolab_s1.jsonl"), f2("/tmp/majolab_s2.jsonl");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(!s1.empty());
    CHECK(s1 == s2);
}

TEST_CASE("MAJOLAB_WORKERS env var overrides --workers without changing output") {
    const std::string cmd = std::string("MAJOLAB_WORKERS=4 ") + MAJOLAB_CLI_PATH +
                            " search q3 --dim 3 --trials 24 --seed 5 --workers 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);

    const RunResult plain = run_cli("search q3 --dim 3 --trials 24 --seed 5");
    CHECK(out == plain.out);
}
