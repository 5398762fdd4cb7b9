#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "daglca/io.hpp"
#include "helpers.hpp"

#ifndef DAGLCA_CLI_PATH
#error "DAGLCA_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DAGLCA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("daglca_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen is deterministic byte for byte") {
    TempDir tmp;
    const std::string f1 = tmp.file("a.txt"), f2 = tmp.file("b.txt");
    REQUIRE(run_cli("gen random-dag --n 64 --p 0.1 --seed 7 --out " + f1).exit_code == 0);
    REQUIRE(run_cli("gen random-dag --n 64 --p 0.1 --seed 7 --out " + f2).exit_code == 0);
    CHECK(daglca::read_file(f1) == daglca::read_file(f2));
    CHECK(run_cli("gen random-dag --n 0 --p 0.5 --seed 1 --out " + tmp.file("empty.txt")).exit_code ==
          0);
}

TEST_CASE("gen hypergraph writes the partition header") {
    TempDir tmp;
    const std::string f = tmp.file("h.hg");
    REQUIRE(run_cli("gen hypergraph --parts 4,4,4,16 --p 0.5 --seed 1 --out " + f).exit_code == 0);
    const daglca::Hypergraph3 h = daglca::load_hypergraph(f);
    CHECK(h.n() == 28);
    REQUIRE(h.partition().has_value());
    CHECK(h.partition()->groups.size() == 4);
}

TEST_CASE("run count-lca on the butterfly") {
    TempDir tmp;
    const std::string g = tmp.file("fly.json");
    daglca::write_file(g, daglca::dag_to_json(testref::butterfly()).dump());
    const RunResult res = run_cli("run --alg count-lca --in " + g);
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["kind"] == "counts");
    CHECK(j["data"][2][3] == 2);
    CHECK(j["algorithm"] == "count-lca");
    CHECK(j.contains("input_hash"));
}

TEST_CASE("run exact2 and max-witness through files") {
    TempDir tmp;
    const std::string g = tmp.file("fly.txt");
    daglca::write_file(g, daglca::dag_to_text(testref::butterfly()));
    const RunResult e2 = run_cli("run --alg exact2 --in " + g + " --seed 3");
    REQUIRE(e2.exit_code == 0);
    CHECK(nlohmann::json::parse(e2.out)["data"][2][3] == nlohmann::json::array({0, 1}));

    const std::string a = tmp.file("a.bm"), b = tmp.file("b.bm");
    daglca::write_file(a, daglca::bool_matrix_to_text(daglca::BoolMatrix::ones(3, 3)));
    daglca::write_file(b, daglca::bool_matrix_to_text(daglca::BoolMatrix::identity(3)));
    const RunResult w = run_cli("run --alg max-witness --in " + a + " --in2 " + b);
    REQUIRE(w.exit_code == 0);
    CHECK(nlohmann::json::parse(w.out)["data"][1][2] == 2);
}

TEST_CASE("exit codes") {
    TempDir tmp;
    CHECK(run_cli("run --alg no-such-alg --in /dev/null").exit_code == 2);
    CHECK(run_cli("run --alg count-lca --in " + tmp.file("missing.json")).exit_code == 3);
    const std::string bad = tmp.file("bad.txt");
    daglca::write_file(bad, "this is not a dag\n");
    CHECK(run_cli("run --alg count-lca --in " + bad).exit_code == 3);
    CHECK(run_cli("nope").exit_code == 2);
}

TEST_CASE("check command passes for a valid pairing") {
    const RunResult res = run_cli("check --alg exact1 --oracle count-lca --n 24 --p 0.2 --trials 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS") == 0);
}

TEST_CASE("check command catches a bad pairing parameterization") {
    const RunResult res =
        run_cli("check --alg solve-4clique --oracle brute-4clique --parts 3,3,3 --trials 1");
    CHECK(res.exit_code == 2);
}

TEST_CASE("bench emits one csv row per size") {
    const RunResult res = run_cli("bench --alg closure --sizes 16,32 --repeats 2");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("alg,n,repeats,median_ms\n") == 0);
    CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 3);
}

TEST_CASE("run verify reports the existential answer") {
    TempDir tmp;
    const std::string g = tmp.file("chain.txt");
    daglca::write_file(g, daglca::dag_to_text(testref::chain3()));
    daglca::CandidateMatrix cand(3);
    const daglca::LcaReport lists = daglca::k_lcas_bruteforce(testref::chain3(), 1);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (!lists.lists[u][v].empty()) cand.set(u, v, lists.lists[u][v][0]);
    cand.set(1, 2, 0);
    const std::string c = tmp.file("cand.json");
    daglca::write_file(c, daglca::candidates_to_json(cand).dump());
    const RunResult res = run_cli("run --alg verify --in " + g + " --in2 " + c);
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["any_error"] == true);
    CHECK(j["data"][1][2] == 0);
}
