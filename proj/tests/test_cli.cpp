#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "prg.h"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

std::string temp_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/prg_cli_test_XXXXXX";
        const char* made = mkdtemp(tmpl);
        return std::string(made ? made : "/tmp");
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const std::string out_file = temp_dir() + "/stdout.txt";
    const std::string cmd = std::string(PRG_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    res.stdout_text = buf.str();
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen binary produces the documented graph") {
    const std::string path = temp_dir() + "/b5.prgb";
    auto res = run_cli("gen binary --k 5 -o " + path);
    CHECK(res.exit_code == 0);
    prg_graph* g = nullptr;
    REQUIRE(prg_graph_read(path.c_str(), &g) == PRG_OK);
    CHECK(prg_graph_vertex_count(g) == 15);
    for (uint64_t v = 0; v < 15; ++v) {
        uint64_t deg = 0;
        prg_graph_degree(g, v, &deg);
        CHECK(deg == 6);
    }
    prg_graph_free(g);
}

TEST_CASE("same seed gives byte-identical files") {
    const std::string a = temp_dir() + "/era.prgb";
    const std::string b = temp_dir() + "/erb.prgb";
    CHECK(run_cli("gen er --n 100 --p 0.5 --seed 7 -o " + a).exit_code == 0);
    CHECK(run_cli("gen er --n 100 --p 0.5 --seed 7 -o " + b).exit_code == 0);
    CHECK(read_file(a) == read_file(b));
    CHECK(!read_file(a).empty());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("gen binary --k 4 -o " + temp_dir() + "/never.prgb").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code != 0);
    CHECK(run_cli("census -i missing_flag_s.prgb").exit_code != 0);
}

TEST_CASE("io errors exit 3") {
    const std::string trunc = temp_dir() + "/trunc.prgb";
    std::ofstream out(trunc, std::ios::binary);
    out.write("PRGB\x01\x09", 6);
    out.close();
    CHECK(run_cli("certify -i " + trunc + " --assume-p 0.5").exit_code == 3);
    CHECK(run_cli("certify -i " + temp_dir() + "/missing.prgb --assume-p 0.5").exit_code == 3);
}

TEST_CASE("certify reads binary graphs and reports co-degree deviations") {
    const std::string path = temp_dir() + "/b9.prgb";
    REQUIRE(run_cli("gen binary --k 9 -o " + path).exit_code == 0);
    auto res = run_cli("certify -i " + path + " --assume-p 0.5 --orders 2");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.stdout_text);
    CHECK(j["version"] == "0.1.0");
    CHECK(j["config"]["input"] == path);
    CHECK(j["report"]["deviations"]["order2"].get<double>() == doctest::Approx(2.75));
}

TEST_CASE("assume-p lets degenerate graphs through") {
    const std::string path = temp_dir() + "/empty.txt";
    std::ofstream out(path);
    out << "# n 10\n";
    out.close();
    CHECK(run_cli("certify -i " + path).exit_code == 2); // degenerate density
    auto res = run_cli("certify -i " + path + " --assume-p 0.5");
    CHECK(res.exit_code == 0);
}

TEST_CASE("census on K4 counts triangles") {
    const std::string path = temp_dir() + "/k4.txt";
    std::ofstream out(path);
    out << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    out.close();
    auto res = run_cli("census -i " + path + " --s 3 --p 0.5 --mode exact");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.stdout_text);
    bool found = false;
    for (const auto& cls : j["report"]["classes"])
        if (cls["edges"] == 3) {
            CHECK(cls["count"] == 4);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("round trip: file certify equals in-memory certify") {
    const std::string path = temp_dir() + "/roundtrip.prgb";
    REQUIRE(run_cli("gen er --n 200 --p 0.4 --seed 3 -o " + path).exit_code == 0);
    auto res = run_cli("certify -i " + path + " --orders 2");
    REQUIRE(res.exit_code == 0);
    json from_cli = json::parse(res.stdout_text)["report"];

    prg_graph* g = nullptr;
    REQUIRE(prg_graph_gen_er(200, 0.4, 3, &g) == PRG_OK);
    prg_certify_options opts;
    prg_certify_options_init(&opts);
    opts.max_order = 2;
    char* mem = nullptr;
    REQUIRE(prg_certify_json(g, &opts, &mem) == PRG_OK);
    json in_memory = json::parse(mem);
    prg_string_free(mem);
    prg_graph_free(g);
    CHECK(from_cli == in_memory);
}

TEST_CASE("csv output carries config header and table") {
    const std::string path = temp_dir() + "/csv_src.prgb";
    REQUIRE(run_cli("gen er --n 64 --p 0.5 --seed 2 -o " + path).exit_code == 0);
    auto res = run_cli("census -i " + path + " --s 3 --p 0.5 --report-format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.stdout_text.find("# version=0.1.0") != std::string::npos);
    CHECK(res.stdout_text.find("# config=") != std::string::npos);
    CHECK(res.stdout_text.find("table,classes") != std::string::npos);
    CHECK(res.stdout_text.find("max_ratio_error,") != std::string::npos);
}

TEST_CASE("ergm solve and clique regime emit the expected values") {
    auto solve = run_cli("ergm solve --beta -2 --gamma 4");
    CHECK(solve.exit_code == 0);
    json sj = json::parse(solve.stdout_text)["report"];
    CHECK(sj["regime"] == "HighTemperature");
    CHECK(sj["roots"][0].get<double>() == doctest::Approx(0.126).epsilon(1e-2));

    auto regime = run_cli("clique regime --n 1000000 --r 501");
    CHECK(regime.exit_code == 0);
    json rj = json::parse(regime.stdout_text)["report"];
    CHECK(rj["mu_log"].get<double>() < 0.0);
    CHECK(rj["tv_bound"].get<double>() < 1e-6);

    auto geom = run_cli("geom check --samples 20000 --seed 4");
    CHECK(geom.exit_code == 0);
    json gj = json::parse(geom.stdout_text)["report"];
    CHECK(gj["all_pass"] == true);
}

TEST_CASE("budget overruns exit 4") {
    const std::string path = temp_dir() + "/big.prgb";
    REQUIRE(run_cli("gen er --n 300 --p 0.5 --seed 1 -o " + path).exit_code == 0);
    // C(300,5) is far past the enumeration budget and s=5 has no closed form
    CHECK(run_cli("census -i " + path + " --s 5 --p 0.5").exit_code == 4);
}

TEST_CASE("diag subcommand emits error functionals") {
    const std::string path = temp_dir() + "/diag.prgb";
    REQUIRE(run_cli("gen er --n 64 --p 0.5 --seed 6 -o " + path).exit_code == 0);
    auto res = run_cli("--threads 2 diag -i " + path + " --r-max 3 --p 0.5");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.stdout_text)["report"];
    CHECK(j["E_n"].size() == 2);
    CHECK(j["recursion_bounds"].size() == 1);
    CHECK(j["good_fraction"]["xi1"].get<double>() >= 0.0);
    CHECK(j["good_fraction"]["xi1"].get<double>() <= 1.0);
}

TEST_CASE("edge list output format") {
    const std::string path = temp_dir() + "/g.edges";
    REQUIRE(run_cli("gen er --n 30 --p 0.3 --seed 5 -o " + path + " --format edges").exit_code ==
            0);
    std::string text = read_file(path);
    CHECK(text.find("# n 30") != std::string::npos);
    prg_graph* g = nullptr;
    REQUIRE(prg_graph_read(path.c_str(), &g) == PRG_OK);
    CHECK(prg_graph_vertex_count(g) == 30);
    prg_graph_free(g);
}

} // TEST_SUITE
