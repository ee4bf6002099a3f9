#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <dc3col.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
    ordered_json json;
};

Run run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"dc3col"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = dc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    if (!r.out.empty() && r.out.front() == '{')
        r.json = ordered_json::parse(r.out.substr(0, r.out.find('\n')));
    return r;
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() /
               ("dc3col_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~TempDir() { fs::remove_all(dir_); }
    std::string file(const std::string& name, const std::string& contents = "") const {
        fs::path p = dir_ / name;
        if (!contents.empty()) {
            std::ofstream out(p);
            out << contents;
        }
        return p.string();
    }

private:
    fs::path dir_;
};

const char* kTriangle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const char* kC5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
const char* kK4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

} // namespace

TEST_CASE("recognize prints a witness and exits 0 on dually chordal input") {
    TempDir tmp;
    auto r = run_cli({"recognize", tmp.file("tri.col", kTriangle)});
    CHECK(r.code == 0);
    CHECK(r.json["command"] == "recognize");
    CHECK(r.json["verdict"] == "dually_chordal");
    CHECK(r.json["order"].size() == 3);
    CHECK(r.json["witness"].size() == 3);
    CHECK(r.json.contains("timing_ms"));
}

TEST_CASE("recognize rejects the 5-cycle with exit 1") {
    TempDir tmp;
    auto r = run_cli({"recognize", tmp.file("c5.col", kC5)});
    CHECK(r.code == 1);
    CHECK(r.json["verdict"] == "not_dually_chordal");
    CHECK(r.json["detail"] == "no maximum neighbourhood ordering");
}

TEST_CASE("color: triangle succeeds with three distinct colours") {
    TempDir tmp;
    auto r = run_cli({"color", tmp.file("tri.col", kTriangle)});
    CHECK(r.code == 0);
    CHECK(r.json["verdict"] == "colorable");
    REQUIRE(r.json["colors"].size() == 3);
    CHECK(r.json["colors"]["1"] != r.json["colors"]["2"]);
    CHECK(r.json["colors"]["1"] != r.json["colors"]["3"]);
}

TEST_CASE("color: K4 fails with exit 1 and no colors field") {
    TempDir tmp;
    auto r = run_cli({"color", tmp.file("k4.col", kK4)});
    CHECK(r.code == 1);
    CHECK(r.json["verdict"] == "not_3_colorable");
    CHECK(!r.json.contains("colors"));
}

TEST_CASE("color: the applicability pre-check can be bypassed") {
    TempDir tmp;
    std::string c6 = "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n";
    auto checked = run_cli({"color", tmp.file("c6.col", c6)});
    CHECK(checked.code == 1);
    CHECK(checked.json["verdict"] == "not_applicable");
    auto unchecked = run_cli({"color", "--unchecked", tmp.file("c6.col")});
    CHECK(unchecked.code == 0);
    CHECK(unchecked.json["verdict"] == "colorable");
}

TEST_CASE("color: disconnected input is exit 2 unless per-component is requested") {
    TempDir tmp;
    std::string two = "p edge 4 2\ne 1 2\ne 3 4\n";
    auto plain = run_cli({"color", tmp.file("two.col", two)});
    CHECK(plain.code == 2);
    CHECK(plain.err.find("disconnected") != std::string::npos);
    auto split = run_cli({"color", "--per-component", tmp.file("two.col")});
    CHECK(split.code == 0);
    CHECK(split.json["verdict"] == "colorable");
    CHECK(split.json["colors"].size() == 4);
}

TEST_CASE("parse failures exit 2 with a diagnostic on the error stream") {
    TempDir tmp;
    auto r = run_cli({"color", tmp.file("bad.col", "c nothing here\n")});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
    auto missing = run_cli({"recognize", tmp.file("missing.col")});
    CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit 2") {
    auto r = run_cli({"color"});
    CHECK(r.code == 2);
    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
    auto badprop = run_cli({"check", "x.col", "--property", "bogus"});
    CHECK(badprop.code == 2);
}

TEST_CASE("gen writes a parseable file and reports determinism via the seed") {
    TempDir tmp;
    std::string out1 = tmp.file("a.col");
    std::string out2 = tmp.file("b.col");
    auto r1 = run_cli({"gen", "--family", "duallyChordal", "--n", "20", "--density", "0.5",
                       "--seed", "9", "-o", out1});
    CHECK(r1.code == 0);
    CHECK(r1.json["verdict"] == "generated");
    CHECK(r1.json["n"] == 20);
    CHECK(r1.json["seed"] == 9);
    auto r2 = run_cli({"gen", "--family", "duallyChordal", "--n", "20", "--density", "0.5",
                       "--seed", "9", "-o", out2});
    CHECK(r2.code == 0);
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().rfind("p edge 20 ", 0) == 0);

    auto rec = run_cli({"recognize", out1});
    CHECK(rec.code == 0);
}

TEST_CASE("color accepts generated corpus files and the output validates") {
    TempDir tmp;
    std::string file = tmp.file("blocks.col");
    auto gen = run_cli({"gen", "--family", "locallyConnectedBlocks", "--n", "60", "--density",
                        "0.3", "--seed", "17", "-o", file});
    REQUIRE(gen.code == 0);
    auto col = run_cli({"color", file});
    if (col.code == 0) {
        REQUIRE(col.json["verdict"] == "colorable");
        dc_graph* g = nullptr;
        REQUIRE(dc_graph_read_dimacs(file.c_str(), &g) == DC_OK);
        std::vector<int32_t> colors(static_cast<size_t>(dc_graph_vertex_count(g)));
        for (auto& [key, value] : col.json["colors"].items())
            colors[static_cast<size_t>(std::stoi(key) - 1)] = value.get<int32_t>();
        CHECK(dc_validate_coloring(g, colors.data(), 3) == 1);
        dc_graph_free(g);
    } else {
        CHECK(col.json["verdict"] == "not_3_colorable"); // blocks may contain a K4
    }
}

TEST_CASE("reduce adds a universal vertex") {
    TempDir tmp;
    std::string out = tmp.file("out.col");
    auto r = run_cli({"reduce", tmp.file("tri.col", kTriangle), "-o", out});
    CHECK(r.code == 0);
    CHECK(r.json["verdict"] == "reduced");
    CHECK(r.json["n"] == 4);
    CHECK(r.json["m"] == 6);
}

TEST_CASE("check subcommand verdicts map onto exit codes") {
    TempDir tmp;
    std::string w4 = "p edge 5 8\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ne 1 5\ne 2 5\ne 3 5\ne 4 5\n";
    auto holds = run_cli({"check", tmp.file("w4.col", w4), "--property", "tree"});
    CHECK(holds.code == 0);
    CHECK(holds.json["verdict"] == "holds");
    CHECK(holds.json["report"]["path_adjacency"] == true);

    auto violated = run_cli({"check", tmp.file("c5.col", kC5), "--property", "tree"});
    CHECK(violated.code == 1);
    CHECK(violated.json["verdict"] == "violated");
}

TEST_CASE("bench emits one CSV row per size, reproducibly") {
    auto r = run_cli({"bench", "--family", "locallyConnectedBlocks", "--sizes", "200,400",
                      "--seed", "3", "--repeats", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(header == "n,m,time_ms");
    CHECK(row1.rfind("200,", 0) == 0);
    CHECK(row2.rfind("400,", 0) == 0);

    auto again = run_cli({"bench", "--family", "locallyConnectedBlocks", "--sizes", "200,400",
                          "--seed", "3", "--repeats", "3"});
    auto strip_time = [](const std::string& s) { return s.substr(0, s.rfind(',')); };
    std::istringstream lines2(again.out);
    std::string h2, r1, r2;
    std::getline(lines2, h2);
    std::getline(lines2, r1);
    std::getline(lines2, r2);
    CHECK(strip_time(r1) == strip_time(row1));
    CHECK(strip_time(r2) == strip_time(row2));
}

TEST_CASE("help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("recognize") != std::string::npos);
}
