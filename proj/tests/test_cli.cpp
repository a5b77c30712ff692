#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PHTOOL_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / "phtool-cli-tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path;
}

const std::string kWorkedComplex =
    "0 0 1\n0 1 2\n0 2 2\n1 0 1 2\n1 0 2 3\n1 1 2 3\n2 0 1 2 4\n";

const std::string kTwoComponentComplex =
    "0 0 0\n0 1 0\n0 2 0\n0 3 0\n0 4 0\n"
    "1 0 1 0\n1 0 2 0\n1 1 2 0\n1 0 3 0\n1 1 3 0\n2 0 1 2 0\n";

const std::string kRingImage =
    "2\n5 5\n"
    "115 119 119 119 119\n115 94 94 94 114\n115 94 139 100 114\n"
    "115 94 99 99 114\n115 117 117 117 117\n";

} // namespace

TEST_CASE("barcode subcommand on the worked complex") {
    auto cplx = write_file("worked.cplx", kWorkedComplex);
    for (auto* alg : {"standard", "twist", "dual"}) {
        auto r = run("barcode --input " + cplx.string() + " --algorithm " + alg +
                     " --max-dim 2");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "0 1 inf\n0 2 3\n1 3 4\n");
    }
}

TEST_CASE("betti subcommand") {
    auto cplx = write_file("two_comp.cplx", kTwoComponentComplex);
    auto r = run("betti --input " + cplx.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2 1\n");
}

TEST_CASE("image pipeline through the cli") {
    auto img = write_file("ring.img", kRingImage);
    auto r = run("barcode --input " + img.string() + " --format image --max-dim 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 94 inf\n1 100 139\n");
}

TEST_CASE("distance subcommand") {
    auto cplx = write_file("worked2.cplx", kWorkedComplex);
    auto dgm = (scratch_dir() / "worked.dgm").string();
    REQUIRE(run("barcode --input " + cplx.string() + " --output " + dgm).exit_code == 0);
    auto r = run("distance bottleneck " + dgm + " " + dgm);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\n");
    auto w = run("distance wasserstein " + dgm + " " + dgm + " --p 2");
    CHECK(w.exit_code == 0);
    CHECK(w.output == "0\n");
}

TEST_CASE("reduce output is algorithm independent") {
    auto cplx = write_file("worked3.cplx", kWorkedComplex);
    auto a = run("reduce standard --input " + cplx.string());
    auto b = run("reduce twist --input " + cplx.string());
    auto c = run("reduce dual --input " + cplx.string());
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);
    CHECK(a.output.find("inf") != std::string::npos);
}

TEST_CASE("generate feeds build") {
    auto pts = (scratch_dir() / "klein.pts").string();
    auto cx = (scratch_dir() / "klein.cplx").string();
    REQUIRE(run("generate klein --count 25 --mode grid --output " + pts).exit_code == 0);
    auto r = run("build rips --input " + pts + " --max-dim 1 --max-scale 1.5 --output " + cx);
    CHECK(r.exit_code == 0);
    std::ifstream in(cx);
    std::string first;
    std::getline(in, first);
    CHECK(first.substr(0, 2) == "0 ");
}

TEST_CASE("plot writes svg") {
    auto cplx = write_file("worked4.cplx", kWorkedComplex);
    auto dgm = (scratch_dir() / "plot.dgm").string();
    auto svg = (scratch_dir() / "plot.svg").string();
    REQUIRE(run("barcode --input " + cplx.string() + " --output " + dgm).exit_code == 0);
    CHECK(run("plot --input " + dgm + " --output " + svg).exit_code == 0);
    std::ifstream in(svg);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("<svg") != std::string::npos);
}

TEST_CASE("bench with an empty config emits only the header") {
    auto cfg = write_file("empty.json", "{}");
    auto r = run("bench --config " + cfg.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "dataset,complex,max_dim,size,algorithm,wall_s,cpu_s,peak_mem_bytes\n");
}

TEST_CASE("bench runs cells and respects the cap") {
    std::string cfg_json = R"({
      "repeats": 1,
      "cap": 1000,
      "cells": [
        {"dataset": {"kind": "klein", "n": 16, "mode": "grid", "seed": 1},
         "complex": "rips", "max_dim": 1, "max_scale": 1.5},
        {"dataset": {"kind": "uniform", "n": 50, "d": 16, "seed": 1},
         "complex": "rips", "max_dim": 8}
      ]
    })";
    auto cfg = write_file("suite.json", cfg_json);
    auto r = run("bench --config " + cfg.string());
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string header, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK(row1.substr(0, 12) == "klein,rips,1");
    // the analytic full-scale size exceeds the cap: dashes plus the count
    CHECK(row2 == "uniform,rips,8,3160457385,twist,-,-,-");
}

TEST_CASE("exit codes distinguish usage and data errors") {
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("barcode").exit_code == 2);            // missing required --input
    CHECK(run("barcode --input /nonexistent.cplx").exit_code == 1);
    auto bad = write_file("bad.cplx", "1 0 1 2\n"); // missing vertices
    CHECK(run("barcode --input " + bad.string()).exit_code == 1);
}
