#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homcode/cli.hpp"
#include "homcode/css.hpp"
#include "homcode/generators.hpp"
#include "homcode/map.hpp"
#include "homcode/tables.hpp"
#include "oracles.hpp"

using namespace homcode;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Runs the installed binary through the shell; stderr is folded into stdout.
Run run_binary(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("HOMCODE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "HOMCODE_BIN is not set");
    const std::string cmd = env + (env.empty() ? "" : " ") + bin + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("homcode_cli_" + std::to_string(getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_faces(const std::string& name, const oracle::Faces& faces) {
    const fs::path p = scratch() / name;
    std::ofstream out(p);
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i] + 1;
        out << '\n';
    }
    return p.string();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gen prints a summary and writes the map") {
    const std::string path = (scratch() / "odd30.map").string();
    const Run r = run({"gen", "odd", "3", "0", "-o", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "V=16 E=40 F=16 chi=-8 type=[5^5]\n");
    std::ifstream in(path);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) {
        std::istringstream ls(line);
        int count = 0;
        for (int v; ls >> v;) ++count;
        CHECK(count == 5);
    }
    CHECK(lines == 16);

    CHECK(run({"gen", "even", "3", "0"}).out == "V=26 E=78 F=26 chi=-26 type=[6^6]\n");
}

TEST_CASE("gen rejects degenerate parameters") {
    const Run r = run({"gen", "odd", "2", "0"});
    CHECK(r.code == kExitDomain);
    CHECK(r.err.find("m1 must be ≥ 3") != std::string::npos);
}

TEST_CASE("binary round trip matches the in-process pipeline") {
    const std::string path = (scratch() / "even31.map").string();
    CHECK(run_binary("gen even 3 1 -o " + path).code == 0);
    const Run viaBinary = run_binary("code " + path);
    CHECK(viaBinary.code == 0);

    const PolygonalMap m = load_map(path);
    CHECK(m.faces() == gen_even({3, 1}).faces());
    const std::string expected = compute_report(m, "file:" + path).render();
    CHECK(viaBinary.out == expected + "\n");
    CHECK(first_line(viaBinary.out).rfind("[[84,30,4]] chi=-28 type=[6^6] rate=5/14", 0) == 0);
}

TEST_CASE("code on the builtin maps") {
    const std::string n1 = (scratch() / "n1.map").string();
    const std::string k3 = (scratch() / "k3.map").string();
    REQUIRE(run({"builtin", "n1", "-o", n1}).code == 0);
    REQUIRE(run({"builtin", "k3", "-o", k3}).code == 0);

    CHECK(run({"code", n1, "--distance", "bfs"}).out ==
          "[[42,4,3]] chi=-2 type=[3^7] rate=2/21 src=file:" + n1 + "\n");
    CHECK(run({"code", k3, "--distance", "oracle"}).out ==
          "[[40,3,4]] chi=-1 type=[4^3,5^1] rate=3/40 src=file:" + k3 + "\n");
    CHECK(run({"code", k3, "--distance", "none"}).out.rfind("[[40,3,?]]", 0) == 0);

    const Run w = run({"code", n1, "--witness"});
    const auto pos = w.out.find("witness=");
    REQUIRE(pos != std::string::npos);
    const std::string edges = w.out.substr(pos + 8);
    CHECK(std::count(edges.begin(), edges.end(), ',') == 2);
}

TEST_CASE("matrix export") {
    const std::string n1 = (scratch() / "n1x.map").string();
    REQUIRE(run({"builtin", "n1", "-o", n1}).code == 0);
    const std::string hx = (scratch() / "n1.hx.spm").string();
    const std::string hz = (scratch() / "n1.hz.spm").string();
    CHECK(run({"code", n1, "--distance", "none", "--hx", hx, "--hz", hz}).code == 0);
    const CssCode code = build_css(builtin("n1"));
    std::ifstream hx_in(hx), hz_in(hz);
    CHECK(gf2::read_spm(hx_in) == code.hx);
    CHECK(gf2::read_spm(hz_in) == code.hz);
}

TEST_CASE("k = 0 has no distance") {
    const std::string tetra = write_faces("tetra.map", oracle::tetrahedron());
    const Run r = run({"code", tetra});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("[[6,0,?]] chi=2 ", 0) == 0);
    CHECK(r.err.find("k=0") != std::string::npos);

    const Run c = run({"cover", tetra, "2"});
    CHECK(c.code == kExitDomain);
    CHECK(c.err.find("NoSuchCycle") != std::string::npos);
}

TEST_CASE("budget overrun exits with 3") {
    const std::string n1 = (scratch() / "n1b.map").string();
    REQUIRE(run_binary("builtin n1 -o " + n1).code == 0);
    const Run r = run_binary("code " + n1 + " --distance oracle --cap 3");
    CHECK(r.code == 0);
    const Run tight = run_binary("code " + n1 + " --distance oracle --cap 3", "HOMCODE_BUDGET=100");
    CHECK(tight.code == kExitBudget);
    CHECK(tight.out.find("MethodTooExpensive") != std::string::npos);
}

TEST_CASE("covers") {
    const std::string n1 = (scratch() / "n1c.map").string();
    const std::string k3 = (scratch() / "k3c.map").string();
    REQUIRE(run({"builtin", "n1", "-o", n1}).code == 0);
    REQUIRE(run({"builtin", "k3", "-o", k3}).code == 0);

    const Run r = run({"cover", n1, "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("cycle=", 0) == 0);
    CHECK(r.out.find("V=24 E=84 F=56 chi=-4 type=[3^7]\n") != std::string::npos);

    const std::string k3_2 = (scratch() / "k3_2.map").string();
    REQUIRE(run({"cover", k3, "2", "-o", k3_2}).code == 0);
    CHECK(run({"code", k3_2}).out.rfind("[[80,4,4]]", 0) == 0);

    // An explicit cycle is echoed back on failure; this essential one is one-sided.
    const std::string klein = write_faces("klein.map", oracle::klein_grid(3, 4));
    const Run bad = run({"cover", klein, "2", "--cycle", "1,2,3,4"});
    CHECK(bad.code == kExitDomain);
    CHECK(bad.err.find("OneSidedCycle") != std::string::npos);
    CHECK(bad.err.find("1,2,3,4") != std::string::npos);

    CHECK(run({"cover", n1, "2", "--cycle", "1,x"}).code == kExitDomain);
}

TEST_CASE("tables") {
    const Run t2 = run({"table", "t2-families", "--m1-max", "4", "--m2-max", "3"});
    CHECK(t2.code == 0);
    CHECK(std::count(t2.out.begin(), t2.out.end(), '\n') == 17);
    std::istringstream lines(t2.out);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) CHECK(line.substr(line.size() - 2) == "OK");

    const Run t3 = run({"table", "t3-covers", "--d-max", "3"});
    CHECK(t3.code == 0);
    CHECK(t3.out.find("[[126,8,3]]") != std::string::npos);

    const Run t3_1 = run({"table", "t3-covers", "--d-max", "1"});
    CHECK(t3_1.out.find("2/21") != std::string::npos);
    CHECK(t3_1.out.find("3/40") != std::string::npos);

    const Run t1 = run({"table", "t1-k3"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("[[40,3,4]]") != std::string::npos);
    CHECK(t1.out.find("[[42,4,3]]") != std::string::npos);
}

TEST_CASE("usage and io errors") {
    CHECK(run({"info", "/nonexistent/x.map"}).code == kExitIo);
    CHECK(run({"frobnicate"}).code == kExitDomain);
    CHECK(run({"gen", "odd"}).code == kExitDomain);
    CHECK(run({"builtin", "k7"}).code == kExitDomain);
    CHECK(run({"--help"}).code == kExitOk);

    const std::string open = write_faces("open.map", {{0, 1, 2}, {0, 2, 3}});
    const Run r = run({"info", open});
    CHECK(r.code == kExitDomain);
    CHECK(r.err.find("OpenEdge") != std::string::npos);
}
