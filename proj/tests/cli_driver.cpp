// End-to-end driver for the tip CLI. argv[1] is the path to the binary.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_bin;
fs::path g_dir;

struct RunResult {
    int exit_code;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    fs::path out = g_dir / "stdout.txt", err = g_dir / "stderr.txt";
    std::string cmd = "\"" + g_bin + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                      err.string() + "\"";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && (status & 0x7f) == 0) ? (status >> 8) & 0xff : -1;
    return {code, slurp(out), slurp(err)};
}

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAILED: " << what << "\n";
        ++g_failures;
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_driver <path-to-tip>\n";
        return 2;
    }
    g_bin = argv[1];
    g_dir = fs::temp_directory_path() / "tip_cli_driver";
    fs::remove_all(g_dir);
    fs::create_directories(g_dir);

    auto path = [&](const char* name) { return (g_dir / name).string(); };

    // randgraph
    auto r = run("randgraph -k 2 -n 2 -p 1.0 --seed 1 --out \"" + path("rand.graph") + "\"");
    expect(r.exit_code == 0, "randgraph exits 0");
    expect(contains(r.out, "|V|=2 |E|=1"), "randgraph reports sizes");
    expect(fs::exists(g_dir / "rand.graph"), "randgraph writes the file");

    // gen on a hand-written single-edge graph
    write(g_dir / "edge.graph", "k 2\nv 0 1\nv 1 2\ne 0 1\n");
    r = run("gen \"" + path("edge.graph") + "\" --out \"" + path("edge.inst") + "\"");
    expect(r.exit_code == 0, "gen exits 0");
    expect(contains(r.out, "k'=8"), "gen reports k'=8 for a single edge, k=2");
    expect(contains(r.out, "|F|=8"), "gen reports |F|=8");
    expect(fs::exists(g_dir / "edge.inst"), "gen writes the instance");
    expect(fs::exists(g_dir / "edge.inst.prov"), "gen writes the provenance sidecar");

    // gen warns about dropped monochromatic edges
    write(g_dir / "mono.graph", "k 2\nv 0 1\nv 1 1\nv 2 2\ne 0 1\ne 0 2\n");
    r = run("gen \"" + path("mono.graph") + "\" --out \"" + path("mono.inst") + "\"");
    expect(r.exit_code == 0, "gen tolerates monochromatic edges");
    expect(contains(r.err, "warning: dropped 1 monochromatic edge"),
           "gen warns about the dropped edge");

    // solve in each method
    r = run("solve \"" + path("edge.inst") + "\"");
    expect(r.exit_code == 0 && contains(r.out, "size 8"), "solve (auto) finds size 8");
    expect(contains(r.out, "method clique"), "auto routes {n,c} to the clique solver");
    r = run("solve \"" + path("edge.inst") + "\" --method brute");
    expect(r.exit_code == 0 && contains(r.out, "size 8"), "solve --method brute agrees");
    r = run("solve \"" + path("edge.inst") + "\" --method chain");
    expect(r.exit_code == 2, "chain on a two-relation instance exits 2 (guard)");

    // auto routes single-relation instances to the chain DP
    write(g_dir / "chain.inst", "relations p\nd a 0 1 2 3\nd b 4 5 6 7\nd c 8 9 10 11\n");
    r = run("solve \"" + path("chain.inst") + "\"");
    expect(r.exit_code == 0 && contains(r.out, "method chain") && contains(r.out, "size 3"),
           "auto routes {p} to the chain DP");

    // check: yes- and no-instances
    r = run("check \"" + path("edge.graph") + "\"");
    expect(r.exit_code == 0 && contains(r.out, "AGREE yes-instance"),
           "check agrees on a yes-instance");
    r = run("check \"" + path("edge.graph") + "\" --variant precede-crossing");
    expect(r.exit_code == 0 && contains(r.out, "AGREE yes-instance"),
           "check agrees on a yes-instance (precede-crossing)");
    write(g_dir / "noedge.graph", "k 2\nv 0 1\nv 1 2\n");
    r = run("check \"" + path("noedge.graph") + "\"");
    expect(r.exit_code == 0 && contains(r.out, "AGREE no-instance"),
           "check agrees on a no-instance");

    // render
    r = run("render \"" + path("edge.inst") + "\" --out \"" + path("edge.svg") + "\" --prov \"" +
            path("edge.inst.prov") + "\"");
    expect(r.exit_code == 0, "render exits 0");
    auto svg = slurp(g_dir / "edge.svg");
    expect(contains(svg, "<svg") && contains(svg, "</svg>"), "render writes SVG");
    expect(contains(svg, "I1(1)"), "render labels regions from provenance");

    // exit codes: usage, I/O, parse
    r = run("");
    expect(r.exit_code == 1, "missing subcommand exits 1");
    r = run("solve \"" + path("does-not-exist.inst") + "\"");
    expect(r.exit_code == 3, "missing input file exits 3");
    write(g_dir / "bad.inst", "relations p\nd a 5 1 2 3\n");
    r = run("solve \"" + path("bad.inst") + "\"");
    expect(r.exit_code == 3 && contains(r.err, "line 2"),
           "malformed instance exits 3 with a line number");
    r = run("gen \"" + path("edge.graph") + "\" --variant bogus --out \"" + path("x.inst") + "\"");
    expect(r.exit_code == 1, "unknown variant exits 1");

    std::cout << (g_failures ? "CLI DRIVER: FAIL\n" : "CLI DRIVER: PASS\n");
    return g_failures ? 1 : 0;
}
