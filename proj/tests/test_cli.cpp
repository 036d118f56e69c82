#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cfcon/cli.hpp"
#include "cfcon/generators.hpp"
#include "cfcon/io.hpp"

using namespace cfcon;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cfcon");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("cfcon_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    write_edge_list(f, g);
}

}  // namespace

TEST_CASE("cfc prints the exact value") {
    TempDir dir;
    save_graph(dir.file("c5.txt"), make_cycle(5));
    Run r = run({"cfc", dir.file("c5.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    save_graph(dir.file("k4.txt"), make_complete(4));
    CHECK(run({"cfc", dir.file("k4.txt")}).out == "1\n");

    save_graph(dir.file("p8.txt"), make_path(8));
    Run low = run({"cfc", dir.file("p8.txt"), "--max-k", "2"});
    CHECK(low.code == 3);
    CHECK(low.out.rfind("EXCEEDED", 0) == 0);

    save_graph(dir.file("k7.txt"), make_complete(7));
    Run big = run({"cfc", dir.file("k7.txt"), "--budget", "10"});
    CHECK(big.code == 3);
}

TEST_CASE("check refutes the monochromatic path") {
    TempDir dir;
    save_graph(dir.file("p3.txt"), make_path(3));
    {
        std::ofstream f(dir.file("p3.col"));
        f << "2 1\n0 1\n1 1\n";
    }
    Run r = run({"check", dir.file("p3.txt"), "--coloring", dir.file("p3.col")});
    CHECK(r.code == 1);
    CHECK(r.err.find("between 0 and 2") != std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "refuted");
    CHECK(j["failing_pair"] == nlohmann::json::array({0, 2}));

    {
        std::ofstream f(dir.file("p3ok.col"));
        f << "2 2\n0 1\n1 2\n";
    }
    CHECK(run({"check", dir.file("p3.txt"), "--coloring", dir.file("p3ok.col")}).code == 0);

    {
        std::ofstream f(dir.file("bad.col"));
        f << "2 2\n0 1\n0 2\n";
    }
    Run bad = run({"check", dir.file("p3.txt"), "--coloring", dir.file("bad.col")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
}

TEST_CASE("gen writes edge lists") {
    Run r = run({"gen", "--model", "gnp", "--n", "5", "--p", "1.0", "--seed", "1"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "5 10");
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 10);

    Run reg = run({"gen", "--model", "regular", "--n", "10", "--r", "3", "--seed", "2"});
    CHECK(reg.code == 0);
    std::istringstream rin(reg.out);
    Graph g = read_edge_list(rin);
    for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);

    CHECK(run({"gen", "--model", "regular", "--n", "5", "--r", "3"}).code == 2);
    CHECK(run({"gen", "--model", "gnp", "--n", "5"}).code == 2);
    CHECK(run({"gen", "--model", "gnp", "--n", "5", "--p", "1.5"}).code == 2);
}

TEST_CASE("bad flags exit 2 with usage") {
    Run r = run({"gen", "--model", "gnp", "--n", "5", "--p", "0.5", "--bogus", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"cfc"}).code == 2);
    CHECK(run({"experiment", "--mode", "nope", "--n", "10", "--param", "1"}).code == 2);
    CHECK(run({"cfc", "/nonexistent/graph.txt"}).code == 2);
}

TEST_CASE("gen then analyze preserves the graph") {
    TempDir dir;
    REQUIRE(run({"gen", "--model", "gnp", "--n", "60", "--p", "0.1", "--seed", "4", "--out", dir.file("g.txt")}).code == 0);
    const Graph g = gen_gnp(60, 0.1, 4);
    Run r = run({"analyze", dir.file("g.txt"), "--trials", "20"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 60);
    CHECK(j["m"] == g.edge_count());
    std::vector<int> degrees;
    for (Vertex v = 0; v < 60; ++v) degrees.push_back(g.degree(v));
    CHECK(j["degrees"].get<std::vector<int>>() == degrees);
    CHECK(j.contains("bridges"));
    CHECK(j.contains("partition"));
    CHECK(j["checks"].is_array());

    save_graph(dir.file("p4.txt"), make_path(4));
    auto p4 = nlohmann::json::parse(run({"analyze", dir.file("p4.txt")}).out);
    CHECK(p4["bridges"].size() == 3);
    CHECK(p4["articulation_points"] == nlohmann::json::array({1, 2}));
    CHECK(p4["cjv_condition"] == false);
    CHECK(p4["two_edge_connected"] == false);
}

TEST_CASE("color output passes check") {
    TempDir dir;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = gen_gnp(40, 0.15, seed);
        save_graph(dir.file("g.txt"), g);
        Run c = run({"color", dir.file("g.txt"), "--seed", std::to_string(seed), "--out", dir.file("g.col"),
                     "--cert", dir.file("g.cert")});
        if (c.code == 2) continue;  // disconnected sample
        if (c.code == 3) continue;  // construction gave up
        CHECK(c.code == 0);
        Run k = run({"check", dir.file("g.txt"), "--coloring", dir.file("g.col")});
        CHECK(k.code == 0);
        CHECK(nlohmann::json::parse(slurp(dir.file("g.cert")))["status"] == "certified");
    }
    save_graph(dir.file("k5.txt"), make_complete(5));
    Run k5 = run({"color", dir.file("k5.txt")});
    CHECK(k5.code == 0);
    CHECK(k5.out.rfind("10 1\n", 0) == 0);
}

TEST_CASE("ham reports cycles and refutations") {
    TempDir dir;
    save_graph(dir.file("c6.txt"), make_cycle(6));
    Run r = run({"ham", dir.file("c6.txt"), "--seed", "3"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    int count = 0;
    for (int v; in >> v;) ++count;
    CHECK(count == 6);

    save_graph(dir.file("p5.txt"), make_path(5));
    Run p = run({"ham", dir.file("p5.txt")});
    CHECK(p.code == 1);
    CHECK(p.out == "NOT FOUND (exact)\n");
}

TEST_CASE("experiment writes csv and summary") {
    TempDir dir;
    Run r = run({"experiment", "--mode", "offset", "--n", "100", "--param", "1", "--trials", "10", "--seed", "5",
                 "--out", dir.file("e.csv"), "--summary", dir.file("e.json"), "--jobs", "2"});
    CHECK(r.code == 0);
    const std::string csv = slurp(dir.file("e.csv"));
    CHECK(csv.rfind("trial,seed,n,p,connected,method,bound,certified\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
    auto j = nlohmann::json::parse(slurp(dir.file("e.json")));
    CHECK(j["aggregates"]["trials"] == 10);
    CHECK(j["spec"]["mode"] == "offset");
}
