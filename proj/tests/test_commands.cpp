#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "nodeorder/commands.hpp"
#include "json.hpp"

using namespace nodeorder;
namespace fs = std::filesystem;

namespace {

// Fresh output directory per test, removed on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("nodeorder_cmd_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str() const { return path.string(); }
    bool has(const std::string& name) const { return fs::exists(path / name); }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name, std::ios::binary);
        REQUIRE(in.good());
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    nlohmann::json json(const std::string& name) const {
        return nlohmann::json::parse(read(name));
    }
};

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("load_graph wants exactly one source") {
    RunConfig cfg;
    CHECK_THROWS_AS(load_graph(cfg), std::invalid_argument);

    cfg.graph_file = "some.txt";
    cfg.generate_spec = "cycle:4";
    CHECK_THROWS_AS(load_graph(cfg), std::invalid_argument);

    cfg.graph_file = "/nonexistent/graph.txt";
    cfg.generate_spec.clear();
    CHECK_THROWS_AS(load_graph(cfg), std::runtime_error);
}

TEST_CASE("load_graph reads edge-list files") {
    TempDir dir;
    {
        std::ofstream out(dir.path / "g.txt");
        out << "# tiny path\n0 1\n1 2\n2 3\n";
    }
    RunConfig cfg;
    cfg.graph_file = (dir.path / "g.txt").string();
    Graph g = load_graph(cfg);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("cep command writes the partition") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "frucht";
    cfg.out_dir = dir.str();
    CHECK(cmd_cep(cfg) == 0);
    auto j = dir.json("partition.json");
    CHECK(j["K"] == 1);
    CHECK(j["class_of"].size() == 12);

    cfg.generate_spec = "path:4";
    CHECK(cmd_cep(cfg) == 0);
    j = dir.json("partition.json");
    CHECK(j["K"] == 2);
    CHECK(j["class_of"] == nlohmann::json::parse("[0,1,1,0]"));
}

TEST_CASE("preorder command writes relation, classes and dot") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "disjoint_union_cliques:3,2";
    cfg.out_dir = dir.str();
    CHECK(cmd_preorder(cfg) == 0);

    auto rel = dir.json("relation.json");
    CHECK(rel["n"] == 5);
    CHECK(rel["pairs"].size() == 14);

    CHECK(dir.json("partition.json")["K"] == 2);

    std::string dot = dir.read("condensation.dot");
    CHECK(dot.find("c0 [label=\"{0,1,2}\"]") != std::string::npos);
    CHECK(dot.find("c0 -> c1;") != std::string::npos);
}

TEST_CASE("simulate command, continuous mode") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "cycle:4";
    cfg.out_dir = dir.str();
    cfg.y0 = "0.25";
    cfg.horizon = 1.0;
    CHECK(cmd_simulate(cfg) == 0);

    std::string csv = dir.read("trajectory.csv");
    CHECK(csv.rfind("t,y0,y1,y2,y3\n", 0) == 0);
    CHECK(count_lines(csv) == 1002);  // header + t=0 + 1000 steps
    CHECK(csv.find("\n0,0.25,0.25,0.25,0.25\n") != std::string::npos);
    CHECK(dir.json("violations.json") == nlohmann::json::array());
}

TEST_CASE("simulate command, discrete mode") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "cycle:4";
    cfg.out_dir = dir.str();
    cfg.y0 = "0.25";
    cfg.horizon = 1.0;
    cfg.h = 0.25;  // max valid step for this graph is 1/3
    CHECK(cmd_simulate(cfg) == 0);
    CHECK(count_lines(dir.read("trajectory.csv")) == 6);  // header + 5 rows
    CHECK(dir.json("violations.json").empty());
}

TEST_CASE("simulate rejects inconsistent starts when asked") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "path:3";
    cfg.out_dir = dir.str();
    cfg.y0 = "0.9,0.1,0.8";  // ends are equivalent but get different values
    cfg.require_consistent = true;
    CHECK(cmd_simulate(cfg) == 1);
    CHECK_FALSE(dir.has("trajectory.csv"));

    // Without the flag the run proceeds, and the monitor then reports the
    // violated order honestly through the exit status.
    cfg.require_consistent = false;
    CHECK(cmd_simulate(cfg) == 1);
    CHECK(dir.has("trajectory.csv"));
    CHECK_FALSE(dir.json("violations.json").empty());
}

TEST_CASE("simulate y0 validation") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "cycle:4";
    cfg.out_dir = dir.str();
    SUBCASE("no initial state") {
        CHECK_THROWS_AS(cmd_simulate(cfg), std::invalid_argument);
    }
    SUBCASE("wrong element count") {
        cfg.y0 = "0.1,0.2";
        CHECK_THROWS_AS(cmd_simulate(cfg), std::invalid_argument);
    }
    SUBCASE("unparsable entry") {
        cfg.y0 = "0.1,abc,0.3,0.4";
        CHECK_THROWS_AS(cmd_simulate(cfg), std::invalid_argument);
    }
}

TEST_CASE("simulate is deterministic given a seed") {
    RunConfig cfg;
    cfg.generate_spec = "erdos_renyi:8,50:7";
    cfg.random_y0 = true;
    cfg.seed = 99;
    cfg.horizon = 1.0;

    TempDir a, b;
    cfg.out_dir = a.str();
    int rc_a = cmd_simulate(cfg);
    cfg.out_dir = b.str();
    int rc_b = cmd_simulate(cfg);
    CHECK(rc_a == rc_b);
    CHECK(a.read("trajectory.csv") == b.read("trajectory.csv"));
    CHECK(a.read("violations.json") == b.read("violations.json"));
}

TEST_CASE("quotient command") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "path:4";
    cfg.out_dir = dir.str();
    CHECK(cmd_quotient(cfg) == 0);
    auto q = dir.json("quotient.json");
    CHECK(q["K"] == 2);
    CHECK(q["S"] == nlohmann::json::parse("[[0,1],[1,1]]"));
    CHECK(q["sizes"] == nlohmann::json::parse("[2,2]"));
    CHECK(dir.json("partition.json")["K"] == 2);
}

TEST_CASE("bound command writes the three trajectories") {
    TempDir dir;
    RunConfig cfg;
    cfg.generate_spec = "cycle:4";
    cfg.out_dir = dir.str();
    cfg.y0 = "0.125,0.25,0.125,0.25";  // exactly representable, so the CSV text is exact
    cfg.horizon = 2.0;
    CHECK(cmd_bound(cfg) == 0);
    CHECK(dir.has("trajectory.csv"));
    // The cycle has one class, so the bracket starts at min/max of y0.
    CHECK(dir.read("lower.csv").find("\n0,0.125,0.125,0.125,0.125\n") != std::string::npos);
    CHECK(dir.read("upper.csv").find("\n0,0.25,0.25,0.25,0.25\n") != std::string::npos);
}

TEST_CASE("verify command cross-checks the three routes") {
    TempDir dir;
    RunConfig cfg;
    cfg.out_dir = dir.str();
    cfg.seed = 5;
    cfg.verify_graphs = 10;
    cfg.verify_trees = 10;
    cfg.verify_oracle_graphs = 6;
    CHECK(cmd_verify(cfg) == 0);

    std::string report = dir.read("verify_report.txt");
    CHECK(count_lines(report) == 3);
    CHECK(report.find("preorder-classes-vs-cep") != std::string::npos);
    CHECK(report.find("orbits-vs-cep-trees") != std::string::npos);
    CHECK(report.find("adapted-map-soundness") != std::string::npos);
    CHECK(report.find("FAIL") == std::string::npos);
}
