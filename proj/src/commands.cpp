#include "nodeorder/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nodeorder/dynamics.hpp"
#include "nodeorder/oracle.hpp"
#include "nodeorder/preorder.hpp"
#include "nodeorder/refinement.hpp"
#include "nodeorder/rng.hpp"

namespace nodeorder {

namespace {

namespace fs = std::filesystem;

void write_text(const RunConfig& cfg, const std::string& name, const std::string& content) {
    fs::create_directories(cfg.out_dir);
    const fs::path path = fs::path(cfg.out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string pretty(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::vector<double> resolve_y0(const RunConfig& cfg, int n) {
    if (cfg.random_y0) {
        Rng rng(cfg.seed);
        std::vector<double> y0(n);
        for (auto& v : y0) v = rng.uniform01();
        return y0;
    }
    if (cfg.y0.empty())
        throw std::invalid_argument("no initial state: pass --y0 VALUE[,VALUE...] or --random-y0");
    std::vector<double> values;
    std::istringstream in(cfg.y0);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --y0 entry '" + item + "'");
        }
    }
    if (values.size() == 1) return std::vector<double>(n, values[0]);
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("--y0 lists " + std::to_string(values.size()) +
                                    " values for " + std::to_string(n) + " nodes");
    return values;
}

LogisticParams params_of(const RunConfig& cfg) {
    LogisticParams p;
    p.gamma = cfg.gamma;
    p.horizon = cfg.horizon;
    p.dt = cfg.dt;
    return p;
}

std::string sizes_text(const std::vector<int>& sizes) {
    std::string out = "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sizes[i]);
    }
    return out + "]";
}

std::uint64_t sub_seed(std::uint64_t base, std::uint64_t idx) {
    return base * 1000003ull + idx;
}

}  // namespace

Graph load_graph(const RunConfig& cfg) {
    if (!cfg.graph_file.empty() && !cfg.generate_spec.empty())
        throw std::invalid_argument("pass either --graph or --generate, not both");
    if (!cfg.graph_file.empty()) {
        std::ifstream in(cfg.graph_file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read graph file " + cfg.graph_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_edge_list(buffer.str());
    }
    if (!cfg.generate_spec.empty()) return parse_generator_spec(cfg.generate_spec);
    throw std::invalid_argument("no graph: pass --graph FILE or --generate SPEC");
}

int cmd_cep(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const Partition p = color_refinement(g);
    write_text(cfg, "partition.json", pretty(nlohmann::json(p)));
    std::cout << "cep n=" << g.n() << " K=" << p.K << " sizes=" << sizes_text([&] {
        std::vector<int> s;
        for (const auto& cls : p.classes) s.push_back(static_cast<int>(cls.size()));
        return s;
    }()) << "\n";
    return 0;
}

int cmd_preorder(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const PreorderRelation r = max_inductive_preorder(g);
    const Partition classes = equivalence_classes(r);
    const Condensation cond = condensation(r, classes);
    write_text(cfg, "relation.json", pretty(nlohmann::json(r)));
    write_text(cfg, "partition.json", pretty(nlohmann::json(classes)));
    write_text(cfg, "condensation.dot", condensation_to_dot(cond, classes));
    std::cout << "preorder n=" << g.n() << " classes=" << classes.K
              << " pairs=" << r.related_pairs().size() << " iterations=" << r.iterations
              << "\n";
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const PreorderRelation r = max_inductive_preorder(g);
    const auto y0 = resolve_y0(cfg, g.n());

    if (cfg.require_consistent) {
        const auto bad = order_violating_pairs(r, y0);
        if (!bad.empty()) {
            std::cout << "simulate: initial state violates the dominance order on "
                      << bad.size() << " pair(s):";
            for (std::size_t k = 0; k < bad.size() && k < 8; ++k)
                std::cout << " (" << bad[k].first << " over " << bad[k].second << ")";
            if (bad.size() > 8) std::cout << " ...";
            std::cout << "\n";
            return 1;
        }
    }

    Trajectory traj;
    if (cfg.h > 0.0) {
        const std::size_t steps =
            static_cast<std::size_t>(cfg.horizon / cfg.h + 1e-9);
        traj.times.push_back(0.0);
        traj.states.push_back(y0);
        auto y = y0;
        for (std::size_t s = 0; s < steps; ++s) {
            y = discrete_step(g, cfg.gamma, cfg.h, y);
            traj.times.push_back(static_cast<double>(s + 1) * cfg.h);
            traj.states.push_back(y);
        }
    } else {
        traj = integrate_rk4(logistic_rhs(g, cfg.gamma), y0, params_of(cfg));
    }

    write_text(cfg, "trajectory.csv", trajectory_to_csv(traj));
    const MonitorReport report = order_monitor(traj, r, cfg.tol);
    write_text(cfg, "violations.json", pretty(violations_to_json(report)));
    std::cout << "simulate n=" << g.n() << " steps=" << traj.times.size() - 1
              << (cfg.h > 0.0 ? " mode=discrete" : " mode=rk4")
              << " violations=" << report.violations.size() << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_quotient(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const Partition p = color_refinement(g);
    const QuotientMatrix q = quotient_matrix(g, p);
    write_text(cfg, "partition.json", pretty(nlohmann::json(p)));
    write_text(cfg, "quotient.json", pretty(nlohmann::json(q)));
    std::cout << "quotient n=" << g.n() << " K=" << q.K << " sizes=" << sizes_text(q.sizes)
              << "\n";
    return 0;
}

int cmd_bound(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const Partition p = color_refinement(g);
    const auto y0 = resolve_y0(cfg, g.n());
    const BoundRun run = bound_run(g, params_of(cfg), y0, p);

    write_text(cfg, "trajectory.csv", trajectory_to_csv(run.full));
    write_text(cfg, "lower.csv", trajectory_to_csv(run.lower));
    write_text(cfg, "upper.csv", trajectory_to_csv(run.upper));

    double worst = 0.0;
    for (std::size_t row = 0; row < run.full.times.size(); ++row)
        for (std::size_t i = 0; i < run.full.states[row].size(); ++i) {
            worst = std::max(worst, run.lower.states[row][i] - run.full.states[row][i]);
            worst = std::max(worst, run.full.states[row][i] - run.upper.states[row][i]);
        }
    const bool ok = worst <= cfg.tol;
    std::cout << "bound n=" << g.n() << " K=" << p.K << " worst_excess=" << worst
              << (ok ? " ok" : " VIOLATED") << "\n";
    return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    std::ostringstream report;
    bool all_ok = true;

    auto emit = [&](const std::string& name, int count, const std::string& unit, bool ok) {
        std::ostringstream line;
        line << name;
        for (std::size_t pad = name.size(); pad < 34; ++pad) line << ' ';
        line << count << ' ' << unit << (ok ? "  PASS" : "  FAIL");
        report << line.str() << "\n";
        std::cout << line.str() << "\n";
        all_ok = all_ok && ok;
    };

    // Production preorder classes against the refinement partition.
    {
        std::vector<Graph> suite;
        for (int k = 0; k < cfg.verify_graphs; ++k)
            suite.push_back(generate("erdos_renyi", {2 + k % 15, k % 2 ? 50 : 20},
                                     sub_seed(cfg.seed, k)));
        suite.push_back(generate("frucht", {}));
        suite.push_back(generate("path", {8}));
        suite.push_back(generate("cycle", {9}));
        suite.push_back(generate("star", {7}));
        suite.push_back(generate("complete", {6}));
        suite.push_back(generate("complete_bipartite", {3, 4}));
        suite.push_back(generate("disjoint_union_cliques", {3, 2}));
        suite.push_back(generate("random_regular", {12, 3}, sub_seed(cfg.seed, 900)));
        suite.push_back(generate("random_tree", {8}, sub_seed(cfg.seed, 901)));
        bool ok = true;
        for (const Graph& g : suite)
            ok = ok && equivalence_classes(max_inductive_preorder(g)) == color_refinement(g);
        emit("preorder-classes-vs-cep", static_cast<int>(suite.size()), "graphs", ok);
    }

    // Automorphism orbits against refinement on trees.
    {
        bool ok = true;
        for (int k = 0; k < cfg.verify_trees; ++k) {
            const Graph g = generate("random_tree", {2 + k % 7}, sub_seed(cfg.seed, 100 + k));
            ok = ok && automorphism_orbits(g) == color_refinement(g);
        }
        emit("orbits-vs-cep-trees", cfg.verify_trees, "trees", ok);
    }

    // Every computed dominance must be witnessed by finite-depth maps.
    {
        std::vector<Graph> suite;
        for (int k = 0; k < cfg.verify_oracle_graphs; ++k)
            suite.push_back(generate("erdos_renyi", {3 + k % 4, k % 2 ? 50 : 30},
                                     sub_seed(cfg.seed, 200 + k)));
        suite.push_back(generate("path", {5}));
        suite.push_back(generate("cycle", {5}));
        suite.push_back(generate("star", {5}));
        suite.push_back(generate("complete", {5}));
        suite.push_back(generate("complete_bipartite", {2, 3}));
        suite.push_back(generate("disjoint_union_cliques", {3, 2}));
        bool ok = true;
        for (const Graph& g : suite) {
            const PreorderRelation r = max_inductive_preorder(g);
            for (int i = 0; i < g.n() && ok; ++i)
                for (int j = 0; j < g.n() && ok; ++j) {
                    if (!r.at(i, j)) continue;
                    for (int len = 1; len <= 3; ++len)
                        if (!adapted_dominating_map_exists(g, j, i, len)) {
                            ok = false;
                            break;
                        }
                }
        }
        emit("adapted-map-soundness", static_cast<int>(suite.size()), "graphs", ok);
    }

    write_text(cfg, "verify_report.txt", report.str());
    return all_ok ? 0 : 1;
}

}  // namespace nodeorder
