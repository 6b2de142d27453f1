#pragma once

#include <cstdint>
#include <string>

#include "nodeorder/graph.hpp"

namespace nodeorder {

// Options shared by the command-line entry points. Exactly one of
// graph_file / generate_spec selects the input graph.
struct RunConfig {
    std::string graph_file;
    std::string generate_spec;
    double gamma = 1.0;
    double horizon = 10.0;
    double dt = 1e-3;
    double h = 0.0;  // simulate: > 0 switches from RK4 to the explicit map with step h
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    double tol = 1e-8;
    bool require_consistent = false;
    std::string y0;         // "v" for uniform, or comma-separated per-node values
    bool random_y0 = false;  // seeded uniform draw from [0, 1]^N
    // verify batch sizes
    int verify_graphs = 100;
    int verify_trees = 50;
    int verify_oracle_graphs = 30;
};

Graph load_graph(const RunConfig& cfg);

// Each command writes its machine-readable outputs into cfg.out_dir, prints
// a one-line summary, and returns a process exit status (0 = everything
// checked out). Errors surface as exceptions for the caller to report.
int cmd_cep(const RunConfig& cfg);       // partition.json
int cmd_preorder(const RunConfig& cfg);  // relation.json, partition.json, condensation.dot
int cmd_simulate(const RunConfig& cfg);  // trajectory.csv, violations.json
int cmd_quotient(const RunConfig& cfg);  // partition.json, quotient.json
int cmd_bound(const RunConfig& cfg);     // trajectory.csv, lower.csv, upper.csv
int cmd_verify(const RunConfig& cfg);    // verify_report.txt

}  // namespace nodeorder
