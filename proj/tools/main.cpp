#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "nodeorder/commands.hpp"

namespace {

void add_graph_options(CLI::App* cmd, nodeorder::RunConfig& cfg) {
    cmd->add_option("--graph", cfg.graph_file, "Edge-list file (lines of 'u v', # comments)");
    cmd->add_option("--generate", cfg.generate_spec,
                    "Generator spec name[:params[:seed]], e.g. cycle:4 or random_regular:12,3:42");
    cmd->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
}

void add_dynamics_options(CLI::App* cmd, nodeorder::RunConfig& cfg) {
    cmd->add_option("--gamma", cfg.gamma, "Contact rate")->capture_default_str();
    cmd->add_option("--horizon", cfg.horizon, "Integration horizon")->capture_default_str();
    cmd->add_option("--dt", cfg.dt, "RK4 step")->capture_default_str();
    cmd->add_option("--tol", cfg.tol, "Order / bracketing tolerance")->capture_default_str();
    cmd->add_option("--y0", cfg.y0, "Initial state: one value for all nodes, or per-node list");
    cmd->add_flag("--random-y0", cfg.random_y0, "Draw the initial state uniformly from [0,1]^N");
    cmd->add_option("--seed", cfg.seed, "Seed for --random-y0")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Node dominance order, equitable refinement, and monotone dynamics on graphs"};
    app.require_subcommand(1);
    nodeorder::RunConfig cfg;

    auto* cep = app.add_subcommand("cep", "Coarsest equitable partition of the nodes");
    add_graph_options(cep, cfg);

    auto* preorder =
        app.add_subcommand("preorder", "Dominance preorder, its classes, and their DAG");
    add_graph_options(preorder, cfg);

    auto* simulate = app.add_subcommand("simulate", "Integrate the contact dynamics and "
                                                    "monitor the dominance order");
    simulate->set_help_flag("--help", "Print this help message and exit");  // frees --h
    add_graph_options(simulate, cfg);
    add_dynamics_options(simulate, cfg);
    simulate->add_option("--h", cfg.h, "Use the explicit map with this step instead of RK4");
    simulate->add_flag("--require-consistent", cfg.require_consistent,
                       "Refuse to run when y0 violates the dominance order");

    auto* quotient = app.add_subcommand("quotient", "Class-level system of the equitable "
                                                    "partition");
    add_graph_options(quotient, cfg);

    auto* bound = app.add_subcommand("bound", "Bracket the full run between lifted quotient "
                                              "runs");
    add_graph_options(bound, cfg);
    add_dynamics_options(bound, cfg);

    auto* verify = app.add_subcommand("verify", "Cross-check the fast algorithms against "
                                                "brute-force references");
    verify->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Batch seed")->capture_default_str();
    verify->add_option("--graphs", cfg.verify_graphs, "Random graphs for the class check")
        ->capture_default_str();
    verify->add_option("--trees", cfg.verify_trees, "Random trees for the orbit check")
        ->capture_default_str();
    verify->add_option("--oracle-graphs", cfg.verify_oracle_graphs,
                       "Random graphs for the map soundness check")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cep->parsed()) return nodeorder::cmd_cep(cfg);
        if (preorder->parsed()) return nodeorder::cmd_preorder(cfg);
        if (simulate->parsed()) return nodeorder::cmd_simulate(cfg);
        if (quotient->parsed()) return nodeorder::cmd_quotient(cfg);
        if (bound->parsed()) return nodeorder::cmd_bound(cfg);
        if (verify->parsed()) return nodeorder::cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
