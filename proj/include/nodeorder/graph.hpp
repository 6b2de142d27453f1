#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace nodeorder {

// Undirected simple graph on nodes 0..n-1. Adjacency lists are sorted
// ascending, carry no duplicates and no self-loops, and are symmetric;
// the constructor establishes all of that and the object never changes
// afterwards. Nodes that appear in no edge are simply isolated.
class Graph {
public:
    Graph() = default;

    // Builds the graph from undirected edges. Each pair may appear in either
    // orientation and repeatedly; duplicates collapse. Throws
    // std::invalid_argument on self-loops or endpoints outside [0, n).
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int i) const { return adjacency_.at(i); }
    int degree(int i) const { return static_cast<int>(adjacency_.at(i).size()); }
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adjacency_;
};

// Error for malformed edge-list text; `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_number)
        : std::runtime_error(what), line(line_number) {}
    int line;
};

// Parses edge-list text: one "u v" pair per line, blank lines and lines
// starting with '#' ignored. Node count is max index + 1, so index gaps
// produce isolated nodes. Throws ParseError for malformed lines and
// std::invalid_argument for self-loops.
Graph parse_edge_list(const std::string& text);

// Inverse of parse_edge_list for graphs whose last node is not isolated
// (edge-list text cannot express trailing isolated nodes; use JSON for
// a total round trip).
std::string to_edge_list(const Graph& g);

// JSON form {"n": n, "edges": [[u, v], ...]} with u < v, sorted.
void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);

std::vector<int> degree_vector(const Graph& g);

// Named graph families. `params` are family-specific integers:
//   path:n  cycle:n  star:n  complete:n        (n = node count; star hub is node 0)
//   complete_bipartite:a,b                     (sides 0..a-1 and a..a+b-1)
//   frucht                                     (fixed 12-node cubic graph)
//   disjoint_union_cliques:s1,...,sk           (clique sizes, laid out consecutively)
//   random_regular:n,d      (seed required)
//   erdos_renyi:n,p         (seed required; p is an edge percentage, 0..100)
//   random_tree:n           (seed required)
// Deterministic: the same (name, params, seed) always yields the same graph.
// Throws std::invalid_argument for unknown names, bad parameters, or a
// missing seed on the random families.
Graph generate(const std::string& name, const std::vector<long long>& params,
               std::optional<std::uint64_t> seed = std::nullopt);

// Parses the compact "name", "name:p1,p2", or "name:p1,p2:seed" form used
// on the command line and calls generate().
Graph parse_generator_spec(const std::string& spec);

}  // namespace nodeorder
