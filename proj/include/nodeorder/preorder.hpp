#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nodeorder/graph.hpp"
#include "nodeorder/refinement.hpp"

namespace nodeorder {

// Binary relation over nodes 0..n-1; rel(i, j) means node i dominates node j.
// As produced by max_inductive_preorder it is reflexive, transitive, and only
// relates i above j when degree(i) >= degree(j).
struct PreorderRelation {
    int n = 0;
    std::vector<std::uint8_t> rel;  // row-major n*n
    int iterations = 0;             // fixed-point passes performed

    bool at(int i, int j) const { return rel[static_cast<std::size_t>(i) * n + j] != 0; }
    void set(int i, int j, bool value) {
        rel[static_cast<std::size_t>(i) * n + j] = value ? 1 : 0;
    }

    bool is_reflexive() const;
    bool is_transitive() const;
    bool degree_consistent(const Graph& g) const;

    // Pairs (i, j) with i != j and rel(i, j), ordered lexicographically.
    std::vector<std::pair<int, int>> related_pairs() const;
};

void to_json(nlohmann::json& j, const PreorderRelation& r);

// True iff the bipartite graph on sources x targets, with an edge from
// source k to target k2 exactly when relates(k2, k), has a matching that
// covers every source. relates(a, b) reads "a dominates b". Solved with
// layered augmenting paths (Hopcroft-Karp).
template <class Rel>
bool injective_cover_exists(const std::vector<int>& sources, const std::vector<int>& targets,
                            Rel&& relates) {
    const int ns = static_cast<int>(sources.size());
    const int nt = static_cast<int>(targets.size());
    if (ns == 0) return true;
    if (ns > nt) return false;

    std::vector<std::vector<int>> adj(ns);
    for (int s = 0; s < ns; ++s) {
        for (int t = 0; t < nt; ++t)
            if (relates(targets[t], sources[s])) adj[s].push_back(t);
        if (adj[s].empty()) return false;
    }

    constexpr int kInf = 1 << 30;
    std::vector<int> match_s(ns, -1), match_t(nt, -1), level(ns);
    int matched = 0;

    auto bfs = [&]() {
        std::queue<int> q;
        for (int s = 0; s < ns; ++s) {
            level[s] = match_s[s] == -1 ? 0 : kInf;
            if (level[s] == 0) q.push(s);
        }
        bool reachable = false;
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            for (int t : adj[s]) {
                int s2 = match_t[t];
                if (s2 == -1) {
                    reachable = true;
                } else if (level[s2] == kInf) {
                    level[s2] = level[s] + 1;
                    q.push(s2);
                }
            }
        }
        return reachable;
    };

    std::function<bool(int)> augment = [&](int s) {
        for (int t : adj[s]) {
            int s2 = match_t[t];
            if (s2 == -1 || (level[s2] == level[s] + 1 && augment(s2))) {
                match_s[s] = t;
                match_t[t] = s;
                return true;
            }
        }
        level[s] = kInf;
        return false;
    };

    while (bfs()) {
        for (int s = 0; s < ns; ++s)
            if (match_s[s] == -1 && augment(s)) ++matched;
        if (matched == ns) return true;
    }
    return matched == ns;
}

// Greatest relation R with R(i, j) implying an injective map f from the
// neighbors of j into the neighbors of i such that R(f(k), k) for all k.
// Computed by downward iteration from the degree-dominance relation
// (the first step of iterating from the all-pairs relation), removing
// pairs whose matching fails until stable. Checks within a pass all read
// the previous pass's relation. The worklist variant only rechecks pairs
// whose support may have changed: removing (u, v) can only break pairs
// (i, j) with u adjacent to i and v adjacent to j.
PreorderRelation max_inductive_preorder(const Graph& g);

// Full re-scan variant kept as a cross-check for the worklist scheduling.
PreorderRelation max_inductive_preorder_naive(const Graph& g);

// Classes of mutual domination, canonically ordered. Throws
// std::invalid_argument if r is not reflexive and transitive.
Partition equivalence_classes(const PreorderRelation& r);

// Strict domination between classes, transitively reduced.
struct Condensation {
    int K = 0;
    std::vector<std::pair<int, int>> edges;  // (c, c2): class c dominates class c2

    friend bool operator==(const Condensation&, const Condensation&) = default;
};
Condensation condensation(const PreorderRelation& r, const Partition& classes);
Condensation condensation(const PreorderRelation& r);

std::string condensation_to_dot(const Condensation& c, const Partition& classes);

}  // namespace nodeorder
