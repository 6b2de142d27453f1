#include "nodeorder/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nodeorder {

namespace {

void check_origin(const Graph& g, int origin, int length, const char* who) {
    if (origin < 0 || origin >= g.n())
        throw std::invalid_argument(std::string(who) + ": node " + std::to_string(origin) +
                                    " out of range [0, " + std::to_string(g.n()) + ")");
    if (length < 0)
        throw std::invalid_argument(std::string(who) + ": negative walk length");
}

}  // namespace

std::uint64_t walk_count(const Graph& g, int origin, int length, std::uint64_t bound) {
    check_origin(g, origin, length, "walk_count");
    const std::uint64_t cap = bound + 1;
    std::vector<std::uint64_t> count(g.n(), 0);
    count[origin] = 1;
    for (int step = 0; step < length; ++step) {
        std::vector<std::uint64_t> next(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            std::uint64_t total = 0;
            for (int u : g.neighbors(v)) {
                total += count[u];
                if (total >= cap) {
                    total = cap;
                    break;
                }
            }
            next[v] = total;
        }
        count = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : count) {
        total += c;
        if (total >= cap) return cap;
    }
    return total;
}

PathSet enumerate_paths(const Graph& g, int origin, int length, std::uint64_t bound) {
    check_origin(g, origin, length, "enumerate_paths");
    const std::uint64_t total = walk_count(g, origin, length, bound);
    if (total > bound)
        throw std::runtime_error("enumerate_paths: more than " + std::to_string(bound) +
                                 " walks of length " + std::to_string(length) + " from node " +
                                 std::to_string(origin));
    PathSet ps;
    ps.origin = origin;
    ps.length = length;
    ps.paths.reserve(total);
    std::vector<int> walk{origin};
    // Neighbor lists are sorted, so depth-first extension emits walks in
    // lexicographic order with no duplicates.
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(walk.size()) == length + 1) {
            ps.paths.push_back(walk);
            return;
        }
        for (int v : g.neighbors(walk.back())) {
            walk.push_back(v);
            self(self);
            walk.pop_back();
        }
    };
    extend(extend);
    return ps;
}

namespace {

// Level-by-level embedding of the walk tree of u into the walk tree of w,
// depth r remaining. A tree node stands for a walk prefix and is identified
// by its end node; its children are the one-step extensions, one per
// neighbor. The embedding must assign the children of each matched pair
// injectively (distinct parents map to distinct parents, so cross-family
// clashes cannot occur) and may only match x onto y when degree(y) >=
// degree(x). Plain backtracking, no memoization: this stays an independent
// check of the production fixed point rather than a restatement of it.
bool embed(const Graph& g, int u, int w, int r) {
    if (g.degree(w) < g.degree(u)) return false;
    if (r == 0) return true;
    const auto& sources = g.neighbors(u);
    const auto& targets = g.neighbors(w);

    // Feasibility of each child pair, evaluated once up front.
    std::vector<std::vector<char>> ok(sources.size(), std::vector<char>(targets.size()));
    for (std::size_t s = 0; s < sources.size(); ++s)
        for (std::size_t t = 0; t < targets.size(); ++t)
            ok[s][t] = embed(g, sources[s], targets[t], r - 1) ? 1 : 0;

    std::vector<char> used(targets.size(), 0);
    auto assign = [&](auto&& self, std::size_t s) -> bool {
        if (s == sources.size()) return true;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (used[t] || !ok[s][t]) continue;
            used[t] = 1;
            if (self(self, s + 1)) return true;
            used[t] = 0;
        }
        return false;
    };
    return assign(assign, 0);
}

}  // namespace

bool adapted_dominating_map_exists(const Graph& g, int j, int i, int length,
                                   std::uint64_t bound) {
    check_origin(g, j, length, "adapted_dominating_map_exists");
    check_origin(g, i, length, "adapted_dominating_map_exists");
    if (walk_count(g, j, length, bound) > bound || walk_count(g, i, length, bound) > bound)
        throw std::runtime_error(
            "adapted_dominating_map_exists: walk sets exceed enumeration bound");
    if (length >= 1 && g.degree(j) == 0) return true;  // no walks to map
    return embed(g, j, i, length);
}

Partition automorphism_orbits(const Graph& g) {
    const int n = g.n();
    if (n > 10)
        throw std::invalid_argument("automorphism_orbits: n = " + std::to_string(n) +
                                    " exceeds the factorial search bound of 10");
    if (n == 0) return Partition::from_class_of({});

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

    // Union-find over node identifications made by edge-preserving permutations.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = g.edges();
    do {
        bool automorphism = true;
        for (const auto& [u, v] : edges)
            if (!adj[perm[u]][perm[v]]) {
                automorphism = false;
                break;
            }
        if (automorphism)
            for (int x = 0; x < n; ++x) {
                int a = find(x), b = find(perm[x]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> label(n);
    for (int x = 0; x < n; ++x) label[x] = find(x);
    return Partition::from_class_of(label);
}

}  // namespace nodeorder
