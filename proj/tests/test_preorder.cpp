#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "nodeorder/graph.hpp"
#include "nodeorder/preorder.hpp"
#include "nodeorder/refinement.hpp"

using namespace nodeorder;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// All injections sources -> targets by trying every target permutation;
// reference for the augmenting-path matcher, usable up to ~6 targets.
bool injection_by_brute_force(const std::vector<int>& sources, const std::vector<int>& targets,
                              const std::set<std::pair<int, int>>& dominates) {
    if (sources.empty()) return true;
    if (sources.size() > targets.size()) return false;
    std::vector<int> perm(targets.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t k = 0; k < sources.size() && ok; ++k)
            ok = dominates.count({targets[perm[k]], sources[k]}) > 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("two connected nodes are equivalent") {
    PreorderRelation r = max_inductive_preorder(generate("complete", {2}));
    CHECK(r.at(0, 1));
    CHECK(r.at(1, 0));
    CHECK(equivalence_classes(r).K == 1);
}

TEST_CASE("three-node path: ends equivalent, center incomparable") {
    // Center-over-end fails: the end's one neighbor is the center itself and
    // nothing of degree 2 is adjacent to an end. End-over-center fails on
    // neighborhood size. What survives is the end swap.
    PreorderRelation r = max_inductive_preorder(generate("path", {3}));
    CHECK(r.related_pairs() == Pairs{{0, 2}, {2, 0}});
    Partition classes = equivalence_classes(r);
    CHECK(classes.classes == std::vector<std::vector<int>>{{0, 2}, {1}});
    CHECK(condensation(r, classes).edges.empty());
}

TEST_CASE("triangle plus separate edge: the clique dominates") {
    Graph g = generate("disjoint_union_cliques", {3, 2});
    PreorderRelation r = max_inductive_preorder(g);

    for (int i : {0, 1, 2})
        for (int j : {3, 4}) {
            CHECK(r.at(i, j));
            CHECK_FALSE(r.at(j, i));
        }
    for (int i : {0, 1, 2})
        for (int j : {0, 1, 2}) CHECK(r.at(i, j));
    CHECK(r.at(3, 4));
    CHECK(r.at(4, 3));

    Partition classes = equivalence_classes(r);
    CHECK(classes.classes == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
    CHECK(condensation(r, classes).edges == Pairs{{0, 1}});
}

TEST_CASE("four-node path keeps the full degree-dominance relation") {
    // Hand fixed point: middles dominate everything (an end's sole neighbor is
    // a middle, and a middle neighbor pattern of a middle maps to (other
    // middle, end)); ends dominate ends. Nothing gets removed.
    PreorderRelation r = max_inductive_preorder(generate("path", {4}));
    Pairs expected = {{0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 3}, {3, 0}};
    CHECK(r.related_pairs() == expected);

    Partition classes = equivalence_classes(r);
    CHECK(classes.classes == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
    // Middles strictly dominate ends: one condensation edge from class {1,2}.
    CHECK(condensation(r, classes).edges == Pairs{{1, 0}});
}

TEST_CASE("star: hub and leaves incomparable despite degree") {
    // Hub over leaf needs a hub-dominating node adjacent to the hub, but the
    // hub's neighbors are all leaves. Degree dominance alone is not enough.
    PreorderRelation r = max_inductive_preorder(generate("star", {4}));
    CHECK_FALSE(r.at(0, 1));
    CHECK_FALSE(r.at(1, 0));
    CHECK(r.at(1, 2));
    CHECK(r.at(3, 1));
    Partition classes = equivalence_classes(r);
    CHECK(classes.classes == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
    CHECK(condensation(r, classes).edges.empty());
}

TEST_CASE("regular graph relates every pair") {
    PreorderRelation r = max_inductive_preorder(generate("frucht", {}));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) CHECK(r.at(i, j));
    CHECK(equivalence_classes(r).K == 1);
}

TEST_CASE("clique chain condenses to a reduced path") {
    Graph g = generate("disjoint_union_cliques", {4, 3, 2});
    PreorderRelation r = max_inductive_preorder(g);
    Partition classes = equivalence_classes(r);
    CHECK(classes.K == 3);
    // K4 dominates K2 through K3; the direct edge is transitively redundant.
    CHECK(condensation(r, classes).edges == Pairs{{0, 1}, {1, 2}});
}

TEST_CASE("injective cover") {
    std::set<std::pair<int, int>> dom;  // (target, source): target dominates source

    SUBCASE("single compatible pair") {
        dom = {{10, 1}};
        CHECK(injective_cover_exists({1}, {10}, [&](int a, int b) { return dom.count({a, b}) > 0; }));
    }
    SUBCASE("pigeonhole") {
        CHECK_FALSE(injective_cover_exists({1, 2}, {10},
                                           [](int, int) { return true; }));
    }
    SUBCASE("two sources competing for one target") {
        dom = {{10, 1}, {10, 2}};
        CHECK_FALSE(injective_cover_exists({1, 2}, {10, 11},
                                           [&](int a, int b) { return dom.count({a, b}) > 0; }));
    }
    SUBCASE("crossing assignment found") {
        // 1 fits only 11, 2 fits both: the greedy 2->11 start must be undone.
        dom = {{11, 1}, {10, 2}, {11, 2}};
        CHECK(injective_cover_exists({1, 2}, {10, 11},
                                     [&](int a, int b) { return dom.count({a, b}) > 0; }));
    }
    SUBCASE("empty source set is covered") {
        CHECK(injective_cover_exists({}, {}, [](int, int) { return false; }));
    }
}

TEST_CASE("matcher agrees with brute force on random relations") {
    std::uint64_t state = 12345;
    auto next_bit = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 62) & 1;
    };
    for (int trial = 0; trial < 300; ++trial) {
        int ns = 1 + trial % 4;
        int nt = 1 + (trial / 4) % 5;
        std::vector<int> sources(ns), targets(nt);
        std::iota(sources.begin(), sources.end(), 0);
        std::iota(targets.begin(), targets.end(), 100);
        std::set<std::pair<int, int>> dom;
        for (int t : targets)
            for (int s : sources)
                if (next_bit()) dom.insert({t, s});
        auto relates = [&dom](int a, int b) { return dom.count({a, b}) > 0; };
        CAPTURE(trial);
        REQUIRE(injective_cover_exists(sources, targets, relates) ==
                injection_by_brute_force(sources, targets, dom));
    }
}

TEST_CASE("worklist and full-rescan fixed points agree") {
    auto check = [](const Graph& g) {
        PreorderRelation fast = max_inductive_preorder(g);
        PreorderRelation slow = max_inductive_preorder_naive(g);
        REQUIRE(fast.n == slow.n);
        REQUIRE(fast.rel == slow.rel);
    };
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        CAPTURE(seed);
        check(generate("erdos_renyi", {10, 30}, seed));
        check(generate("erdos_renyi", {8, 60}, seed));
        check(generate("random_tree", {9}, seed));
    }
    check(generate("star", {6}));
    check(generate("complete_bipartite", {2, 4}));
}

TEST_CASE("fixed point satisfies the preorder axioms") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate("erdos_renyi", {12, 40}, seed);
        PreorderRelation r = max_inductive_preorder(g);
        CAPTURE(seed);
        REQUIRE(r.is_reflexive());
        REQUIRE(r.is_transitive());
        REQUIRE(r.degree_consistent(g));
        REQUIRE(r.iterations <= g.n() * g.n());
    }
}

TEST_CASE("equivalence classes match the equitable refinement") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate("erdos_renyi", {11, 35}, seed);
        CAPTURE(seed);
        REQUIRE(equivalence_classes(max_inductive_preorder(g)) == color_refinement(g));
    }
}

TEST_CASE("equivalence_classes validates its input") {
    PreorderRelation not_reflexive;
    not_reflexive.n = 2;
    not_reflexive.rel = {1, 0, 0, 0};
    CHECK_THROWS_AS(equivalence_classes(not_reflexive), std::invalid_argument);

    PreorderRelation not_transitive;
    not_transitive.n = 3;
    not_transitive.rel.assign(9, 0);
    for (int i = 0; i < 3; ++i) not_transitive.set(i, i, true);
    not_transitive.set(0, 1, true);
    not_transitive.set(1, 2, true);
    CHECK_THROWS_AS(equivalence_classes(not_transitive), std::invalid_argument);
}

TEST_CASE("relation json lists off-diagonal pairs") {
    nlohmann::json j = max_inductive_preorder(generate("path", {3}));
    CHECK(j["n"] == 3);
    CHECK(j["pairs"] == nlohmann::json::parse("[[0,2],[2,0]]"));
}

TEST_CASE("condensation renders to dot") {
    PreorderRelation r = max_inductive_preorder(generate("disjoint_union_cliques", {3, 2}));
    Partition classes = equivalence_classes(r);
    std::string dot = condensation_to_dot(condensation(r, classes), classes);
    CHECK(dot ==
          "digraph condensation {\n"
          "  c0 [label=\"{0,1,2}\"];\n"
          "  c1 [label=\"{3,4}\"];\n"
          "  c0 -> c1;\n"
          "}\n");
}
