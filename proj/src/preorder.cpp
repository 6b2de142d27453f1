#include "nodeorder/preorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodeorder {

bool PreorderRelation::is_reflexive() const {
    for (int i = 0; i < n; ++i)
        if (!at(i, i)) return false;
    return true;
}

bool PreorderRelation::is_transitive() const {
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (!at(i, k)) continue;
            for (int j = 0; j < n; ++j)
                if (at(k, j) && !at(i, j)) return false;
        }
    return true;
}

bool PreorderRelation::degree_consistent(const Graph& g) const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) && g.degree(i) < g.degree(j)) return false;
    return true;
}

std::vector<std::pair<int, int>> PreorderRelation::related_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && at(i, j)) pairs.emplace_back(i, j);
    return pairs;
}

void to_json(nlohmann::json& j, const PreorderRelation& r) {
    j = nlohmann::json{{"n", r.n}, {"pairs", nlohmann::json::array()}};
    for (const auto& [a, b] : r.related_pairs()) j["pairs"].push_back({a, b});
}

namespace {

PreorderRelation degree_dominance_start(const Graph& g) {
    PreorderRelation r;
    r.n = g.n();
    r.rel.assign(static_cast<std::size_t>(r.n) * r.n, 0);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (g.degree(i) >= g.degree(j)) r.set(i, j, true);
    return r;
}

bool pair_feasible(const Graph& g, const PreorderRelation& r, int i, int j) {
    return injective_cover_exists(g.neighbors(j), g.neighbors(i),
                                  [&r](int a, int b) { return r.at(a, b); });
}

}  // namespace

PreorderRelation max_inductive_preorder(const Graph& g) {
    PreorderRelation r = degree_dominance_start(g);
    const int n = r.n;

    std::vector<std::pair<int, int>> dirty;
    std::vector<std::uint8_t> queued(static_cast<std::size_t>(n) * n, 0);
    auto enqueue = [&](int i, int j) {
        auto& flag = queued[static_cast<std::size_t>(i) * n + j];
        if (!flag && r.at(i, j)) {
            flag = 1;
            dirty.emplace_back(i, j);
        }
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) enqueue(i, j);

    std::vector<std::pair<int, int>> removals;
    while (!dirty.empty()) {
        ++r.iterations;
        removals.clear();
        for (const auto& [i, j] : dirty) {
            queued[static_cast<std::size_t>(i) * n + j] = 0;
            if (!pair_feasible(g, r, i, j)) removals.emplace_back(i, j);
        }
        dirty.clear();
        if (removals.empty()) break;
        for (const auto& [i, j] : removals) r.set(i, j, false);
        for (const auto& [u, v] : removals)
            for (int i : g.neighbors(u))
                for (int j : g.neighbors(v)) enqueue(i, j);
    }
    return r;
}

PreorderRelation max_inductive_preorder_naive(const Graph& g) {
    PreorderRelation r = degree_dominance_start(g);
    const int n = r.n;
    std::vector<std::pair<int, int>> removals;
    while (true) {
        ++r.iterations;
        removals.clear();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r.at(i, j) && !pair_feasible(g, r, i, j)) removals.emplace_back(i, j);
        if (removals.empty()) break;
        for (const auto& [i, j] : removals) r.set(i, j, false);
    }
    return r;
}

Partition equivalence_classes(const PreorderRelation& r) {
    if (!r.is_reflexive())
        throw std::invalid_argument("equivalence_classes: relation is not reflexive");
    if (!r.is_transitive())
        throw std::invalid_argument("equivalence_classes: relation is not transitive");
    std::vector<int> label(r.n);
    for (int i = 0; i < r.n; ++i) {
        label[i] = i;
        for (int j = 0; j < i; ++j)
            if (r.at(i, j) && r.at(j, i)) {
                label[i] = label[j];
                break;
            }
    }
    return Partition::from_class_of(label);
}

Condensation condensation(const PreorderRelation& r, const Partition& classes) {
    const int k = classes.K;
    std::vector<std::vector<char>> dom(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && r.at(classes.classes[a][0], classes.classes[b][0])) dom[a][b] = 1;
    Condensation c;
    c.K = k;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (!dom[a][b]) continue;
            bool shortcut = false;  // drop the edge if a two-step route exists
            for (int mid = 0; mid < k && !shortcut; ++mid)
                shortcut = mid != a && mid != b && dom[a][mid] && dom[mid][b];
            if (!shortcut) c.edges.emplace_back(a, b);
        }
    return c;
}

Condensation condensation(const PreorderRelation& r) {
    return condensation(r, equivalence_classes(r));
}

std::string condensation_to_dot(const Condensation& c, const Partition& classes) {
    std::string out = "digraph condensation {\n";
    for (int a = 0; a < c.K; ++a) {
        out += "  c" + std::to_string(a) + " [label=\"{";
        const auto& members = classes.classes[a];
        for (std::size_t m = 0; m < members.size(); ++m) {
            if (m) out += ',';
            out += std::to_string(members[m]);
        }
        out += "}\"];\n";
    }
    for (const auto& [a, b] : c.edges)
        out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace nodeorder
