#include "nodeorder/refinement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace nodeorder {

Partition Partition::from_class_of(const std::vector<int>& raw) {
    Partition p;
    const int n = static_cast<int>(raw.size());
    p.class_of.assign(n, -1);
    std::map<int, int> relabel;  // old label -> new id, in order of first (= minimum) member
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = relabel.try_emplace(raw[i], static_cast<int>(relabel.size()));
        if (inserted) p.classes.emplace_back();
        p.class_of[i] = it->second;
        p.classes[it->second].push_back(i);
    }
    p.K = static_cast<int>(relabel.size());
    return p;
}

Partition Partition::singletons(int n) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    return from_class_of(ids);
}

Partition Partition::single_class(int n) {
    return from_class_of(std::vector<int>(n, 0));
}

void to_json(nlohmann::json& j, const Partition& p) {
    j = nlohmann::json{{"K", p.K}, {"class_of", p.class_of}};
}

void from_json(const nlohmann::json& j, Partition& p) {
    auto raw = j.at("class_of").get<std::vector<int>>();
    p = Partition::from_class_of(raw);
    if (j.at("K").get<int>() != p.K)
        throw std::invalid_argument("partition json: K does not match class_of");
}

bool partition_refines(const Partition& fine, const Partition& coarse) {
    if (fine.size() != coarse.size())
        throw std::invalid_argument("partition_refines: node counts differ");
    for (const auto& cls : fine.classes) {
        for (int member : cls)
            if (coarse.class_of[member] != coarse.class_of[cls[0]]) return false;
    }
    return true;
}

RefinementTrace color_refinement_trace(const Graph& g) {
    const int n = g.n();
    RefinementTrace trace;
    std::vector<int> color(n, 0);
    int k = 1;
    while (true) {
        // Signature of a node: its color plus the sorted colors of its neighbors.
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> around;
            around.reserve(g.neighbors(i).size());
            for (int v : g.neighbors(i)) around.push_back(color[v]);
            std::sort(around.begin(), around.end());
            auto [it, _] =
                ids.try_emplace({color[i], std::move(around)}, static_cast<int>(ids.size()));
            next[i] = it->second;
        }
        ++trace.passes;
        trace.class_counts.push_back(static_cast<int>(ids.size()));
        const int next_k = static_cast<int>(ids.size());
        color = std::move(next);
        if (next_k == k) break;  // no class split, fixed point reached
        k = next_k;
    }
    trace.partition = Partition::from_class_of(color);
    return trace;
}

Partition color_refinement(const Graph& g) {
    return color_refinement_trace(g).partition;
}

// ---- iterated degrees ----------------------------------------------------

struct IteratedDegree::Node {
    int depth = 0;
    int degree = 0;  // meaningful at depth 0 only
    std::vector<std::shared_ptr<const Node>> elems;  // canonically sorted, depth > 0
};

namespace {

// Per-depth equality classes of iterated degrees, with ids ordered by value:
// at depth 0 by degree, at depth k by lexicographic order of the sorted
// vectors of neighbor ids from depth k-1 (which is exactly the canonical
// order on the underlying multisets, by induction).
std::vector<std::vector<int>> degree_levels(const Graph& g, int depth) {
    const int n = g.n();
    std::vector<std::vector<int>> levels;
    levels.reserve(depth + 1);
    {
        std::vector<int> ids(n);
        std::map<int, int> by_degree;
        for (int i = 0; i < n; ++i) by_degree.emplace(g.degree(i), 0);
        int next = 0;
        for (auto& [deg, id] : by_degree) id = next++;
        for (int i = 0; i < n; ++i) ids[i] = by_degree[g.degree(i)];
        levels.push_back(std::move(ids));
    }
    for (int k = 1; k <= depth; ++k) {
        const auto& prev = levels.back();
        std::map<std::vector<int>, int> by_sig;
        std::vector<std::vector<int>> sigs(n);
        for (int i = 0; i < n; ++i) {
            auto& sig = sigs[i];
            sig.reserve(g.neighbors(i).size());
            for (int v : g.neighbors(i)) sig.push_back(prev[v]);
            std::sort(sig.begin(), sig.end());
            by_sig.emplace(sig, 0);
        }
        int next = 0;
        for (auto& [sig, id] : by_sig) id = next++;
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = by_sig[sigs[i]];
        levels.push_back(std::move(ids));
    }
    return levels;
}

}  // namespace

IteratedDegree iterated_degree(const Graph& g, int node, int depth) {
    if (node < 0 || node >= g.n())
        throw std::invalid_argument("iterated_degree: node " + std::to_string(node) +
                                    " out of range [0, " + std::to_string(g.n()) + ")");
    if (depth < 0) throw std::invalid_argument("iterated_degree: negative depth");

    const auto levels = degree_levels(g, depth);
    using Node = IteratedDegree::Node;

    // One shared value node per (level, class id); children are the class
    // nodes of the neighbors one level down, sorted by id (= value order).
    std::vector<std::vector<std::shared_ptr<const Node>>> value_nodes(depth + 1);
    {
        std::map<int, std::shared_ptr<const Node>> leaves;
        for (int i = 0; i < g.n(); ++i) {
            auto& slot = leaves[levels[0][i]];
            if (!slot) slot = std::make_shared<Node>(Node{0, g.degree(i), {}});
        }
        value_nodes[0].resize(leaves.size());
        for (auto& [id, node_ptr] : leaves) value_nodes[0][id] = node_ptr;
    }
    for (int k = 1; k <= depth; ++k) {
        int classes_here = 0;
        for (int i = 0; i < g.n(); ++i) classes_here = std::max(classes_here, levels[k][i] + 1);
        value_nodes[k].resize(classes_here);
        for (int i = 0; i < g.n(); ++i) {
            auto& slot = value_nodes[k][levels[k][i]];
            if (slot) continue;
            std::vector<int> child_ids;
            child_ids.reserve(g.neighbors(i).size());
            for (int v : g.neighbors(i)) child_ids.push_back(levels[k - 1][v]);
            std::sort(child_ids.begin(), child_ids.end());
            auto built = std::make_shared<Node>();
            built->depth = k;
            built->elems.reserve(child_ids.size());
            for (int id : child_ids) built->elems.push_back(value_nodes[k - 1][id]);
            slot = std::move(built);
        }
    }
    return IteratedDegree(value_nodes[depth][levels[depth][node]]);
}

std::vector<int> iterated_degree_classes(const Graph& g, int depth) {
    if (depth < 0) throw std::invalid_argument("iterated_degree_classes: negative depth");
    return degree_levels(g, depth).back();
}

int IteratedDegree::depth() const { return root_->depth; }

namespace {

void render(const IteratedDegree::Node& node, std::string& out) {
    if (node.depth == 0) {
        out += std::to_string(node.degree);
        return;
    }
    out += '{';
    for (std::size_t i = 0; i < node.elems.size(); ++i) {
        if (i) out += ',';
        render(*node.elems[i], out);
    }
    out += '}';
}

using NodePair = std::pair<const IteratedDegree::Node*, const IteratedDegree::Node*>;

// Three-way canonical comparison, memoized on node pairs so shared structure
// is compared once. Values of smaller depth order first; multisets compare
// lexicographically over their sorted elements.
int compare(const IteratedDegree::Node* a, const IteratedDegree::Node* b,
            std::map<NodePair, int>& memo) {
    if (a == b) return 0;
    if (a->depth != b->depth) return a->depth < b->depth ? -1 : 1;
    if (a->depth == 0) return a->degree == b->degree ? 0 : (a->degree < b->degree ? -1 : 1);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    int result = 0;
    const std::size_t common = std::min(a->elems.size(), b->elems.size());
    for (std::size_t i = 0; i < common && result == 0; ++i)
        result = compare(a->elems[i].get(), b->elems[i].get(), memo);
    if (result == 0 && a->elems.size() != b->elems.size())
        result = a->elems.size() < b->elems.size() ? -1 : 1;
    memo.emplace(NodePair{a, b}, result);
    return result;
}

}  // namespace

std::string IteratedDegree::to_string() const {
    std::string out;
    render(*root_, out);
    return out;
}

bool operator==(const IteratedDegree& a, const IteratedDegree& b) {
    std::map<NodePair, int> memo;
    return compare(a.root_.get(), b.root_.get(), memo) == 0;
}

bool operator<(const IteratedDegree& a, const IteratedDegree& b) {
    std::map<NodePair, int> memo;
    return compare(a.root_.get(), b.root_.get(), memo) < 0;
}

// ---- equitability and quotient -------------------------------------------

namespace {

std::vector<int> class_counts(const Graph& g, const Partition& p, int node) {
    std::vector<int> counts(p.K, 0);
    for (int v : g.neighbors(node)) ++counts[p.class_of[v]];
    return counts;
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& p) {
    if (p.size() != g.n())
        throw std::invalid_argument("is_equitable: partition covers " +
                                    std::to_string(p.size()) + " nodes, graph has " +
                                    std::to_string(g.n()));
    for (const auto& cls : p.classes) {
        const auto expected = class_counts(g, p, cls[0]);
        for (std::size_t m = 1; m < cls.size(); ++m)
            if (class_counts(g, p, cls[m]) != expected) return false;
    }
    return true;
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    if (!is_equitable(g, p))
        throw std::invalid_argument("quotient_matrix: partition is not equitable");
    QuotientMatrix q;
    q.K = p.K;
    q.sizes.reserve(p.K);
    q.S.reserve(p.K);
    for (const auto& cls : p.classes) {
        q.sizes.push_back(static_cast<int>(cls.size()));
        q.S.push_back(class_counts(g, p, cls[0]));
    }
    return q;
}

void to_json(nlohmann::json& j, const QuotientMatrix& q) {
    j = nlohmann::json{{"K", q.K}, {"sizes", q.sizes}, {"S", q.S}};
}

}  // namespace nodeorder
