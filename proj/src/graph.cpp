#include "nodeorder/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "nodeorder/rng.hpp"

namespace nodeorder {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative node count");
    n_ = n;
    adjacency_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint " +
                                        std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adjacency_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

int parse_node_token(const std::string& tok, int line) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0)
        throw ParseError("malformed node index '" + tok + "' at line " + std::to_string(line),
                         line);
    return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int max_node = -1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() != 2)
            throw ParseError("expected 'u v' at line " + std::to_string(line_no) + ", got " +
                                 std::to_string(tokens.size()) + " token(s)",
                             line_no);
        int u = parse_node_token(tokens[0], line_no);
        int v = parse_node_token(tokens[1], line_no);
        if (u == v)
            throw std::invalid_argument("self-loop '" + std::to_string(u) + " " +
                                        std::to_string(v) + "' at line " +
                                        std::to_string(line_no));
        edges.emplace_back(u, v);
        max_node = std::max({max_node, u, v});
    }
    return Graph(max_node + 1, edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

void to_json(nlohmann::json& j, const Graph& g) {
    j = nlohmann::json{{"n", g.n()}, {"edges", nlohmann::json::array()}};
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
}

void from_json(const nlohmann::json& j, Graph& g) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g = Graph(n, edges);
}

std::vector<int> degree_vector(const Graph& g) {
    std::vector<int> d(g.n());
    for (int i = 0; i < g.n(); ++i) d[i] = g.degree(i);
    return d;
}

namespace {

using Edges = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string& name, const std::string& msg) {
    if (!ok) throw std::invalid_argument("generate " + name + ": " + msg);
}

long long param_at(const std::vector<long long>& params, std::size_t idx,
                   const std::string& name) {
    require(idx < params.size(), name,
            "expected at least " + std::to_string(idx + 1) + " parameter(s)");
    return params[idx];
}

Graph make_path(int n) {
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph make_cycle(int n) {
    Edges e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph make_star(int n) {
    Edges e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

Graph make_complete(int n) {
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph make_complete_bipartite(int a, int b) {
    Edges e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

// The 12-node cubic graph with trivial automorphism group: a 12-cycle plus
// the six chords given by LCF notation [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2].
Graph make_frucht() {
    Edges e;
    for (int i = 0; i < 12; ++i) e.emplace_back(i, (i + 1) % 12);
    const Edges chords = {{0, 7}, {1, 11}, {2, 10}, {3, 5}, {4, 9}, {6, 8}};
    e.insert(e.end(), chords.begin(), chords.end());
    return Graph(12, e);
}

Graph make_disjoint_cliques(const std::vector<long long>& sizes) {
    Edges e;
    int base = 0;
    for (long long s : sizes) {
        require(s >= 1, "disjoint_union_cliques", "clique sizes must be >= 1");
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) e.emplace_back(base + u, base + v);
        base += static_cast<int>(s);
    }
    return Graph(base, e);
}

// Configuration-model pairing with retries: shuffle the d copies of each
// node, pair them up consecutively, reject pairings with loops or repeats.
Graph make_random_regular(int n, int d, Rng& rng) {
    require(d >= 0 && d < n, "random_regular", "need 0 <= d < n");
    require((static_cast<long long>(n) * d) % 2 == 0, "random_regular", "n*d must be even");
    if (d == 0) return Graph(n, {});
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) stubs.push_back(i);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        rng.shuffle(stubs);
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        Edges e;
        bool ok = true;
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            int u = stubs[k], v = stubs[k + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            e.emplace_back(u, v);
        }
        if (ok) return Graph(n, e);
    }
    throw std::invalid_argument("generate random_regular: no simple pairing found for n=" +
                                std::to_string(n) + " d=" + std::to_string(d));
}

Graph make_erdos_renyi(int n, long long p_percent, Rng& rng) {
    require(p_percent >= 0 && p_percent <= 100, "erdos_renyi",
            "edge percentage must be in [0, 100]");
    const double p = static_cast<double>(p_percent) / 100.0;
    Edges e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) e.emplace_back(u, v);
    return Graph(n, e);
}

// Uniform random labelled tree via a Pruefer sequence (linear decode).
Graph make_random_tree(int n, Rng& rng) {
    if (n <= 1) return Graph(n, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> prufer(n - 2);
    for (auto& x : prufer) x = static_cast<int>(rng.below(n));
    std::vector<int> deg(n, 1);
    for (int x : prufer) ++deg[x];
    Edges e;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : prufer) {
        e.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            while (deg[++ptr] != 1) {
            }
            leaf = ptr;
        }
    }
    e.emplace_back(leaf, n - 1);
    return Graph(n, e);
}

}  // namespace

Graph generate(const std::string& name, const std::vector<long long>& params,
               std::optional<std::uint64_t> seed) {
    auto node_count = [&](const std::string& family) {
        long long n = param_at(params, 0, family);
        require(n >= 0, family, "node count must be >= 0");
        return static_cast<int>(n);
    };
    if (name == "path") {
        int n = node_count(name);
        require(n >= 1, name, "need n >= 1");
        return make_path(n);
    }
    if (name == "cycle") {
        int n = node_count(name);
        require(n >= 3, name, "need n >= 3");
        return make_cycle(n);
    }
    if (name == "star") {
        int n = node_count(name);
        require(n >= 1, name, "need n >= 1");
        return make_star(n);
    }
    if (name == "complete") {
        int n = node_count(name);
        require(n >= 1, name, "need n >= 1");
        return make_complete(n);
    }
    if (name == "complete_bipartite") {
        int a = static_cast<int>(param_at(params, 0, name));
        int b = static_cast<int>(param_at(params, 1, name));
        require(a >= 1 && b >= 1, name, "both sides must be >= 1");
        return make_complete_bipartite(a, b);
    }
    if (name == "frucht") {
        require(params.empty(), name, "takes no parameters");
        return make_frucht();
    }
    if (name == "disjoint_union_cliques") {
        require(!params.empty(), name, "need at least one clique size");
        return make_disjoint_cliques(params);
    }
    if (name == "random_regular" || name == "erdos_renyi" || name == "random_tree") {
        require(seed.has_value(), name, "seed required for random families");
        Rng rng(*seed);
        if (name == "random_regular") {
            int n = node_count(name);
            return make_random_regular(n, static_cast<int>(param_at(params, 1, name)), rng);
        }
        if (name == "erdos_renyi") {
            int n = node_count(name);
            return make_erdos_renyi(n, param_at(params, 1, name), rng);
        }
        int n = node_count(name);
        return make_random_tree(n, rng);
    }
    throw std::invalid_argument("generate: unknown family '" + name + "'");
}

Graph parse_generator_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() > 3 || parts[0].empty())
        throw std::invalid_argument("generator spec '" + spec +
                                    "': expected name[:params[:seed]]");
    std::vector<long long> params;
    if (parts.size() >= 2 && !parts[1].empty()) {
        std::istringstream ps(parts[1]);
        std::string item;
        while (std::getline(ps, item, ',')) {
            try {
                std::size_t pos = 0;
                long long v = std::stoll(item, &pos);
                if (pos != item.size()) throw std::invalid_argument(item);
                params.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("generator spec '" + spec + "': bad parameter '" +
                                            item + "'");
            }
        }
    }
    std::optional<std::uint64_t> seed;
    if (parts.size() == 3) {
        try {
            std::size_t pos = 0;
            seed = std::stoull(parts[2], &pos);
            if (pos != parts[2].size()) throw std::invalid_argument(parts[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("generator spec '" + spec + "': bad seed '" + parts[2] +
                                        "'");
        }
    }
    return generate(parts[0], params, seed);
}

}  // namespace nodeorder
