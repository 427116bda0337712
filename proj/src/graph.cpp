#include "wordrep/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

#include "wordrep/error.hpp"

namespace wordrep {

int Graph::index_of(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i) {
        if (labels[i] == label) return i;
    }
    return -1;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nu = adj[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

bool Bipartition::in_v1(int v) const {
    return std::binary_search(v1.begin(), v1.end(), v);
}

namespace {

Graph finish_graph(std::vector<std::string> labels, std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.labels = std::move(labels);
    g.edges = std::move(edges);
    g.adj.assign(g.labels.size(), {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    return g;
}

} // namespace

Graph build_graph(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
    std::unordered_map<std::string, int> index;
    index.reserve(labels.size());
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (!index.emplace(labels[i], i).second) {
            throw Error(ErrorCode::duplicate_label, "vertex label '" + labels[i] + "' declared twice");
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_pairs.size());
    for (const auto& [a, b] : edge_pairs) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw Error(ErrorCode::unknown_endpoint, "edge endpoint '" + a + "' is not a declared vertex");
        if (ib == index.end()) throw Error(ErrorCode::unknown_endpoint, "edge endpoint '" + b + "' is not a declared vertex");
        int u = ia->second, v = ib->second;
        if (u == v) throw Error(ErrorCode::self_loop, "self-loop at vertex '" + a + "'");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return finish_graph(labels, std::move(edges));
}

namespace {

// Recovers an odd cycle through the conflicting edge (u, v) from BFS
// parent pointers and formats it for the error message.
std::string format_odd_cycle(const Graph& g, const std::vector<int>& parent, int u, int v) {
    std::vector<int> pu{u}, pv{v};
    while (parent[pu.back()] >= 0) pu.push_back(parent[pu.back()]);
    while (parent[pv.back()] >= 0) pv.push_back(parent[pv.back()]);
    // trim the shared tail up to the lowest common ancestor
    while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    std::ostringstream out;
    out << "odd cycle:";
    for (auto it = pu.rbegin(); it != pu.rend(); ++it) out << ' ' << g.labels[*it];
    for (size_t i = pv.size() - 1; i-- > 0;) out << ' ' << g.labels[pv[i]];
    return out.str();
}

} // namespace

Bipartition bipartition(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw Error(ErrorCode::invalid_argument, "bipartition of an empty graph");

    std::vector<int> color(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1 || g.is_isolated(root)) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    throw Error(ErrorCode::not_bipartite, format_odd_cycle(g, parent, u, v));
                }
            }
        }
    }

    std::vector<int> side0, side1;
    for (int v = 0; v < n; ++v) {
        if (color[v] == 0) side0.push_back(v);
        else if (color[v] == 1) side1.push_back(v);
    }
    // isolated vertices go to the larger side (ties to the non-root side), keeping m minimal
    std::vector<int>& bigger = side0.size() > side1.size() ? side0 : side1;
    for (int v = 0; v < n; ++v) {
        if (color[v] == -1) bigger.push_back(v);
    }
    std::sort(side0.begin(), side0.end());
    std::sort(side1.begin(), side1.end());

    Bipartition bp;
    bool side0_first;
    if (side0.size() != side1.size()) {
        side0_first = side0.size() < side1.size();
    } else {
        // m = n: the side holding the lowest-indexed vertex is v1
        side0_first = !side0.empty() && (side1.empty() || side0.front() < side1.front());
    }
    bp.v1 = side0_first ? std::move(side0) : std::move(side1);
    bp.v2 = side0_first ? std::move(side1) : std::move(side0);
    return bp;
}

std::vector<int> neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw Error(ErrorCode::invalid_argument, "vertex index out of range");
    }
    return g.adj[v];
}

SplitResult split_isolated(const Graph& g) {
    if (g.edges.empty()) {
        throw Error(ErrorCode::all_isolated, "graph has no edges");
    }
    SplitResult result;
    std::vector<int> orig_to_core(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) {
            result.isolated.push_back(g.labels[v]);
        } else {
            orig_to_core[v] = static_cast<int>(result.core_to_orig.size());
            result.core_to_orig.push_back(v);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(result.core_to_orig.size());
    for (int v : result.core_to_orig) labels.push_back(g.labels[v]);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(orig_to_core[u], orig_to_core[v]);
    result.core = finish_graph(std::move(labels), std::move(edges));
    return result;
}

namespace {

std::vector<std::string> side_labels(char prefix, int count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (int i = 1; i <= count; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

std::vector<std::string> two_side_labels(int m, int n) {
    auto labels = side_labels('a', m);
    auto bs = side_labels('b', n);
    labels.insert(labels.end(), bs.begin(), bs.end());
    return labels;
}

} // namespace

Graph gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorCode::zero_side, "K_{m,n} needs m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    }
    return finish_graph(two_side_labels(m, n), std::move(edges));
}

Graph gen_crown(int n) {
    if (n < 2) throw Error(ErrorCode::too_small, "crown graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) edges.emplace_back(i, n + j);
        }
    }
    return finish_graph(two_side_labels(n, n), std::move(edges));
}

Graph gen_random_bipartite(int m, int n, double p, std::uint64_t seed) {
    if (m < 1 || n < 1) throw Error(ErrorCode::zero_side, "random bipartite needs m, n >= 1");
    if (p < 0.0 || p > 1.0) throw Error(ErrorCode::invalid_argument, "edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            // top 53 bits -> uniform double in [0, 1); portable across platforms
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, m + j);
        }
    }
    return finish_graph(two_side_labels(m, n), std::move(edges));
}

} // namespace wordrep
