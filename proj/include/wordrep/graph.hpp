#ifndef WORDREP_GRAPH_HPP
#define WORDREP_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wordrep {

/// Simple undirected graph over string-labeled vertices. Vertices are
/// addressed by dense indices into `labels`; edges are stored as index
/// pairs with first < second, sorted and deduplicated. Instances are
/// immutable after construction and safe to share across threads.
struct Graph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj; // sorted neighbor lists

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Index of `label`, or -1 if not present.
    int index_of(const std::string& label) const;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_isolated(int v) const { return adj[v].empty(); }

    bool operator==(const Graph& other) const {
        return labels == other.labels && edges == other.edges;
    }
};

/// Partition {v1, v2} of a bipartite graph's vertex indices, with
/// m = |v1| <= |v2| = n. Both sides are sorted ascending.
struct Bipartition {
    std::vector<int> v1;
    std::vector<int> v2;

    int m() const { return static_cast<int>(v1.size()); }
    int n() const { return static_cast<int>(v2.size()); }
    bool in_v1(int v) const;
};

/// Result of removing isolated vertices. `core_to_orig[i]` is the index
/// in the original graph of core vertex i.
struct SplitResult {
    Graph core;
    std::vector<std::string> isolated; // in original vertex order
    std::vector<int> core_to_orig;
};

/// Builds a canonical graph from labels and label pairs. Edges are
/// deduplicated; self-loops are rejected.
/// Throws: duplicate_label, unknown_endpoint, self_loop.
Graph build_graph(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& edge_pairs);

/// Two-colors the graph by BFS, one component at a time in ascending
/// min-vertex-index order, coloring each component root side 1. Isolated
/// vertices are assigned to the larger side afterwards (ties to the
/// non-root side), and sides are swapped if needed so m <= n; when m = n
/// the side holding the lowest-indexed vertex becomes v1. Deterministic.
/// Throws: not_bipartite (message carries an odd cycle).
Bipartition bipartition(const Graph& g);

/// N(v) as a sorted index list; empty iff v is isolated.
std::vector<int> neighborhood(const Graph& g, int v);

/// Induced subgraph on the non-isolated vertices plus the isolated labels
/// in original order. Throws all_isolated when the graph has no edges.
SplitResult split_isolated(const Graph& g);

/// K_{m,n} on labels a1..am, b1..bn. Throws zero_side.
Graph gen_complete_bipartite(int m, int n);

/// Crown graph H_{n,n}: K_{n,n} minus the perfect matching a_i-b_i.
/// Throws too_small for n < 2.
Graph gen_crown(int n);

/// Random bipartite graph on a1..am, b1..bn: each cross edge kept
/// independently with probability p. Deterministic for a fixed seed.
Graph gen_random_bipartite(int m, int n, double p, std::uint64_t seed);

} // namespace wordrep

#endif
