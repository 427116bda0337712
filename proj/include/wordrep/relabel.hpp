#ifndef WORDREP_RELABEL_HPP
#define WORDREP_RELABEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/words.hpp"

namespace wordrep {

enum class PolicyKind { paper_example, index_ascending, custom };

/// Resolves the relabeling algorithm's free vertex choices into a total
/// order. The default "paper-example" policy sorts by ascending degree
/// with ties broken by descending original index, which reproduces the
/// reference relabeling used in the golden tests.
struct OrderingPolicy {
    PolicyKind kind = PolicyKind::paper_example;
    std::vector<std::string> custom_order; // used only for PolicyKind::custom

    static OrderingPolicy paper_example() { return {PolicyKind::paper_example, {}}; }
    static OrderingPolicy index_ascending() { return {PolicyKind::index_ascending, {}}; }
    static OrderingPolicy custom(std::vector<std::string> order) {
        return {PolicyKind::custom, std::move(order)};
    }

    /// The two built-in policies, in the order used by exhaustive suites.
    static std::vector<OrderingPolicy> builtin();

    std::string name() const;

    /// Sorts `vertices` (graph indices) into policy order.
    /// Throws bad_policy when a custom order does not cover the set.
    std::vector<int> order(const Graph& g, std::vector<int> vertices) const;
};

/// Bijection between original vertices and the subscripts c_1..c_{m+n}
/// assigned by the relabeling steps, plus the per-step counts k_i.
struct Relabeling {
    std::vector<int> to_c;                 // vertex index -> subscript in 1..m+n
    std::vector<int> from_c;               // subscript -> vertex index ([0] unused)
    std::vector<std::string> label_of_c;   // subscript -> original label ([0] empty)
    std::vector<int> k_counts;             // k_1..k_m
    int m = 0;
    int n = 0;

    std::string c_label(int vertex) const { return "c" + std::to_string(to_c[vertex]); }
};

/// A verified permutation representation of a bipartite graph.
/// `permutations` holds m+1 blocks on the algorithm path (empty Word for
/// each epsilon block) and the two halves of the complete-bipartite word
/// otherwise, always in original labels; `word` is their concatenation
/// skipping empties.
struct Representation {
    Word word;
    std::vector<Word> permutations;
    std::optional<Relabeling> relabeling; // nullopt on the complete-bipartite path
    int perm_count = 0;                   // number of nonempty blocks
    int bound_m = 0;
    int k_full = 0; // vertices of V_1 adjacent to all of V_2
    bool complete_bipartite = false;
    VerificationReport verified;
    std::string policy_name;
};

struct BoundReport {
    int m = 0;
    int k_full = 0;
    int bound = 0; // m - k_full + 1 when k_full >= 1, else m
};

/// Assigns subscripts c_1..c_{m+n}: c_1 is the policy-first vertex of V_1
/// with a nonempty set of non-neighbors in V_2, c_2..c_m the remaining V_1
/// vertices in policy order, then V_2 subscripts round by round from the
/// unclaimed non-neighbors of each c_i, leftovers last, all in policy
/// order. Throws complete_bipartite when no vertex qualifies as c_1 and
/// has_isolated when the graph has an isolated vertex.
Relabeling relabel(const Graph& g, const Bipartition& bp, const OrderingPolicy& policy);

/// Instantiates the m+1 permutation templates over the relabeled graph.
/// Blocks are returned as sequences of subscripts; empty vector = epsilon.
///   block 1:    c_m..c_2  c_{m+1}..c_{m+k_1}  c_1  c_{m+k_1+1}..c_{m+n}
///   block i>=2: c_1..c_{i-1} c_{i+1}..c_m  Dec(V_2\N(c_i))  c_i  Dec(N(c_i)),
///               or epsilon when N(c_i) = V_2
///   block m+1:  c_1..c_m  c_{m+n}..c_{m+1} when some N(c) = V_2, else epsilon
std::vector<std::vector<int>> build_permutations(const Relabeling& r, const Graph& g);

/// Runs the full pipeline: bipartition, complete-bipartite shortcut or
/// relabel + permutation templates, mapping back to original labels, and
/// mandatory verification. Throws not_bipartite, has_isolated, no_edges,
/// verification_failed.
Representation represent_bipartite(const Graph& g, const OrderingPolicy& policy);

/// Interleaves the isolated vertices u = x_1..x_t into the nonempty core
/// blocks: u r(u) goes after each odd-indexed block, except that for odd k
/// the final block is followed by a single u. A single block is first
/// duplicated (two copies of one permutation represent the same graph) so
/// the interleaving has somewhere to land. The result is verified against
/// the core graph extended with the isolated vertices; a failure throws
/// verification_failed.
Word wrap_isolated(const std::vector<Word>& blocks, const std::vector<std::string>& isolated);

/// Core representation together with the isolated vertices wrapped back in.
/// When `isolated` is empty, `word` is just the core word.
struct WrappedRepresentation {
    Word word;
    Representation core;
    std::vector<std::string> isolated;
    VerificationReport verified; // against the full graph
};

/// Strips isolated vertices, represents the core, and wraps the isolated
/// vertices back per the construction above, verifying against the full
/// graph. Throws all_isolated when g has no edges.
WrappedRepresentation represent_with_isolated(const Graph& g, const OrderingPolicy& policy);

/// k_full and the resulting permutation-count bound for g.
BoundReport bound_report(const Graph& g, const Bipartition& bp);

} // namespace wordrep

#endif
