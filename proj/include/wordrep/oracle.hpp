#ifndef WORDREP_ORACLE_HPP
#define WORDREP_ORACLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/words.hpp"

namespace wordrep {

/// Explicit limits for the brute-force searches. Infeasibility is a typed
/// outcome, never a hang: a search that would visit more than
/// `max_candidates` nodes, or an instance larger than `max_vertices`,
/// reports budget_exceeded.
struct OracleBudget {
    int max_vertices = 6;
    int max_k = 3;
    long long max_candidates = 50'000'000;
};

enum class SearchStatus {
    found,
    not_within_max_k, // exhaustive up to max_k, no representation exists there
    budget_exceeded,
};

struct PermSearchResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    int k = 0;
    Word witness;             // representing word (k permutation blocks), when found
    long long explored = 0;   // search nodes visited
};

struct UniformSearchResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    int k = 0;
    Word witness; // k-uniform representing word, when found
    long long explored = 0;
};

/// Strict partial order over labeled elements. `less_than` holds index
/// pairs (i, j) meaning element i < element j.
struct Poset {
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> less_than; // sorted, unique

    int size() const { return static_cast<int>(elements.size()); }
    bool less(int i, int j) const;
};

/// Builds and validates a poset: irreflexive, antisymmetric, transitive
/// (checked by enumeration). Throws invalid_argument on violation.
Poset make_poset(std::vector<std::string> elements, std::vector<std::pair<int, int>> less_than);

struct DimensionResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    int dimension = 0;
    std::vector<std::vector<int>> witness; // linear extensions as element-index orders
    long long explored = 0;
};

struct EquivalenceResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    bool equal = false;
    int perm_k = 0;
    int dimension = 0;
};

/// Smallest k <= budget.max_k such that some concatenation of k
/// permutations of V(g) represents g. Backtracks over permutation tuples
/// in lexicographic order; a pair locked into inconsistent orders is
/// pruned as soon as it appears. With `reduce_symmetry` the tuple and its
/// reversal (which represent the same graph) are enumerated once; the
/// returned k is unaffected.
/// The witness is re-verified against g before being returned.
PermSearchResult min_perm_representation(const Graph& g, const OracleBudget& budget,
                                         bool reduce_symmetry = true);

/// Smallest k <= budget.max_k admitting a k-uniform representing word.
/// Enumerates k-uniform words in lexicographic letter order with
/// dead-pair pruning. The witness is re-verified before being returned.
UniformSearchResult min_representation(const Graph& g, const OracleBudget& budget);

/// The canonical height-1 poset of a bipartite graph: x < y iff x is in
/// V_1, y in V_2 and xy is an edge. Isolated vertices become incomparable
/// elements.
Poset bipartite_poset(const Graph& g, const Bipartition& bp);

/// Smallest d <= budget.max_k such that d linear extensions of p intersect
/// to exactly p. Enumerates extensions by backtracking over minimal
/// elements, then searches d-subsets with early termination. Witness
/// extensions are re-checked (each contains p; their intersection equals
/// p) before being returned. Throws no_linear_extension if enumeration
/// produces none, which signals an invariant violation.
DimensionResult poset_dimension(const Poset& p, const OracleBudget& budget);

/// Cross-check of the two routes: min_perm_representation(g) versus
/// poset_dimension of the canonical poset. `equal` is meaningful only
/// when status == found (both searches completed).
EquivalenceResult check_equivalence(const Graph& g, const Bipartition& bp,
                                    const OracleBudget& budget);

} // namespace wordrep

#endif
