#include "wordrep/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

// Pair orders are tracked as 8x8 bit matrices in a uint64_t: bit i*8+j is
// set when element i appears before element j. This caps instances at 8
// vertices/elements, which is the oracle's working range anyway.
constexpr int kMaskLimit = 8;

uint64_t transpose8x8(uint64_t x) {
    uint64_t t;
    t = (x ^ (x >> 7)) & 0x00AA00AA00AA00AAULL;
    x = x ^ t ^ (t << 7);
    t = (x ^ (x >> 14)) & 0x0000CCCC0000CCCCULL;
    x = x ^ t ^ (t << 14);
    t = (x ^ (x >> 28)) & 0x00000000F0F0F0F0ULL;
    x = x ^ t ^ (t << 28);
    return x;
}

uint64_t order_mask(const std::vector<int>& perm) {
    uint64_t mask = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = i + 1; j < perm.size(); ++j) {
            mask |= 1ULL << (perm[i] * 8 + perm[j]);
        }
    }
    return mask;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return perms;
}

struct BudgetCounter {
    long long limit;
    long long used = 0;

    bool spend() { return ++used <= limit; }
};

} // namespace

bool Poset::less(int i, int j) const {
    return std::binary_search(less_than.begin(), less_than.end(), std::make_pair(i, j));
}

Poset make_poset(std::vector<std::string> elements, std::vector<std::pair<int, int>> less_than) {
    std::sort(less_than.begin(), less_than.end());
    less_than.erase(std::unique(less_than.begin(), less_than.end()), less_than.end());
    const int n = static_cast<int>(elements.size());
    for (auto [i, j] : less_than) {
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw Error(ErrorCode::invalid_argument, "poset relation index out of range");
        }
        if (i == j) throw Error(ErrorCode::invalid_argument, "poset relation is not irreflexive");
    }
    Poset p{std::move(elements), std::move(less_than)};
    for (auto [i, j] : p.less_than) {
        if (p.less(j, i)) {
            throw Error(ErrorCode::invalid_argument, "poset relation is not antisymmetric");
        }
    }
    for (auto [i, j] : p.less_than) {
        for (auto [j2, k] : p.less_than) {
            if (j2 == j && !p.less(i, k)) {
                throw Error(ErrorCode::invalid_argument, "poset relation is not transitive");
            }
        }
    }
    return p;
}

namespace {

struct PermSearch {
    const Graph& g;
    int n;
    bool reduce_symmetry;
    const std::vector<std::vector<int>>& perms;
    const std::vector<uint64_t>& masks;
    std::vector<int> reversed_index; // index of each permutation's reversal
    uint64_t adj_both = 0;           // both direction bits for every edge
    uint64_t nonadj_both = 0;        // both direction bits for every non-edge
    BudgetCounter budget;
    std::vector<int> chosen;
    bool aborted = false;

    PermSearch(const Graph& g_, const std::vector<std::vector<int>>& perms_,
               const std::vector<uint64_t>& masks_, long long limit, bool reduce)
        : g(g_), n(g_.vertex_count()), reduce_symmetry(reduce), perms(perms_), masks(masks_),
          budget{limit} {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                uint64_t both = (1ULL << (u * 8 + v)) | (1ULL << (v * 8 + u));
                if (g.has_edge(u, v)) adj_both |= both;
                else nonadj_both |= both;
            }
        }
        reversed_index.resize(perms.size());
        for (size_t i = 0; i < perms.size(); ++i) {
            std::vector<int> rev(perms[i].rbegin(), perms[i].rend());
            auto it = std::lower_bound(perms.begin(), perms.end(), rev);
            reversed_index[i] = static_cast<int>(it - perms.begin());
        }
    }

    // A tuple and its reversal (reversed blocks in reverse order) represent
    // the same graph; keep the one whose first block is lexicographically
    // no greater than the last block's reversal.
    bool symmetry_ok(int first, int last) const {
        return !reduce_symmetry || first <= reversed_index[last];
    }

    bool represents(uint64_t and_mask) const {
        uint64_t comparable = and_mask | transpose8x8(and_mask);
        return (comparable & nonadj_both) == 0 && (comparable & adj_both) == adj_both;
    }

    // true once a witness is found; `chosen` then holds the block indices
    bool search(int level, int k, uint64_t and_mask) {
        for (size_t p = 0; p < perms.size(); ++p) {
            if (!budget.spend()) {
                aborted = true;
                return false;
            }
            uint64_t next = and_mask & masks[p];
            // an adjacent pair whose order differs between two blocks can
            // never alternate again
            uint64_t comparable = next | transpose8x8(next);
            if ((comparable & adj_both) != adj_both) continue;
            chosen[level] = static_cast<int>(p);
            if (level + 1 == k) {
                if (symmetry_ok(chosen[0], static_cast<int>(p)) && represents(next)) return true;
            } else {
                if (search(level + 1, k, next)) return true;
                if (aborted) return false;
            }
        }
        return false;
    }
};

} // namespace

PermSearchResult min_perm_representation(const Graph& g, const OracleBudget& budget,
                                         bool reduce_symmetry) {
    PermSearchResult result;
    const int n = g.vertex_count();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "graph must have at least one vertex");
    if (n > budget.max_vertices || n > kMaskLimit) {
        result.status = SearchStatus::budget_exceeded;
        return result;
    }

    const auto perms = all_permutations(n);
    std::vector<uint64_t> masks(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) masks[i] = order_mask(perms[i]);

    PermSearch search(g, perms, masks, budget.max_candidates, reduce_symmetry);
    uint64_t full = ~0ULL;
    for (int k = 1; k <= budget.max_k; ++k) {
        search.chosen.assign(k, -1);
        if (search.search(0, k, full)) {
            result.status = SearchStatus::found;
            result.k = k;
            for (int idx : search.chosen) {
                for (int v : perms[idx]) result.witness.letters.push_back(g.labels[v]);
            }
            result.explored = search.budget.used;
            if (!verify(result.witness, g).ok) {
                throw Error(ErrorCode::verification_failed,
                            "permutation search produced a non-representing witness");
            }
            return result;
        }
        if (search.aborted) {
            result.status = SearchStatus::budget_exceeded;
            result.explored = search.budget.used;
            return result;
        }
    }
    result.status = SearchStatus::not_within_max_k;
    result.explored = search.budget.used;
    return result;
}

namespace {

struct UniformSearch {
    const Graph& g;
    int n;
    int k;
    BudgetCounter budget;
    std::vector<int> placed;          // occurrences so far per letter
    std::vector<int> word;            // letter ids
    std::vector<int8_t> last;         // n*n: 0 none, 1 row-letter, 2 col-letter
    std::vector<int8_t> broken;       // n*n
    bool aborted = false;

    UniformSearch(const Graph& g_, int k_, long long limit)
        : g(g_), n(g_.vertex_count()), k(k_), budget{limit}, placed(n, 0), last(n * n, 0),
          broken(n * n, 0) {}

    bool complete_ok() const {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                // adjacent pairs are alternation-clean by pruning; every
                // non-adjacent pair must have broken somewhere
                if (!g.has_edge(u, v) && !broken[u * n + v]) return false;
            }
        }
        return true;
    }

    bool search(int position) {
        if (position == n * k) return complete_ok();
        for (int x = 0; x < n; ++x) {
            if (placed[x] == k) continue;
            if (!budget.spend()) {
                aborted = true;
                return false;
            }
            // apply letter x, recording pair-state changes for undo
            bool dead = false;
            std::vector<std::pair<int, int8_t>> touched_last;
            std::vector<int> touched_broken;
            for (int y = 0; y < n && !dead; ++y) {
                if (y == x) continue;
                int u = std::min(x, y), v = std::max(x, y);
                int idx = u * n + v;
                int8_t mark = x == u ? 1 : 2;
                if (last[idx] == mark) {
                    if (g.has_edge(u, v)) {
                        dead = true; // a doublet in an adjacent pair cannot be repaired
                        break;
                    }
                    if (!broken[idx]) {
                        broken[idx] = 1;
                        touched_broken.push_back(idx);
                    }
                } else {
                    touched_last.emplace_back(idx, last[idx]);
                    last[idx] = mark;
                }
            }
            if (!dead) {
                ++placed[x];
                word.push_back(x);
                if (search(position + 1)) return true;
                word.pop_back();
                --placed[x];
                if (aborted) return false;
            }
            for (auto [idx, old] : touched_last) last[idx] = old;
            for (int idx : touched_broken) broken[idx] = 0;
        }
        return false;
    }
};

} // namespace

UniformSearchResult min_representation(const Graph& g, const OracleBudget& budget) {
    UniformSearchResult result;
    const int n = g.vertex_count();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "graph must have at least one vertex");
    if (n > budget.max_vertices) {
        result.status = SearchStatus::budget_exceeded;
        return result;
    }

    long long used = 0;
    for (int k = 1; k <= budget.max_k; ++k) {
        UniformSearch search(g, k, budget.max_candidates - used);
        if (search.search(0)) {
            result.status = SearchStatus::found;
            result.k = k;
            for (int x : search.word) result.witness.letters.push_back(g.labels[x]);
            result.explored = used + search.budget.used;
            if (!verify(result.witness, g).ok) {
                throw Error(ErrorCode::verification_failed,
                            "uniform-word search produced a non-representing witness");
            }
            return result;
        }
        used += search.budget.used;
        if (search.aborted) {
            result.status = SearchStatus::budget_exceeded;
            result.explored = used;
            return result;
        }
    }
    result.status = SearchStatus::not_within_max_k;
    result.explored = used;
    return result;
}

Poset bipartite_poset(const Graph& g, const Bipartition& bp) {
    for (auto [u, v] : g.edges) {
        bool u1 = bp.in_v1(u), v1 = bp.in_v1(v);
        if (u1 == v1) {
            throw Error(ErrorCode::not_bipartite, "edge does not cross the bipartition");
        }
    }
    std::vector<std::pair<int, int>> relations;
    relations.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        if (bp.in_v1(u)) relations.emplace_back(u, v);
        else relations.emplace_back(v, u);
    }
    return make_poset(g.labels, std::move(relations));
}

namespace {

// Backtracks over minimal elements in ascending index order, collecting
// every linear extension as an order mask.
struct ExtensionEnumerator {
    const Poset& p;
    int n;
    std::vector<std::vector<int>> above; // successors
    std::vector<int> pending;            // unplaced predecessors per element
    std::vector<int> current;
    std::vector<std::vector<int>> extensions;
    std::vector<uint64_t> masks;
    BudgetCounter budget;
    bool aborted = false;

    ExtensionEnumerator(const Poset& p_, long long limit)
        : p(p_), n(p_.size()), above(n), pending(n, 0), budget{limit} {
        for (auto [i, j] : p.less_than) {
            above[i].push_back(j);
            ++pending[j];
        }
    }

    void run() {
        std::vector<char> placed(n, 0);
        backtrack(placed);
    }

    void backtrack(std::vector<char>& placed) {
        if (aborted) return;
        if (static_cast<int>(current.size()) == n) {
            extensions.push_back(current);
            masks.push_back(order_mask(current));
            return;
        }
        for (int e = 0; e < n; ++e) {
            if (placed[e] || pending[e] > 0) continue;
            if (!budget.spend()) {
                aborted = true;
                return;
            }
            placed[e] = 1;
            current.push_back(e);
            for (int s : above[e]) --pending[s];
            backtrack(placed);
            for (int s : above[e]) ++pending[s];
            current.pop_back();
            placed[e] = 0;
        }
    }
};

struct RealizerSearch {
    const std::vector<uint64_t>& masks;
    uint64_t target;
    BudgetCounter budget;
    std::vector<int> chosen;
    bool aborted = false;

    bool search(int level, int d, int first, uint64_t and_mask) {
        for (int i = first; i < static_cast<int>(masks.size()); ++i) {
            if (!budget.spend()) {
                aborted = true;
                return false;
            }
            uint64_t next = and_mask & masks[i];
            chosen[level] = i;
            if (level + 1 == d) {
                if (next == target) return true;
            } else {
                if (search(level + 1, d, i + 1, next)) return true;
                if (aborted) return false;
            }
        }
        return false;
    }
};

} // namespace

DimensionResult poset_dimension(const Poset& p, const OracleBudget& budget) {
    DimensionResult result;
    const int n = p.size();
    if (n < 1) throw Error(ErrorCode::invalid_argument, "poset must have at least one element");
    if (n > budget.max_vertices || n > kMaskLimit) {
        result.status = SearchStatus::budget_exceeded;
        return result;
    }

    ExtensionEnumerator enumerator(p, budget.max_candidates);
    enumerator.run();
    if (enumerator.aborted) {
        result.status = SearchStatus::budget_exceeded;
        result.explored = enumerator.budget.used;
        return result;
    }
    if (enumerator.extensions.empty()) {
        throw Error(ErrorCode::no_linear_extension, "a valid poset always has a linear extension");
    }

    uint64_t target = 0;
    for (auto [i, j] : p.less_than) target |= 1ULL << (i * 8 + j);

    long long used = enumerator.budget.used;
    const int max_d = std::min<int>(budget.max_k, static_cast<int>(enumerator.extensions.size()));
    for (int d = 1; d <= max_d; ++d) {
        RealizerSearch search{enumerator.masks, target, {budget.max_candidates - used}, {}, false};
        search.chosen.assign(d, -1);
        if (search.search(0, d, 0, ~0ULL)) {
            result.status = SearchStatus::found;
            result.dimension = d;
            result.explored = used + search.budget.used;
            uint64_t and_mask = ~0ULL;
            for (int idx : search.chosen) {
                const auto& ext = enumerator.extensions[idx];
                // independent re-check: the witness respects every relation
                std::vector<int> position(n);
                for (int pos = 0; pos < n; ++pos) position[ext[pos]] = pos;
                for (auto [i, j] : p.less_than) {
                    if (position[i] >= position[j]) {
                        throw Error(ErrorCode::verification_failed,
                                    "dimension witness is not a linear extension");
                    }
                }
                and_mask &= enumerator.masks[idx];
                result.witness.push_back(ext);
            }
            if (and_mask != target) {
                throw Error(ErrorCode::verification_failed,
                            "dimension witness intersection differs from the poset");
            }
            return result;
        }
        used += search.budget.used;
        if (search.aborted) {
            result.status = SearchStatus::budget_exceeded;
            result.explored = used;
            return result;
        }
    }
    result.status = SearchStatus::not_within_max_k;
    result.explored = used;
    return result;
}

EquivalenceResult check_equivalence(const Graph& g, const Bipartition& bp,
                                    const OracleBudget& budget) {
    EquivalenceResult result;
    PermSearchResult perm = min_perm_representation(g, budget);
    if (perm.status != SearchStatus::found) {
        result.status = perm.status;
        return result;
    }
    DimensionResult dim = poset_dimension(bipartite_poset(g, bp), budget);
    if (dim.status != SearchStatus::found) {
        result.status = dim.status;
        return result;
    }
    result.status = SearchStatus::found;
    result.perm_k = perm.k;
    result.dimension = dim.dimension;
    result.equal = perm.k == dim.dimension;
    return result;
}

} // namespace wordrep
