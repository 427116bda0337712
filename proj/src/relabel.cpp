#include "wordrep/relabel.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "wordrep/error.hpp"

namespace wordrep {

std::vector<OrderingPolicy> OrderingPolicy::builtin() {
    return {paper_example(), index_ascending()};
}

std::string OrderingPolicy::name() const {
    switch (kind) {
    case PolicyKind::paper_example: return "paper-example";
    case PolicyKind::index_ascending: return "index-ascending";
    case PolicyKind::custom: return "custom";
    }
    return "unknown";
}

std::vector<int> OrderingPolicy::order(const Graph& g, std::vector<int> vertices) const {
    switch (kind) {
    case PolicyKind::index_ascending:
        std::sort(vertices.begin(), vertices.end());
        return vertices;
    case PolicyKind::paper_example:
        std::sort(vertices.begin(), vertices.end(), [&g](int u, int v) {
            if (g.degree(u) != g.degree(v)) return g.degree(u) < g.degree(v);
            return u > v;
        });
        return vertices;
    case PolicyKind::custom: {
        std::unordered_map<std::string, int> rank;
        for (int i = 0; i < static_cast<int>(custom_order.size()); ++i) {
            if (!rank.emplace(custom_order[i], i).second) {
                throw Error(ErrorCode::bad_policy,
                            "custom order lists '" + custom_order[i] + "' twice");
            }
        }
        for (int v : vertices) {
            if (!rank.count(g.labels[v])) {
                throw Error(ErrorCode::bad_policy,
                            "custom order does not cover vertex '" + g.labels[v] + "'");
            }
        }
        std::sort(vertices.begin(), vertices.end(), [&](int u, int v) {
            return rank[g.labels[u]] < rank[g.labels[v]];
        });
        return vertices;
    }
    }
    throw Error(ErrorCode::bad_policy, "unknown policy kind");
}

Relabeling relabel(const Graph& g, const Bipartition& bp, const OrderingPolicy& policy) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) {
            throw Error(ErrorCode::has_isolated, "vertex '" + g.labels[v] + "' is isolated");
        }
    }
    const int m = bp.m();
    const int n = bp.n();

    std::vector<int> v1_ordered = policy.order(g, bp.v1);
    int c1 = -1;
    for (int a : v1_ordered) {
        if (g.degree(a) < n) { // V_2 \ N(a) nonempty
            c1 = a;
            break;
        }
    }
    if (c1 < 0) {
        throw Error(ErrorCode::complete_bipartite, "every V_1 vertex is adjacent to all of V_2");
    }

    Relabeling r;
    r.m = m;
    r.n = n;
    r.to_c.assign(g.vertex_count(), 0);
    r.from_c.assign(m + n + 1, -1);
    r.label_of_c.assign(m + n + 1, "");
    auto assign = [&r, &g](int vertex, int subscript) {
        r.to_c[vertex] = subscript;
        r.from_c[subscript] = vertex;
        r.label_of_c[subscript] = g.labels[vertex];
    };

    assign(c1, 1);
    int next = 2;
    for (int a : v1_ordered) {
        if (a != c1) assign(a, next++);
    }

    // V_2 subscripts: round i hands the next subscripts to the unclaimed
    // non-neighbors of c_i, then leftovers are assigned last, all in
    // policy order.
    std::vector<char> claimed(g.vertex_count(), 0);
    std::vector<int> v2_ordered = policy.order(g, bp.v2);
    r.k_counts.assign(m, 0);
    int subscript = m + 1;
    for (int i = 1; i <= m; ++i) {
        int ci = r.from_c[i];
        for (int b : v2_ordered) {
            if (!claimed[b] && !g.has_edge(ci, b)) {
                claimed[b] = 1;
                ++r.k_counts[i - 1];
                assign(b, subscript++);
            }
        }
    }
    for (int b : v2_ordered) {
        if (!claimed[b]) assign(b, subscript++);
    }
    return r;
}

std::vector<std::vector<int>> build_permutations(const Relabeling& r, const Graph& g) {
    const int m = r.m;
    const int n = r.n;
    const int k1 = r.k_counts.empty() ? 0 : r.k_counts[0];

    // neighborhoods in subscript space
    auto neighbor_subscripts = [&](int i) {
        std::vector<int> subs;
        for (int b : g.adj[r.from_c[i]]) subs.push_back(r.to_c[b]);
        std::sort(subs.begin(), subs.end());
        return subs;
    };

    std::vector<std::vector<int>> blocks;
    blocks.reserve(m + 1);

    std::vector<int> w1;
    for (int i = m; i >= 2; --i) w1.push_back(i);
    for (int i = m + 1; i <= m + k1; ++i) w1.push_back(i);
    w1.push_back(1);
    for (int i = m + k1 + 1; i <= m + n; ++i) w1.push_back(i);
    blocks.push_back(std::move(w1));

    bool any_full = false;
    for (int i = 2; i <= m; ++i) {
        std::vector<int> nbr = neighbor_subscripts(i);
        if (static_cast<int>(nbr.size()) == n) {
            any_full = true;
            blocks.emplace_back(); // epsilon
            continue;
        }
        std::vector<int> non_nbr;
        std::unordered_set<int> nbr_set(nbr.begin(), nbr.end());
        for (int s = m + 1; s <= m + n; ++s) {
            if (!nbr_set.count(s)) non_nbr.push_back(s);
        }
        std::vector<int> wi;
        for (int j = 1; j <= m; ++j) {
            if (j != i) wi.push_back(j);
        }
        for (auto it = non_nbr.rbegin(); it != non_nbr.rend(); ++it) wi.push_back(*it); // Dec
        wi.push_back(i);
        for (auto it = nbr.rbegin(); it != nbr.rend(); ++it) wi.push_back(*it); // Dec
        blocks.push_back(std::move(wi));
    }

    if (any_full) {
        std::vector<int> last;
        for (int i = 1; i <= m; ++i) last.push_back(i);
        for (int i = m + n; i >= m + 1; --i) last.push_back(i);
        blocks.push_back(std::move(last));
    } else {
        blocks.emplace_back();
    }
    return blocks;
}

namespace {

int count_full_vertices(const Graph& g, const Bipartition& bp) {
    int k = 0;
    for (int a : bp.v1) {
        if (g.degree(a) == bp.n()) ++k;
    }
    return k;
}

Word concat(const std::vector<Word>& blocks) {
    Word w;
    for (const auto& block : blocks) {
        w.letters.insert(w.letters.end(), block.letters.begin(), block.letters.end());
    }
    return w;
}

} // namespace

Representation represent_bipartite(const Graph& g, const OrderingPolicy& policy) {
    Bipartition bp = bipartition(g);
    if (g.edges.empty()) throw Error(ErrorCode::no_edges, "graph has no edges");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) {
            throw Error(ErrorCode::has_isolated,
                        "vertex '" + g.labels[v] + "' is isolated; strip isolated vertices first");
        }
    }

    Representation rep;
    rep.bound_m = bp.m();
    rep.k_full = count_full_vertices(g, bp);
    rep.policy_name = policy.name();

    if (rep.k_full == bp.m()) {
        // complete bipartite: w = a_1..a_m b_1..b_n  a_m..a_1 b_n..b_1,
        // two permutations of the whole vertex set
        rep.complete_bipartite = true;
        Word first, second;
        for (int a : bp.v1) first.letters.push_back(g.labels[a]);
        for (int b : bp.v2) first.letters.push_back(g.labels[b]);
        for (auto it = bp.v1.rbegin(); it != bp.v1.rend(); ++it) second.letters.push_back(g.labels[*it]);
        for (auto it = bp.v2.rbegin(); it != bp.v2.rend(); ++it) second.letters.push_back(g.labels[*it]);
        rep.permutations = {std::move(first), std::move(second)};
    } else {
        Relabeling r = relabel(g, bp, policy);
        for (const auto& block : build_permutations(r, g)) {
            Word w;
            w.letters.reserve(block.size());
            for (int subscript : block) w.letters.push_back(g.labels[r.from_c[subscript]]);
            rep.permutations.push_back(std::move(w));
        }
        rep.relabeling = std::move(r);
    }

    rep.word = concat(rep.permutations);
    for (const auto& block : rep.permutations) {
        if (!block.empty()) ++rep.perm_count;
    }
    rep.verified = verify(rep.word, g);
    if (!rep.verified.ok) {
        throw Error(ErrorCode::verification_failed,
                    "constructed word does not represent the graph (permutation template bug)");
    }
    return rep;
}

Word wrap_isolated(const std::vector<Word>& blocks, const std::vector<std::string>& isolated) {
    if (blocks.empty()) throw Error(ErrorCode::invalid_argument, "wrap_isolated needs at least one block");
    if (isolated.empty()) throw Error(ErrorCode::invalid_argument, "wrap_isolated needs isolated vertices");
    for (const auto& block : blocks) {
        if (block.empty()) {
            throw Error(ErrorCode::invalid_argument, "wrap_isolated blocks must be nonempty");
        }
    }
    if (is_permutation_concatenation(concat(blocks), blocks.front().letters) !=
        static_cast<int>(blocks.size())) {
        throw Error(ErrorCode::invalid_argument,
                    "wrap_isolated blocks must all be permutations of one vertex set");
    }

    std::vector<Word> work = blocks;
    if (work.size() == 1) {
        // a single permutation only represents a complete graph; doubling it
        // represents the same graph and gives the interleaving a landing spot
        work.push_back(work.front());
    }
    const int k = static_cast<int>(work.size());

    Word u{std::vector<std::string>(isolated.begin(), isolated.end())};
    Word ru = reversal(u);

    Word result;
    for (int i = 1; i <= k; ++i) {
        result.letters.insert(result.letters.end(), work[i - 1].letters.begin(),
                              work[i - 1].letters.end());
        if (i % 2 == 1) {
            if (i < k) {
                result.letters.insert(result.letters.end(), u.letters.begin(), u.letters.end());
                result.letters.insert(result.letters.end(), ru.letters.begin(), ru.letters.end());
            } else {
                // odd k: the final block is followed by a single u
                result.letters.insert(result.letters.end(), u.letters.begin(), u.letters.end());
            }
        }
    }

    // mandatory check against the core graph extended by the isolated vertices
    Graph core = graph_of_word(concat(blocks));
    std::vector<std::string> labels = core.labels;
    for (const auto& x : isolated) {
        if (std::find(labels.begin(), labels.end(), x) != labels.end()) {
            throw Error(ErrorCode::duplicate_label,
                        "isolated label '" + x + "' collides with a core vertex");
        }
        labels.push_back(x);
    }
    std::vector<std::pair<std::string, std::string>> edge_labels;
    for (auto [a, b] : core.edges) edge_labels.emplace_back(core.labels[a], core.labels[b]);
    Graph full = build_graph(labels, edge_labels);
    VerificationReport report = verify(result, full);
    if (!report.ok) {
        throw Error(ErrorCode::verification_failed,
                    "wrapped word does not represent the graph with isolated vertices");
    }
    return result;
}

WrappedRepresentation represent_with_isolated(const Graph& g, const OrderingPolicy& policy) {
    SplitResult split = split_isolated(g);
    WrappedRepresentation wrapped;
    wrapped.core = represent_bipartite(split.core, policy);
    wrapped.isolated = split.isolated;
    if (split.isolated.empty()) {
        wrapped.word = wrapped.core.word;
    } else {
        std::vector<Word> nonempty;
        for (const auto& block : wrapped.core.permutations) {
            if (!block.empty()) nonempty.push_back(block);
        }
        wrapped.word = wrap_isolated(nonempty, split.isolated);
    }
    wrapped.verified = verify(wrapped.word, g);
    if (!wrapped.verified.ok) {
        throw Error(ErrorCode::verification_failed,
                    "wrapped word does not represent the input graph");
    }
    return wrapped;
}

BoundReport bound_report(const Graph& g, const Bipartition& bp) {
    BoundReport report;
    report.m = bp.m();
    report.k_full = count_full_vertices(g, bp);
    report.bound = report.k_full >= 1 ? report.m - report.k_full + 1 : report.m;
    return report;
}

} // namespace wordrep
