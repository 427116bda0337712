#include "wordrep/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "wordrep/error.hpp"

namespace wordrep {

Word Word::from_text(const std::string& text) {
    Word w;
    std::istringstream in(text);
    for (std::string token; in >> token;) w.letters.push_back(token);
    return w;
}

std::string Word::to_string() const {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) out += ' ';
        out += letters[i];
    }
    return out;
}

bool alternate(const Word& w, const std::string& a, const std::string& b) {
    if (a == b) throw Error(ErrorCode::same_letter, "alternation of '" + a + "' with itself");
    bool seen_a = false, seen_b = false;
    int last = 0; // 0 none, 1 a, 2 b
    bool broken = false;
    for (const auto& x : w.letters) {
        int which = x == a ? 1 : x == b ? 2 : 0;
        if (which == 0) continue;
        if (which == 1) seen_a = true;
        else seen_b = true;
        if (last == which) broken = true;
        last = which;
    }
    return seen_a && seen_b && !broken;
}

namespace {

long long trailing_subscript(const std::string& label) {
    size_t pos = label.size();
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(label[pos - 1]))) --pos;
    if (pos == label.size()) {
        throw Error(ErrorCode::missing_subscript, "label '" + label + "' has no integer subscript");
    }
    return std::stoll(label.substr(pos));
}

} // namespace

Word dec(const std::vector<std::string>& labels) {
    std::vector<std::pair<long long, std::string>> keyed;
    keyed.reserve(labels.size());
    for (const auto& label : labels) keyed.emplace_back(trailing_subscript(label), label);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    for (size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i - 1].first == keyed[i].first) {
            throw Error(ErrorCode::duplicate_subscript,
                        "labels '" + keyed[i - 1].second + "' and '" + keyed[i].second +
                            "' share subscript " + std::to_string(keyed[i].first));
        }
    }
    Word w;
    w.letters.reserve(keyed.size());
    for (auto& [sub, label] : keyed) w.letters.push_back(std::move(label));
    return w;
}

Word reversal(const Word& w) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

std::optional<int> uniformity(const Word& w) {
    if (w.empty()) throw Error(ErrorCode::empty_word, "uniformity of the empty word");
    std::unordered_map<std::string, int> counts;
    for (const auto& x : w.letters) ++counts[x];
    int k = counts.begin()->second;
    for (const auto& [letter, count] : counts) {
        if (count != k) return std::nullopt;
    }
    return k;
}

namespace {

// Single pass over the word keeping, per vertex pair, which of the two
// letters was seen last; a repeat breaks alternation for the pair.
// `index` maps letters to dense ids; letters mapped to -1 are skipped.
struct PairScan {
    int n;
    std::vector<int> last;    // n*n, 0 none / 1 row-first / 2 col-first
    std::vector<char> broken; // n*n
    std::vector<int> occurrences;

    explicit PairScan(int n_) : n(n_), last(n_ * n_, 0), broken(n_ * n_, 0), occurrences(n_, 0) {}

    void feed(int x) {
        ++occurrences[x];
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            int u = std::min(x, y), v = std::max(x, y);
            int idx = u * n + v;
            int mark = x == u ? 1 : 2;
            if (last[idx] == mark) broken[idx] = 1;
            last[idx] = mark;
        }
    }

    bool alternates(int u, int v) const {
        int a = std::min(u, v), b = std::max(u, v);
        return occurrences[u] > 0 && occurrences[v] > 0 && !broken[a * n + b];
    }
};

} // namespace

Graph graph_of_word(const Word& w) {
    if (w.empty()) throw Error(ErrorCode::empty_word, "graph of the empty word");
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    for (const auto& x : w.letters) {
        if (index.emplace(x, static_cast<int>(labels.size())).second) labels.push_back(x);
    }
    PairScan scan(static_cast<int>(labels.size()));
    for (const auto& x : w.letters) scan.feed(index[x]);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < scan.n; ++u) {
        for (int v = u + 1; v < scan.n; ++v) {
            if (scan.alternates(u, v)) edges.emplace_back(labels[u], labels[v]);
        }
    }
    return build_graph(labels, edges);
}

VerificationReport verify(const Word& w, const Graph& g) {
    const int n = g.vertex_count();
    std::unordered_map<std::string, int> index;
    index.reserve(n);
    for (int i = 0; i < n; ++i) index.emplace(g.labels[i], i);

    PairScan scan(n);
    for (const auto& x : w.letters) {
        auto it = index.find(x);
        if (it != index.end()) scan.feed(it->second);
    }

    VerificationReport report;
    for (int v = 0; v < n; ++v) {
        if (scan.occurrences[v] == 0) report.uncovered_vertices.push_back(g.labels[v]);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (scan.occurrences[u] == 0 || scan.occurrences[v] == 0) continue;
            bool alt = scan.alternates(u, v);
            bool adj = g.has_edge(u, v);
            if (adj && !alt) report.missing_edges.emplace_back(g.labels[u], g.labels[v]);
            if (!adj && alt) report.extra_edges.emplace_back(g.labels[u], g.labels[v]);
        }
    }
    report.ok = report.missing_edges.empty() && report.extra_edges.empty() &&
                report.uncovered_vertices.empty();
    return report;
}

VerificationReport verify_by_pair_scan(const Word& w, const Graph& g) {
    const int n = g.vertex_count();
    std::unordered_set<std::string> present(w.letters.begin(), w.letters.end());

    VerificationReport report;
    for (int v = 0; v < n; ++v) {
        if (!present.count(g.labels[v])) report.uncovered_vertices.push_back(g.labels[v]);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!present.count(g.labels[u]) || !present.count(g.labels[v])) continue;
            bool alt = alternate(w, g.labels[u], g.labels[v]);
            bool adj = g.has_edge(u, v);
            if (adj && !alt) report.missing_edges.emplace_back(g.labels[u], g.labels[v]);
            if (!adj && alt) report.extra_edges.emplace_back(g.labels[u], g.labels[v]);
        }
    }
    report.ok = report.missing_edges.empty() && report.extra_edges.empty() &&
                report.uncovered_vertices.empty();
    return report;
}

std::optional<int> is_permutation_concatenation(const Word& w,
                                                const std::vector<std::string>& alphabet) {
    if (alphabet.empty()) return std::nullopt;
    const size_t block = alphabet.size();
    if (w.size() % block != 0) return std::nullopt;
    const int k = static_cast<int>(w.size() / block);
    std::unordered_map<std::string, int> expected;
    for (const auto& x : alphabet) {
        if (!expected.emplace(x, 0).second) {
            throw Error(ErrorCode::duplicate_label, "alphabet letter '" + x + "' repeated");
        }
    }
    for (int b = 0; b < k; ++b) {
        for (auto& [letter, seen] : expected) seen = 0;
        for (size_t i = b * block; i < (b + 1) * block; ++i) {
            auto it = expected.find(w.letters[i]);
            if (it == expected.end() || it->second > 0) return std::nullopt;
            it->second = 1;
        }
    }
    return k;
}

} // namespace wordrep
