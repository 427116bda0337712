#ifndef WORDREP_WORDS_HPP
#define WORDREP_WORDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

/// Finite sequence of vertex labels.
struct Word {
    std::vector<std::string> letters;

    Word() = default;
    explicit Word(std::vector<std::string> ls) : letters(std::move(ls)) {}

    /// Splits whitespace-separated labels (spaces, tabs, newlines).
    static Word from_text(const std::string& text);

    /// Labels joined by single spaces.
    std::string to_string() const;

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }
    bool operator==(const Word& other) const { return letters == other.letters; }
};

/// Outcome of checking a word against a graph. `ok` holds iff all three
/// lists are empty.
struct VerificationReport {
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> missing_edges; // adjacent, not alternating
    std::vector<std::pair<std::string, std::string>> extra_edges;   // alternating, not adjacent
    std::vector<std::string> uncovered_vertices;                    // in graph, absent from word
};

/// True iff the subword of all occurrences of a and b strictly
/// alternates. A pair where either letter is absent from w does not
/// alternate. Throws same_letter for a == b.
bool alternate(const Word& w, const std::string& a, const std::string& b);

/// Dec(A): each label once, trailing integer subscripts strictly
/// decreasing. Throws missing_subscript / duplicate_subscript.
Word dec(const std::vector<std::string>& labels);

Word reversal(const Word& w);

/// k if every distinct letter occurs exactly k times, nullopt otherwise.
/// Throws empty_word.
std::optional<int> uniformity(const Word& w);

/// Graph whose vertices are the distinct letters of w (in first-occurrence
/// order) with an edge ab iff a and b alternate in w. Throws empty_word.
Graph graph_of_word(const Word& w);

/// Compares the word against g on g's vertex set: vertices of g absent
/// from w are reported uncovered; edge mismatches are reported over the
/// covered pairs. Letters of w outside g are ignored. Single-pass scan,
/// O(|w|*|V| + |V|^2).
VerificationReport verify(const Word& w, const Graph& g);

/// Reference implementation of verify: one alternation scan per vertex
/// pair, O(|V|^2 * |w|). Kept independent so the two routes can be checked
/// against each other.
VerificationReport verify_by_pair_scan(const Word& w, const Graph& g);

/// k if w splits into k consecutive blocks, each a permutation of
/// `alphabet`; nullopt otherwise. The empty word splits into 0 blocks.
std::optional<int> is_permutation_concatenation(const Word& w,
                                                const std::vector<std::string>& alphabet);

} // namespace wordrep

#endif
