#ifndef WORDREP_IO_HPP
#define WORDREP_IO_HPP

#include <string>

#include "wordrep/graph.hpp"
#include "wordrep/relabel.hpp"

namespace wordrep {

/// Parses the edge-list format:
///   # comment              ignored (as are blank lines)
///   p <count>              optional declared vertex count
///   v <label>              declares a vertex (allows isolated vertices)
///   e <label> <label>      declares an edge, auto-declaring endpoints
/// Labels are whitespace-free strings; fields are separated by runs of
/// spaces or tabs; LF and CRLF both accepted. Vertices are ordered by
/// first mention. A declared count that disagrees with the number of
/// distinct labels is a count_mismatch.
/// Throws parse_error (with line number), duplicate_label, self_loop,
/// count_mismatch.
Graph parse_edge_list(const std::string& text);

/// Edge-list text that parses back to an equal graph (same vertex order).
std::string emit_edge_list(const Graph& g);

enum class ResultFormat { json, word };

/// Serializes a verified representation: `word` is the bare word as
/// space-separated labels; `json` carries the word, all permutation
/// blocks (epsilon blocks as empty arrays, preserving the template
/// numbering), the bound report, the relabel map, and the policy name.
/// Throws unverified_representation if rep.verified.ok is false.
std::string emit_result(const Representation& rep, ResultFormat format);

/// Same for a representation with isolated vertices wrapped back in.
/// The permutation blocks are those of the core graph; the final word
/// additionally interleaves the isolated vertices.
std::string emit_result(const WrappedRepresentation& rep, ResultFormat format);

} // namespace wordrep

#endif
