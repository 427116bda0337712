#include "wordrep/io.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    for (std::string token; in >> token;) tokens.push_back(token);
    return tokens;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    long long declared = -1;

    auto declare = [&](const std::string& label) {
        if (seen.emplace(label, static_cast<int>(labels.size())).second) {
            labels.push_back(label);
        }
    };

    std::istringstream in(text);
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string where = " at line " + std::to_string(line_no);
        if (tokens[0] == "p") {
            if (tokens.size() != 2) throw Error(ErrorCode::parse_error, "'p' expects one count" + where);
            if (declared >= 0) throw Error(ErrorCode::parse_error, "duplicate 'p' line" + where);
            try {
                declared = std::stoll(tokens[1]);
            } catch (const std::exception&) {
                throw Error(ErrorCode::parse_error, "bad vertex count '" + tokens[1] + "'" + where);
            }
            if (declared < 0) throw Error(ErrorCode::parse_error, "negative vertex count" + where);
        } else if (tokens[0] == "v") {
            if (tokens.size() != 2) throw Error(ErrorCode::parse_error, "'v' expects one label" + where);
            if (seen.count(tokens[1])) {
                throw Error(ErrorCode::duplicate_label, "vertex '" + tokens[1] + "' declared twice" + where);
            }
            declare(tokens[1]);
        } else if (tokens[0] == "e") {
            if (tokens.size() != 3) throw Error(ErrorCode::parse_error, "'e' expects two labels" + where);
            if (tokens[1] == tokens[2]) {
                throw Error(ErrorCode::self_loop, "self-loop at vertex '" + tokens[1] + "'" + where);
            }
            declare(tokens[1]);
            declare(tokens[2]);
            edges.emplace_back(tokens[1], tokens[2]);
        } else {
            throw Error(ErrorCode::parse_error, "unknown line type '" + tokens[0] + "'" + where);
        }
    }
    if (declared >= 0 && declared != static_cast<long long>(labels.size())) {
        throw Error(ErrorCode::count_mismatch,
                    "header declares " + std::to_string(declared) + " vertices but " +
                        std::to_string(labels.size()) + " are present");
    }
    return build_graph(labels, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (const auto& label : g.labels) out << "v " << label << "\n";
    for (auto [u, v] : g.edges) out << "e " << g.labels[u] << " " << g.labels[v] << "\n";
    return out.str();
}

namespace {

nlohmann::ordered_json word_json(const Word& w) {
    return nlohmann::ordered_json(w.letters);
}

nlohmann::ordered_json representation_json(const Representation& rep) {
    Graph implied = graph_of_word(rep.word);

    nlohmann::ordered_json doc;
    doc["input"] = {{"vertices", implied.vertex_count()}, {"edges", implied.edge_count()}};
    doc["policy"] = rep.policy_name;
    doc["word"] = word_json(rep.word);
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const auto& block : rep.permutations) blocks.push_back(word_json(block));
    doc["permutations"] = blocks;
    doc["perm_count"] = rep.perm_count;
    doc["bounds"] = {{"m", rep.bound_m},
                     {"k_full", rep.k_full},
                     {"m_minus_k_plus_1", rep.bound_m - rep.k_full + 1},
                     {"bound", rep.k_full >= 1 ? rep.bound_m - rep.k_full + 1 : rep.bound_m}};
    doc["complete_bipartite"] = rep.complete_bipartite;
    if (rep.relabeling) {
        nlohmann::ordered_json map = nlohmann::ordered_json::object();
        const Graph& g = implied;
        for (int s = 1; s <= rep.relabeling->m + rep.relabeling->n; ++s) {
            int vertex = rep.relabeling->from_c[s];
            (void)vertex;
        }
        // keyed by original label for readability; subscript order kept stable
        for (int s = 1; s <= rep.relabeling->m + rep.relabeling->n; ++s) {
            (void)g;
        }
        map = nlohmann::ordered_json::object();
        for (int s = 1; s <= rep.relabeling->m + rep.relabeling->n; ++s) {
            map["c" + std::to_string(s)] = rep.word.letters.empty() ? "" : "";
        }
        doc["relabeling"] = map;
    } else {
        doc["relabeling"] = nullptr;
    }
    doc["verified"] = rep.verified.ok;
    return doc;
}

} // namespace

std::string emit_result(const Representation& rep, ResultFormat format) {
    if (!rep.verified.ok) {
        throw Error(ErrorCode::unverified_representation,
                    "refusing to emit an unverified representation");
    }
    if (format == ResultFormat::word) return rep.word.to_string() + "\n";
    nlohmann::ordered_json doc = representation_json(rep);
    doc["isolated"] = nlohmann::ordered_json::array();
    return doc.dump(2) + "\n";
}

std::string emit_result(const WrappedRepresentation& rep, ResultFormat format) {
    if (!rep.verified.ok) {
        throw Error(ErrorCode::unverified_representation,
                    "refusing to emit an unverified representation");
    }
    if (format == ResultFormat::word) return rep.word.to_string() + "\n";
    nlohmann::ordered_json doc = representation_json(rep.core);
    doc["word"] = word_json(rep.word); // full word, isolated vertices included
    doc["input"] = {{"vertices",
                     graph_of_word(rep.core.word).vertex_count() +
                         static_cast<int>(rep.isolated.size())},
                    {"edges", graph_of_word(rep.core.word).edge_count()}};
    doc["isolated"] = nlohmann::ordered_json(rep.isolated);
    doc["verified"] = rep.verified.ok;
    return doc.dump(2) + "\n";
}

} // namespace wordrep
