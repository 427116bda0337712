#include "wordrep/enumerate.hpp"

#include <cstdint>

#include "wordrep/error.hpp"

namespace wordrep {

void for_each_no_isolated_bipartite(int m, int n, const std::function<void(const Graph&)>& fn) {
    if (m < 1 || n < 1) throw Error(ErrorCode::zero_side, "sides must be nonempty");
    if (m * n > 24) throw Error(ErrorCode::invalid_argument, "edge set too large to enumerate");

    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 1; j <= n; ++j) labels.push_back("b" + std::to_string(j));

    std::vector<uint32_t> row_bits(m, 0), col_bits(n, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            row_bits[i] |= 1u << (i * n + j);
            col_bits[j] |= 1u << (i * n + j);
        }
    }

    const uint32_t total = 1u << (m * n);
    for (uint32_t mask = 0; mask < total; ++mask) {
        bool covered = true;
        for (int i = 0; i < m && covered; ++i) covered = (mask & row_bits[i]) != 0;
        for (int j = 0; j < n && covered; ++j) covered = (mask & col_bits[j]) != 0;
        if (!covered) continue;

        std::vector<std::pair<std::string, std::string>> edges;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << (i * n + j))) edges.emplace_back(labels[i], labels[m + j]);
            }
        }
        fn(build_graph(labels, edges));
    }
}

} // namespace wordrep
