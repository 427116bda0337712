#ifndef WORDREP_ENUMERATE_HPP
#define WORDREP_ENUMERATE_HPP

#include <functional>

#include "wordrep/graph.hpp"

namespace wordrep {

/// Calls fn once per edge subset of K_{m,n} (vertex labels a1..am,
/// b1..bn) in which no vertex is isolated, in ascending edge-bitmask
/// order (bit i*n+j is the edge a_{i+1}-b_{j+1}). Requires m*n <= 24.
void for_each_no_isolated_bipartite(int m, int n, const std::function<void(const Graph&)>& fn);

} // namespace wordrep

#endif
