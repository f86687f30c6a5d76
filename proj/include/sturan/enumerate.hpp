#pragma once

#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

// All isomorphism classes on n vertices, one canonical representative each,
// ordered by canonical code. Cached across calls. Guard: n <= 9 (n = 9 exists
// for the co-connected extremal search; expect ~275k classes there).
const std::vector<Graph>& enumerate_graphs(int n);

// The K_{r+1}-free classes (clique number <= r), same ordering and caching.
const std::vector<Graph>& enumerate_clique_free(int n, int r);

}  // namespace sturan
