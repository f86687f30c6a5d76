#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

// Stable vertex coloring under iterated neighborhood refinement; color ids
// are isomorphism-invariant (ranked by signature), so they constrain the
// canonical permutation search below.
std::vector<int> refine_colors(const Graph& g);

// Minimum graph6 bit string over refinement-respecting permutations, packed
// into 64 bits (column-order upper triangle, first bit most significant).
// Two graphs on equal n are isomorphic iff their codes match. Guard: n <= 11.
std::uint64_t canonical_code(const Graph& g);

Graph graph_from_code(int n, std::uint64_t code);

Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sturan
