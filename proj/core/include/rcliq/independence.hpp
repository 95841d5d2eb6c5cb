#pragma once

#include <vector>

#include "rcliq/graph.hpp"

namespace rcliq {

/// All independent sets of size exactly k, in ascending lexicographic order
/// (by ascending vertex sequence). Empty when none exist.
std::vector<VertexSet> independent_sets(const Graph& g, int k);

/// Exact independence number via branch and bound (greedy lower bound,
/// clique-cover upper bound).
int independence_number(const Graph& g);

/// alpha of the subgraph induced on `within` (bitmask over g's vertices).
int independence_number_within(const Graph& g, Face within);

/// True iff the subgraph induced on `within` has an independent set of
/// size >= k. Early-exits; the workhorse behind every complex construction.
bool contains_independent(const Graph& g, Face within, int k);

/// Maximum-cardinality matching of a bipartite graph via augmenting paths.
/// Edges returned as (u,v), u < v, sorted.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g, const Bipartition& b);

/// Minimum vertex cover from a maximum matching by the alternating-path
/// construction; |cover| == |matching| on bipartite graphs.
VertexSet minimum_vertex_cover(const Graph& g, const Bipartition& b,
                               const std::vector<std::pair<int, int>>& matching);

}  // namespace rcliq
