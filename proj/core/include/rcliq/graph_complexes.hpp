#pragma once

#include "rcliq/graph.hpp"
#include "rcliq/simplicial_complex.hpp"

namespace rcliq {

/// k-robust clique complex: faces are the vertex sets containing no
/// independent set of size k (alpha of the induced subgraph < k). Minimal
/// non-faces are exactly the independent k-sets. Requires k >= 2.
///
/// Bipartite graphs are enumerated per side (a face carries at most k-1
/// vertices of either side); otherwise faces grow level by level from the
/// singletons.
SimplicialComplex robust_clique_complex(const Graph& g, int k);

/// Total k-cut complex: faces are the W whose complement still contains an
/// independent set of size k. Direct construction enumerates all
/// 2^vertex_count subsets and is guarded by cap_universe (default 16);
/// larger instances should go through the Alexander dual of
/// robust_clique_complex instead. May legitimately be void (k > alpha).
SimplicialComplex total_cut_complex(const Graph& g, int k, int cap_universe = 16);

/// Membership test for total_cut_complex without building it.
bool is_total_cut_face(const Graph& g, Face w, int k);

/// True iff every vertex subset of size <= 3 is a face of the total k-cut
/// complex, checked combinatorially without building the complex.
bool total_cut_full_two_skeleton(const Graph& g, int k);

}  // namespace rcliq
