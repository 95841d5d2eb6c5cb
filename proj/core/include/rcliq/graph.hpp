#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcliq/vertex_set.hpp"

namespace rcliq {

/// Simple undirected graph on vertices 0..n-1 with dense (bitmask) adjacency.
/// No loops, no multi-edges; adding an existing edge is a no-op.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges as (u,v) pairs with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    Face neighbors_mask(int v) const;
    VertexSet neighbors(int v) const { return VertexSet(n_, neighbors_mask(v)); }
    int degree(int v) const { return std::popcount(neighbors_mask(v)); }

    void set_label(int v, std::string label);
    std::optional<std::string> label(int v) const;
    bool has_labels() const { return !labels_.empty(); }
    const std::map<int, std::string>& labels() const { return labels_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Face> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, std::string> labels_;
};

/// Two-coloring of a bipartite graph; side(v) is 0 or 1.
struct Bipartition {
    std::vector<std::uint8_t> side;
    Face side_mask(int s) const {
        Face m = 0;
        for (std::size_t v = 0; v < side.size(); ++v)
            if (side[v] == s) m |= Face{1} << v;
        return m;
    }
    int side_size(int s) const { return std::popcount(side_mask(s)); }
};

/// m-by-n grid: vertices labeled "(i,j)" for 1<=i<=m, 1<=j<=n at row-major
/// index (i-1)*n + (j-1), with the unit horizontal/vertical edges.
/// Requires m, n >= 2 (a path does not count as a grid).
Graph make_grid(int m, int n);

/// BFS 2-coloring; throws OddCycleError with an odd-cycle witness otherwise.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new index -> original vertex, ascending
};

/// Subgraph induced on w, re-indexed to 0..|w|-1 in ascending vertex order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

/// All w with {u,w} and {v,w} both edges. Requires u != v.
VertexSet common_neighbors(const Graph& g, int u, int v);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);

/// |E| - |V| + (number of connected components).
int cycle_rank(const Graph& g);

}  // namespace rcliq
