#pragma once

#include <array>
#include <random>
#include <vector>

#include "rcliq/graph.hpp"

namespace rcliq {

enum class GlueKind { edge, corner };

/// One gluing step of a square sequence. The attached 4-cycle has vertices
/// {x,y,u,v} and edges {x,u},{x,v},{y,u},{y,v}.
///   edge kind:   attach = [u,y], an existing edge; new vertices x (adjacent
///                to u) then v (adjacent to x and y), in that index order.
///   corner kind: attach = [u,y,v], an existing path u-y-v; new vertex x
///                adjacent to u and v.
/// new_vertices is filled in by build_square_sequence.
struct GlueStep {
    GlueKind kind = GlueKind::edge;
    std::vector<int> attach;
    std::vector<int> new_vertices;
};

/// The i-th square's vertices inside H_i, by role.
struct Square {
    int x, y, u, v;
    std::array<std::pair<int, int>, 4> edges() const {
        return {{{x, u}, {x, v}, {y, u}, {y, v}}};
    }
};

/// A validated square sequence: graphs H_1 c ... c H_n built from an initial
/// 4-cycle (vertices 0..3, edges 01,12,23,30) by edge / corner gluing, with
/// the attached squares G_1..G_n and their role labels.
class SquareSequence {
  public:
    int length() const { return static_cast<int>(graphs_.size()); }
    /// H_i, 1-based.
    const Graph& graph(int i) const { return graphs_.at(i - 1); }
    const Graph& final_graph() const { return graphs_.back(); }
    /// G_i, 1-based. G_1 is the initial square (x=0, u=1, y=2, v=3).
    const Square& square(int i) const { return squares_.at(i - 1); }
    /// Steps 2..n; steps()[j] built H_{j+2} from H_{j+1}.
    const std::vector<GlueStep>& steps() const { return steps_; }

  private:
    friend SquareSequence build_square_sequence(const std::vector<GlueStep>&);
    std::vector<GlueStep> steps_;
    std::vector<Graph> graphs_;
    std::vector<Square> squares_;
};

/// Materializes H_1..H_n from a gluing script, assigning new vertex indices
/// in order (x before v) and validating every attachment. Checks on every
/// step that H_i stays connected, bipartite, triangle-free and that its
/// cycle rank equals i. Throws InvalidAttachment (1-based step index of the
/// offending square, i.e. script position + 2).
SquareSequence build_square_sequence(const std::vector<GlueStep>& script);

struct GridSequence {
    SquareSequence seq;
    std::vector<int> grid_to_seq;  // row-major grid index -> sequence vertex
};

/// The canonical square sequence of the m-by-n grid: unit squares row by
/// row, bottom up; the first row and the first square of every later row
/// edge-glue, everything else corner-glues. The final graph is isomorphic
/// to make_grid(m,n) under grid_to_seq (asserted).
GridSequence grid_sequence(int m, int n);

/// Seeded random sequence: each step picks uniformly among all valid
/// attachments (ordered edges for edge gluing, paths u-y-v with u<v for
/// corner gluing).
SquareSequence random_square_sequence(int length, std::mt19937_64& rng);

/// Same, restricted to edge gluings.
SquareSequence random_edge_sequence(int length, std::mt19937_64& rng);

}  // namespace rcliq
