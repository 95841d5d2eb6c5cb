#pragma once

#include <unordered_set>
#include <vector>

#include "rcliq/graph.hpp"
#include "rcliq/vertex_set.hpp"

namespace rcliq {

/// Abstract simplicial complex stored as the explicit face family over a
/// fixed vertex universe, grouped by dimension, each level in canonical lex
/// order. Vertices of the universe need not be faces.
///
/// Two degenerate complexes are distinguished: the void complex (no faces at
/// all) and the empty-face-only complex (just the empty face, dimension -1).
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int universe);
    static SimplicialComplex empty_face_only(int universe);
    static SimplicialComplex full_simplex(int universe);
    /// From the complete face family (nonempty faces; downward closure is
    /// validated). has_empty must be true whenever faces is nonempty.
    static SimplicialComplex from_faces(int universe, std::vector<Face> faces,
                                        bool has_empty = true);
    /// Downward closure of a facet list. An empty list gives the void
    /// complex; include an empty facet to get the empty-face-only complex.
    static SimplicialComplex from_facets(int universe, const std::vector<Face>& facets,
                                         bool include_empty_face = false);
    /// Vertices and edges of a graph as a 1-dimensional complex.
    static SimplicialComplex from_graph(const Graph& g);

    int universe() const { return universe_; }
    bool is_void() const { return !has_empty_; }
    bool has_empty_face() const { return has_empty_; }
    /// -1 for the empty-face-only complex; meaningless (-2) for void.
    int dimension() const;

    bool contains(Face f) const;
    const std::vector<std::vector<Face>>& faces_by_dim() const { return faces_by_dim_; }
    const std::vector<Face>& faces(int dim) const { return faces_by_dim_.at(dim); }

    long long face_count() const;  // nonempty faces
    std::vector<long long> f_vector() const;

    /// Faces with no proper superface, sorted by (size, lex).
    std::vector<Face> facets() const;

    /// Union of all faces (may be a strict subset of the universe).
    Face support() const;

    /// Re-embeds every face through map (old vertex -> new vertex, injective
    /// on the support). Vertices mapped to -1 must not occur in any face.
    SimplicialComplex relabeled(int new_universe, const std::vector<int>& map) const;
    /// Identity embedding into a universe of new_size >= universe().
    SimplicialComplex with_universe(int new_size) const;

    bool operator==(const SimplicialComplex& o) const {
        return universe_ == o.universe_ && has_empty_ == o.has_empty_ &&
               faces_by_dim_ == o.faces_by_dim_;
    }

  private:
    int universe_ = 0;
    bool has_empty_ = false;
    std::vector<std::vector<Face>> faces_by_dim_;
    std::unordered_set<Face> face_set_;
};

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Inclusion-minimal subsets of the universe that are not faces, in
/// (size, lex) order. The empty list iff K is the full simplex.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& k);

/// True iff every subset of the universe of size <= 3 is a face
/// (a sufficient condition for simple connectivity).
bool full_two_skeleton(const SimplicialComplex& k);

/// Join on the disjoint union of universes; L's vertices are offset by
/// K.universe().
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Faces a u b for a in K, b in L, over one shared universe.
SimplicialComplex embedded_join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Join with the point `apex`; apex must not lie in K's support (the
/// universe grows to include it if needed).
SimplicialComplex cone(const SimplicialComplex& k, int apex);

/// Join with two fresh points (universe grows by 2).
SimplicialComplex suspension(const SimplicialComplex& k);

/// Combinatorial Alexander dual: faces are complements of non-faces.
/// Enumerates all 2^universe subsets; guarded by cap.
SimplicialComplex alexander_dual(const SimplicialComplex& k, int cap_universe = 25);

}  // namespace rcliq
