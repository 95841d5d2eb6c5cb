#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rcliq/errors.hpp"

namespace rcliq {

/// Faces and vertex subsets are bitmasks over a universe of at most 63
/// vertices; bit v set means vertex v is a member.
using Face = std::uint64_t;

inline constexpr int kMaxUniverse = 63;

inline int face_size(Face f) { return std::popcount(f); }

/// Canonical face order: by the ascending vertex sequence, lexicographically.
/// ({0,5} sorts before {1,2}; used for every per-dimension face list.)
inline bool face_lex_less(Face a, Face b) {
    if (a == b) return false;
    Face diff = a ^ b;
    Face low = diff & (~diff + 1);
    return (a & low) != 0;
}

inline std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    while (f) {
        out.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return out;
}

/// Compact subset of [0, universe) with constant-time membership.
/// Iteration order is ascending vertex index.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe, Face bits = 0) : universe_(universe), bits_(bits) {
        if (universe < 0 || universe > kMaxUniverse)
            throw InputError("vertex universe must be in [0, 63]");
        if (universe < kMaxUniverse && (bits >> universe) != 0)
            throw InputError("vertex set member out of range");
    }
    VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int universe) {
        return VertexSet(universe, universe == 0 ? 0 : (~Face{0} >> (64 - universe)));
    }

    int universe() const { return universe_; }
    Face bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int v) const { return v >= 0 && v < universe_ && (bits_ >> v & 1); }

    void insert(int v) {
        if (v < 0 || v >= universe_) throw InputError("vertex set member out of range");
        bits_ |= Face{1} << v;
    }
    void erase(int v) {
        if (v >= 0 && v < universe_) bits_ &= ~(Face{1} << v);
    }

    VertexSet union_with(const VertexSet& o) const { return sibling(bits_ | o.bits_, o); }
    VertexSet intersect(const VertexSet& o) const { return sibling(bits_ & o.bits_, o); }
    VertexSet difference(const VertexSet& o) const { return sibling(bits_ & ~o.bits_, o); }
    VertexSet complement() const { return VertexSet(universe_, full(universe_).bits() & ~bits_); }
    bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> to_vector() const { return face_vertices(bits_); }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && bits_ == o.bits_;
    }

  private:
    VertexSet sibling(Face bits, const VertexSet& o) const {
        if (universe_ != o.universe_) throw InputError("vertex set universe mismatch");
        return VertexSet(universe_, bits);
    }

    int universe_ = 0;
    Face bits_ = 0;
};

}  // namespace rcliq
