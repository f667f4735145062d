#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "moduli/labels.hpp"

namespace moduli {

// Dual graph of a boundary stratum of the space of stable rational curves
// with labeled marked points: vertices are components, edges are nodes,
// leaf `j` marks the component carrying marked point j. Every vertex has
// valence >= 3 counting edges and leaves.
//
// Instances are immutable and stored in canonical form (vertices renumbered
// by a DFS rooted at the carrier of leaf 1, branches ordered by their least
// leaf), so equality of values is equality of strata.
class ComplexStableTree {
public:
    static ComplexStableTree one_vertex(int leaves);
    static ComplexStableTree make(int leaves, int vertices,
                                  std::vector<std::pair<int, int>> edges,
                                  std::vector<int> leaf_vertex);

    int leaf_count() const { return static_cast<int>(leaf_vertex_.size()); }
    int vertex_count() const { return vertices_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int leaf_vertex(int label) const;

    auto operator<=>(const ComplexStableTree&) const = default;

private:
    ComplexStableTree() = default;
    void validate() const;
    void canonicalize();

    int vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;  // (u,v) with u < v, sorted
    std::vector<int> leaf_vertex_;            // index label-1
};

// Dual graph of a real boundary stratum: the involution acts on the graph,
// real marked points sit on fixed vertices, and the two points of conjugate
// pair i are exchanged by the involution. Canonical form as above, rooted at
// the carrier of the least leaf token (real labels before pair labels).
class RealStableTree {
public:
    static RealStableTree one_vertex(int real_points, int pairs);
    static RealStableTree make(int vertices, std::vector<std::pair<int, int>> edges,
                               std::vector<int> involution, std::vector<int> real_leaf_vertex,
                               std::vector<std::pair<int, int>> pair_vertices);

    int real_count() const { return static_cast<int>(real_leaf_vertex_.size()); }
    int pair_count() const { return static_cast<int>(pair_vertex_.size()); }
    int vertex_count() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int involution(int v) const;
    int real_leaf_vertex(int label) const;
    int pair_plus_vertex(int label) const;
    int pair_minus_vertex(int label) const;

    auto operator<=>(const RealStableTree&) const = default;

private:
    RealStableTree() = default;
    void validate() const;
    void canonicalize();

    int vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> involution_;                       // index by vertex
    std::vector<int> real_leaf_vertex_;                 // index label-1
    std::vector<std::pair<int, int>> pair_vertex_;      // (plus, minus), index label-1
};

// Node-identifying gluing: input slot i of `a` (which has k+1 leaves) meets
// the last leaf of `b` (l+1 leaves); remaining leaves are renamed by
// glue_label_maps(k, l, i). Output has k+l leaves.
ComplexStableTree glue_complex(const ComplexStableTree& a, int i, const ComplexStableTree& b);

// Real-real gluing: real point i of `a` meets the last real point of `b`.
// Real labels of `a` above i shift past the k' incoming ones; pair labels of
// `b` are appended after those of `a`. Allowed for i up to a.real_count().
RealStableTree glue_real_real(const RealStableTree& a, int i, const RealStableTree& b);

// Real-complex gluing: a copy of `b` is attached at the plus point of pair i
// of `a` and a mirror copy at the minus point; the involution exchanges the
// two copies. Labels 1..l' of `b` become pairs i..i+l'-1; later pairs of `a`
// shift up by l'-1. When `a` has no real points the last pair is the output
// and cannot be glued.
RealStableTree glue_real_complex(const RealStableTree& a, int i, const ComplexStableTree& b);

// Drop the leaves outside `keep` (renaming the survivors 1..|keep| in order)
// and contract edges until every vertex is stable again.
ComplexStableTree forget_stabilize(const ComplexStableTree& t, const LabelVec& keep);

// The 2-block partition of the leaf labels induced by each edge.
std::vector<Partition2> edge_partitions(const ComplexStableTree& t);

}  // namespace moduli
