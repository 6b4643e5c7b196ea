#pragma once

#include <map>
#include <optional>
#include <utility>

#include "tanglekit/core.hpp"

namespace tk {

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;  // u <= v not required; loops (u == v) allowed
};

// Finite multigraph with loops and parallel edges. Vertices and edges are
// kept sorted by id so that all iteration is deterministic.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(VSet vertices, std::vector<Edge> edges,
               std::map<VertexId, VSet> labels = {});

    const VSet& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<VertexId, VSet>& labels() const { return labels_; }

    bool has_vertex(VertexId v) const { return contains(vertices_, v); }
    const Edge* find_edge(EdgeId id) const;

    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edges_.size(); }

    // Loops contribute 2.
    int degree(VertexId v) const;

    // Neighbours of v (excluding v itself unless a loop is present; loops
    // do not add v as its own neighbour).
    VSet neighbours(VertexId v) const;

    // Edge ids incident with v (loops included once).
    std::vector<EdgeId> incident(VertexId v) const;

    bool connected() const;

private:
    VSet vertices_;
    std::vector<Edge> edges_;
    std::map<VertexId, VSet> labels_;  // dummy vertex -> original vertex set
};

// Disjoint nonempty blocks covering a ground set; canonical form keeps each
// block sorted and blocks ordered by minimal element.
class VertexPartition {
public:
    VertexPartition() = default;
    explicit VertexPartition(std::vector<VSet> blocks);

    const std::vector<VSet>& blocks() const { return blocks_; }
    VSet ground() const;
    std::size_t size() const { return blocks_.size(); }

    // Index of the block containing v, or -1.
    int block_of(VertexId v) const;

    bool operator==(const VertexPartition& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<VSet> blocks_;
};

struct Cut {
    std::vector<EdgeId> edges;
    VSet side1;
    VSet side2;
};

// Validates that `c` is a cut of g: every listed edge crosses the sides and
// no other edge does. Throws Error("InvalidCut") otherwise.
void validate_cut(const Multigraph& g, const Cut& c);

struct ComponentNbhd {
    VSet vertices;
    VSet nbhd;  // x-vertices adjacent to the component
};

// Components of g - x together with their exact neighbourhoods in x,
// ordered by minimal contained vertex.
std::vector<ComponentNbhd> components(const Multigraph& g, const VSet& x);

// One vertex per block (id = minimal block element, label = block); edges are
// exactly the cross-edges, ids preserved, internal edges dropped.
Multigraph contract_partition(const Multigraph& g, const VertexPartition& p);

// One vertex per component of g - f; f-edges between distinct components
// become cross-edges, everything else becomes a loop. |E| is preserved.
Multigraph contract_by_edges(const Multigraph& g, const std::vector<EdgeId>& f);

std::size_t cross_edge_count(const Multigraph& g, const VertexPartition& p);

// Coarsest common refinement (blockwise intersections).
VertexPartition refine(const VertexPartition& p, const VertexPartition& q);

// All set partitions of `ground`, in restricted-growth-string order.
std::vector<VertexPartition> all_partitions(const VSet& ground);

}  // namespace tk
