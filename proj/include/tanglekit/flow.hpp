#pragma once

#include "tanglekit/multigraph.hpp"

namespace tk {

// Maximum number of pairwise edge-disjoint a-b paths (= min edge cut by
// Menger). `min_cut` receives the edge ids of one minimum cut when non-null.
int max_edge_disjoint_paths(const Multigraph& g, VertexId a, VertexId b,
                            std::vector<EdgeId>* min_cut = nullptr);

// Maximum number of internally disjoint a-b paths (parallel a-b edges each
// count as one path). `separator` receives a minimum vertex separator taken
// from V - {a,b} when non-null and a,b are non-adjacent.
int max_internally_disjoint_paths(const Multigraph& g, VertexId a, VertexId b,
                                  VSet* separator = nullptr);

// Variant of the vertex-disjoint computation in which the vertices of
// `uncuttable` get infinite capacity (they may be shared by many paths).
int max_internally_disjoint_paths_avoiding(const Multigraph& g, VertexId a,
                                           VertexId b, const VSet& uncuttable,
                                           VSet* separator = nullptr);

// Extracts a maximal family of edge-disjoint a-b paths (deterministic,
// shortest-first). Each path is a vertex sequence from a to b.
std::vector<std::vector<VertexId>> edge_disjoint_paths(const Multigraph& g,
                                                       VertexId a, VertexId b,
                                                       int max_paths = -1);

// Max fan: maximum number of a-to-target paths, pairwise disjoint except
// at a, each ending in a distinct vertex of `targets`.
int max_vertex_fan(const Multigraph& g, VertexId a, const VSet& targets,
                   VSet* separator = nullptr);

}  // namespace tk
