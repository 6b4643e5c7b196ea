#pragma once

#include <optional>

#include "tanglekit/multigraph.hpp"

namespace tk {

// k pairwise edge-disjoint spanning trees of g, or nullopt when no packing
// exists. Matroid union with augmenting exchange paths.
std::optional<std::vector<std::vector<EdgeId>>> pack_trees(const Multigraph& g,
                                                           int k);

// True iff every vertex partition P has at least k(|P|-1) cross-edges.
// Guarded brute force over all partitions; |V| <= 10.
bool cut_condition(const Multigraph& g, int k);
bool cut_condition_serial(const Multigraph& g, int k);

// As cut_condition, but reports the first violating partition in
// restricted-growth order (nullopt when the condition holds).
std::optional<VertexPartition> cut_condition_witness(const Multigraph& g, int k);

// (max internally disjoint a-b paths, min a-b edge cut size).
std::pair<int, int> local_connectivity(const Multigraph& g, VertexId a,
                                       VertexId b);

}  // namespace tk
