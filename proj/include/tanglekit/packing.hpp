#pragma once

#include "tanglekit/tangles.hpp"
#include "tanglekit/treepack.hpp"

namespace tk {

struct AuxEdge {
    enum class Kind { EndEdge, CritEdge } kind = Kind::CritEdge;
    VertexId u = -1;
    VertexId v = -1;   // CritEdge partner; EndEdge: -1
    int end_id = -1;   // EndEdge target
    VSet label;        // CritEdge: the critical set
};

struct AuxGraph {
    int level = 0;
    Multigraph base;
    std::vector<AuxEdge> aux;  // aux edge id = index
};

// Base level graph plus auxiliary edges: one EndEdge per certified
// domination pair, one CritEdge per vertex pair inside each critical set.
AuxGraph aux_graph(const Presentation& p, int n);

struct VStar {
    std::vector<VertexId> order;  // the linear order, least to greatest
    std::vector<VSet> chain;
    int paths_sampled = 0;
    int threshold = 0;
    int level = 0;
};

// The linear-order extraction for a certified inseparable pair: order types
// of the sampled path family are kept when enough paths realize them, and a
// thread through the kept types is read off.
VStar vstar(const Presentation& p, VertexId x, VertexId y, int depth);

struct GapEntry {
    VertexId u = -1;
    VertexId t = -1;
    enum class Kind { End, Crit, Unknown } kind = Kind::Unknown;
    int end_id = -1;
    VSet crit;
};

std::vector<GapEntry> classify_gaps(const Presentation& p, const VStar& vs, int n);

struct AtstResult {
    // synthetic vertex ids: certified end e is the node -(e+1)
    std::vector<Multigraph> quotients;            // H_0 .. H_m (aux cross-edges)
    std::vector<std::vector<EdgeId>> trees;       // T_n as aux edge ids
    std::vector<VSet> expanded;                   // X_n per step
};

// Star-expansion spanning trees of the auxiliary component quotients
// ("skeleton": combinatorial aux connectivity plus certified end-absorption).
AtstResult atst_levels(const Presentation& p, const SimClass& comp,
                       const std::vector<VertexId>& enumeration, int m, int n);

struct LevelPack {
    std::vector<EdgeId> f;
    std::vector<std::vector<EdgeId>> trees;  // k trees on the level's cross-edges
};

struct PackResult {
    enum class Status { Success, CutConditionFailed, ThreadEmpty } status =
        Status::Success;
    std::optional<VertexPartition> violating;
    std::vector<LevelPack> levels;
    std::map<EdgeId, int> limit_assignment;  // edge -> tree index (0-based)
    std::vector<AuxEdge> completion;         // shared auxiliary completion edges
    bool enumeration_truncated = false;
    int level = 0;
};

// Level packings of the G.F system, lifted by backward-pruning thread search
// and completed with one shared auxiliary tree per inseparability class.
PackResult pack_pipeline(const Presentation& p, int k, int chain_length, int n,
                         int candidate_cap = 200);

}  // namespace tk
