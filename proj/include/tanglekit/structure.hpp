#pragma once

#include "tanglekit/presentation.hpp"

namespace tk {

struct LevelComponent {
    VSet vertices;
    VSet nbhd;  // exact for closed components, partial for open ones
};

struct ComponentReport {
    int level = 0;
    VSet separator;
    std::vector<LevelComponent> closed;
    std::vector<LevelComponent> open;
};

// Closed components contain no frontier vertex, so their vertex sets and
// X-attachments are final.
ComponentReport component_report(const Presentation& p, const VSet& x, int n);

struct CritWitness {
    VSet x;
    VSet y;  // y subseteq x
    int witness_count = 0;
    int level = 0;
    bool certified = false;
};

// All Y subseteq X with >= k closed components of G - X having neighbourhood
// exactly Y at level n.
std::vector<CritWitness> crit_of(const Presentation& p, const VSet& x, int n, int k);

// Searches subsets (size <= size_bound) of degree-growing vertices for
// k-witnessed critical sets. Sound; complete relative to the certificate for
// catalog families at sufficient depth.
std::vector<CritWitness> enumerate_crit(const Presentation& p, int size_bound,
                                        int n, int k);

struct EndSurrogate {
    int end_id = -1;  // certified end id, or -1 when unmatched
    std::string name;
    std::vector<std::pair<VSet, VSet>> thread;  // (separator, component)
    VSet dominators;
    bool matched = false;
};

// Direction threads over the canonical separator chain (non-frontier vertex
// sets per level), matched against certified ends where possible.
std::vector<EndSurrogate> directions(const Presentation& p, int depth);

enum class Verdict { Witnessed, Refuted, Unknown };

struct DominationResult {
    Verdict verdict = Verdict::Unknown;
    int fan_size = 0;
    VSet separator;  // refutation evidence
    std::string source;
};

DominationResult dominates(const Presentation& p, VertexId u, int end_id, int n);

struct PointRef {
    bool is_end = false;
    VertexId vertex = -1;
    int end_id = -1;
    static PointRef of_vertex(VertexId v) { return {false, v, -1}; }
    static PointRef of_end(int e) { return {true, -1, e}; }
};

struct SeparabilityResult {
    Verdict verdict = Verdict::Unknown;  // Witnessed / Refuted(=Separated) / Unknown
    int paths = 0;
    std::vector<EdgeId> cut;
    VSet side;  // closed side of the separating cut, when known
    std::string source;
};

SeparabilityResult not_finitely_separable(const Presentation& p, PointRef a,
                                          PointRef b, int n);

struct LinkResult {
    Verdict verdict = Verdict::Unknown;
    VSet x;          // witnessing X for Witnessed
    int cut_size = 0;
    std::string source;
};

// Corollary-style strong linkage: some X containing a and b such that no
// small vertex set disjoint from X separates a and b in G - E(X).
LinkResult strongly_linked(const Presentation& p, VertexId a, VertexId b, int n);

struct CompactnessReport {
    std::optional<bool> ends_locally_compact;
    std::optional<bool> one_point_omega;
    std::string source;
};

CompactnessReport compactness_predicates(const Presentation& p, int n);

// Nested disjoint separator sequence forming a neighbourhood basis of the
// end at truncation; throws Error("DominatorsUnbounded") when the
// certificate marks the dominating set infinite.
std::vector<VSet> defining_sequence(const Presentation& p, int end_id, int m,
                                    int n);

struct MinorWitness {
    VSet x;                            // one singleton branch set per element
    std::vector<VSet> component_branches;  // k component branch sets
};

MinorWitness bipartite_minor_witness(const Presentation& p, const VSet& x, int k,
                                     int n);

struct QuotientClass {
    VSet vertices;
    std::vector<int> ends;
};

struct QuotientReport {
    int level = 0;
    std::vector<QuotientClass> vertex_classes;  // one per vertex class
    std::vector<int> singleton_ends;            // undominated, unabsorbed ends
};

QuotientReport quotient_points(const Presentation& p, int n);

}  // namespace tk
