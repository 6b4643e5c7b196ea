#pragma once

#include <functional>

#include "tanglekit/structure.hpp"

namespace tk {

// ------------------------------------------------------------------ generic

// Inverse system over a finite index set with opaque integer point ids.
struct InverseSystem {
    int size = 0;
    std::vector<std::string> names;
    std::function<bool(int, int)> leq;                      // partial order
    std::function<std::vector<long>(int)> points;           // level point set
    std::function<long(int hi, int lo, long)> bond;         // requires leq(lo,hi)
};

struct Thread {
    std::vector<int> chain;    // ascending indices
    std::vector<long> points;  // bond-compatible choices
};

struct CompatIssue {
    int lo = -1, mid = -1, hi = -1;
    long point = -1;
};

// Verifies bond(hi->lo) = bond(mid->lo) o bond(hi->mid) pointwise on every
// chain triple of each sampled chain.
std::optional<CompatIssue> check_compatibility(const InverseSystem& sys,
                                               const std::vector<std::vector<int>>& chains);

// Backward-pruning search; returns the lexicographically least thread (by
// point id per position) or nullopt when none exists.
std::optional<Thread> thread_search(const InverseSystem& sys,
                                    const std::vector<int>& chain);

std::vector<Thread> all_threads(const InverseSystem& sys,
                                const std::vector<int>& chain);

// Restriction to a sub-poset J; every index in `sample` must have an upper
// bound in J (Error("NotCofinal") otherwise).
InverseSystem restrict_cofinal(const InverseSystem& sys, const std::vector<int>& j,
                               const std::vector<int>& sample);

// ------------------------------------------------------------------ F-system

struct FPoint {
    enum class Kind { Principal, Filter } kind = Kind::Principal;
    VertexId comp = -1;        // principal: minimal vertex of the component
    VSet y;                    // filter: the critical set
    bool certified_end = false;  // open component carrying an active end tail
    bool operator==(const FPoint& o) const {
        return kind == o.kind && comp == o.comp && y == o.y;
    }
};

struct FLevel {
    VSet x;
    int level = 0;
    std::vector<FPoint> points;
    std::vector<VSet> crit;                  // witnessed + certified crit(X)
    std::vector<LevelComponent> comps;       // all components of G - X
    std::vector<LevelComponent> absorbed;    // open, folded into a filter
    std::vector<LevelComponent> pending;     // open, not representable
};

// Level of the least compactification system at separator X, evaluated at
// truncation n. `active_ends` selects which certified ends may name open
// components (defaults to all ends visible at n); `k_witness` is the
// closed-count needed to witness a critical set without a certificate.
FLevel f_level(const Presentation& p, const VSet& x, int n,
               std::optional<std::vector<CertEnd>> active_ends = std::nullopt,
               int k_witness = 3);

// Bonding map between computed levels (lo.x subseteq hi.x). Raises
// Error("PendingComponent") when the image is not representable.
FPoint f_bond(const FLevel& hi, const FLevel& lo, const FPoint& pt);

struct FThread {
    std::vector<VSet> chain;
    std::vector<FPoint> points;
    bool counts_in_census = false;  // individuated at this depth
};

// All threads of the F-system over the certified depth-d chain.
std::vector<FThread> f_threads(const Presentation& p, int depth, int n);

// ------------------------------------------------------------------ Gamma

// (X, P): P partitions the component list of G - X (components identified by
// their minimal vertex).
struct GammaIndex {
    VSet x;
    std::vector<VSet> classes;  // partition of component ids
};

bool gamma_valid(const Presentation& p, const GammaIndex& g, int n);
bool gamma_leq(const Presentation& p, const GammaIndex& a, const GammaIndex& b, int n);
GammaIndex gamma_join(const Presentation& p, const GammaIndex& a, const GammaIndex& b,
                      int n);

// Multigraph on the singletons of X plus one dummy vertex per class; edges
// are exactly the cross-edges.
Multigraph gamma_space(const Presentation& p, const GammaIndex& g, int n);

struct GammaElem {
    bool is_edge = false;
    VertexId vertex = -1;
    EdgeId edge = -1;
};

GammaElem gamma_bond(const Presentation& p, const GammaIndex& hi, const GammaIndex& lo,
                     const GammaElem& elem, int n);

// ------------------------------------------------------------------ Delta

bool delta_member(const Presentation& p, const GammaIndex& g, int n);
GammaIndex delta_join(const Presentation& p, const GammaIndex& a, const GammaIndex& b,
                      int n);
// The canonical coarsest Delta index at X.
GammaIndex p_canonical(const Presentation& p, const VSet& x, int n);
// Lemma-style domination: a Delta-prime index above g.
GammaIndex delta_dominate(const Presentation& p, const GammaIndex& g, int n);

// ------------------------------------------------------------------ G.F

// Contraction of the level graph by the components of G - F; loops kept.
Multigraph gf_level(const Presentation& p, const std::vector<EdgeId>& f, int n);
// Vertex bond between two G.F levels (f subseteq f2); edges map to themselves.
VertexId gf_bond(const Presentation& p, const std::vector<EdgeId>& f,
                 const std::vector<EdgeId>& f2, VertexId dummy, int n);

// ------------------------------------------------------------ ultrafilter check

struct UltraCheck {
    bool pass = true;
    std::string violation;
};

// Finite-stage ultrafilter test for a dummy-thread over Gamma indices sharing
// the separator X: the chosen classes must pairwise intersect, restrict
// consistently along refinement, and decide every sampled bipartition.
UltraCheck thread_ultrafilter_check(const Multigraph& g, const VSet& x,
                                    const std::vector<GammaIndex>& indices,
                                    const std::vector<int>& chosen);

}  // namespace tk
