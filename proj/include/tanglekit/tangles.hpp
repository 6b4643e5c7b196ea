#pragma once

#include "tanglekit/invsys.hpp"

namespace tk {

// Oriented separation (A, B) of a fixed finite graph, stored in
// component-bipartition form: separator x, designated big-side component ids.
struct OrientedSep {
    VSet x;
    VSet side;  // big-side component ids (minimal vertices)
    VSet a;     // derived small side V - V[side]
    VSet b;     // derived big side X u V[side]
    std::size_t ambient = 0;
};

OrientedSep make_oriented_sep(const Multigraph& g, const VSet& x, const VSet& side_ids);
OrientedSep inverse(const Multigraph& g, const OrientedSep& s);

enum class SepOrder { Leq, Geq, Equal, Incomparable };
SepOrder sep_compare(const OrientedSep& s, const OrientedSep& t);

using Orientation = std::vector<OrientedSep>;

struct OrientationCheck {
    bool consistent = true;
    int bad_r = -1, bad_s = -1;
};
OrientationCheck check_orientation(const Orientation& o);

struct StarCheck {
    bool is_star = false;
    VSet interior;
};
StarCheck check_star(const std::vector<OrientedSep>& sigma);

// Underlying separations of order < k, one canonical orientation each.
std::vector<OrientedSep> separations_below(const Multigraph& g, int k);

struct TangleOptions {
    int interior_bound = -1;  // forbidden-star interior bound; -1 = order bound
};

// All consistent orientations of the order-<k separations avoiding every
// star of interior smaller than the bound. |V| <= 6.
std::vector<Orientation> enumerate_tangles_finite(const Multigraph& g, int k,
                                                  TangleOptions opt = {});
std::vector<Orientation> enumerate_tangles_finite_serial(const Multigraph& g, int k,
                                                         TangleOptions opt = {});

// U(tau, X): the set family the orientation induces on the components of
// g - X. Error("IncompleteSample") when tau leaves a bipartition unoriented.
std::vector<VSet> u_of(const Multigraph& g, const Orientation& tau, const VSet& x);
bool is_principal_ultrafilter(const Multigraph& g, const VSet& x,
                              const std::vector<VSet>& family);

// The witnessed X_v of an F-thread: minimal sampled separator whose point is
// a filter; nullopt for end threads.
std::optional<VSet> x_tau(const FThread& thread);

// Presentation-level separation in component-bipartition form.
struct PSep {
    VSet x;
    VSet side;  // component ids at the evaluation level
};

// S' membership: no witnessed/certified critical set splits into two growing
// parts across the bipartition. nullopt = Unknown.
std::optional<bool> in_S_prime(const Presentation& p, const PSep& s, int n);

// Orientation induced by an F-thread on sampled S' separations.
Orientation fpoint_orientation(const Presentation& p, const FThread& thread,
                               const std::vector<PSep>& sample, int n);

}  // namespace tk
