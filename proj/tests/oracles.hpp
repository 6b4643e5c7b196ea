// Test-only oracles, independent of the library's implementation paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tanglekit/multigraph.hpp"

namespace oracle {

using tk::Edge;
using tk::EdgeId;
using tk::Multigraph;
using tk::VertexId;
using tk::VSet;

// ---------------------------------------------------------------- spanning trees

inline bool is_spanning_tree(const Multigraph& g, const std::vector<EdgeId>& edges) {
    if (edges.size() + 1 != g.order()) return false;
    std::map<VertexId, VertexId> par;
    for (VertexId v : g.vertices()) par[v] = v;
    auto find = [&](VertexId v) {
        while (par[v] != v) v = par[v] = par[par[v]];
        return v;
    };
    for (EdgeId id : edges) {
        const Edge* e = g.find_edge(id);
        if (!e || e->u == e->v) return false;
        VertexId a = find(e->u), b = find(e->v);
        if (a == b) return false;
        par[b] = a;
    }
    return true;
}

inline std::vector<std::vector<EdgeId>> all_spanning_trees(const Multigraph& g) {
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges())
        if (e.u != e.v) ids.push_back(e.id);
    std::vector<std::vector<EdgeId>> out;
    if (g.order() == 0) return out;
    std::size_t need = g.order() - 1;
    std::vector<EdgeId> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == need) {
            if (is_spanning_tree(g, cur)) out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i + (need - cur.size()) <= ids.size(); ++i) {
            cur.push_back(ids[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Exhaustive search for k pairwise edge-disjoint spanning trees.
inline bool exhaustive_pack_exists(const Multigraph& g, int k) {
    if (g.order() <= 1) return true;
    auto trees = all_spanning_trees(g);
    std::vector<std::set<EdgeId>> sets;
    for (const auto& t : trees) sets.emplace_back(t.begin(), t.end());
    std::vector<int> chosen;
    auto disjoint = [&](int a, int b) {
        for (EdgeId e : sets[a])
            if (sets[b].count(e)) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t i = from; i < sets.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!disjoint(c, static_cast<int>(i))) ok = false;
            if (!ok) continue;
            chosen.push_back(static_cast<int>(i));
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// ---------------------------------------------------------------- path packings

// All simple a-b paths as vertex sequences.
inline std::vector<std::vector<VertexId>> all_simple_paths(const Multigraph& g,
                                                           VertexId a, VertexId b) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> cur{a};
    std::set<VertexId> on;
    on.insert(a);
    auto rec = [&](auto&& self, VertexId v) -> void {
        if (v == b) {
            out.push_back(cur);
            return;
        }
        for (const Edge& e : g.edges()) {
            if (e.u == e.v) continue;
            VertexId w;
            if (e.u == v) w = e.v;
            else if (e.v == v) w = e.u;
            else continue;
            if (on.count(w)) continue;
            on.insert(w);
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
            on.erase(w);
        }
    };
    rec(rec, a);
    return out;
}

// Max family of pairwise internally disjoint a-b paths (brute force).
// Parallel a-b edges each contribute a direct path.
inline int max_internally_disjoint(const Multigraph& g, VertexId a, VertexId b) {
    int direct = 0;
    for (const Edge& e : g.edges())
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ++direct;
    auto paths = all_simple_paths(g, a, b);
    std::vector<std::set<VertexId>> interiors;
    for (const auto& p : paths) {
        if (p.size() <= 2) continue;  // direct edges counted separately
        interiors.emplace_back(p.begin() + 1, p.end() - 1);
    }
    int best = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t from, std::set<VertexId> used) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t i = from; i < interiors.size(); ++i) {
            bool ok = true;
            for (VertexId v : interiors[i])
                if (used.count(v)) ok = false;
            if (!ok) continue;
            auto next = used;
            next.insert(interiors[i].begin(), interiors[i].end());
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1, std::move(next));
            chosen.pop_back();
        }
    };
    rec(rec, 0, {});
    return best + direct;
}

// ---------------------------------------------------------------- tangles

// Independent orientation-filter oracle, written over vertex-side pairs.
struct OSep {
    std::uint32_t a = 0;  // bitmask over g.vertices() positions
    std::uint32_t b = 0;
};

inline std::vector<OSep> oracle_separations(const Multigraph& g, int k) {
    const VSet& verts = g.vertices();
    std::size_t n = verts.size();
    auto pos = [&](VertexId v) {
        return std::find(verts.begin(), verts.end(), v) - verts.begin();
    };
    std::vector<OSep> out;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
            if ((a | b) != (1u << n) - 1) continue;
            if (__builtin_popcount(a & b) >= k) continue;
            bool crossing = false;
            for (const Edge& e : g.edges()) {
                std::uint32_t pu = 1u << pos(e.u), pv = 1u << pos(e.v);
                bool u_in_a_only = (a & pu) && !(b & pu);
                bool v_in_b_only = (b & pv) && !(a & pv);
                bool u_in_b_only = (b & pu) && !(a & pu);
                bool v_in_a_only = (a & pv) && !(b & pv);
                if ((u_in_a_only && v_in_b_only) || (u_in_b_only && v_in_a_only))
                    crossing = true;
            }
            if (crossing) continue;
            auto key = std::minmax(a, b);
            if (!seen.insert({key.first, key.second}).second) continue;
            out.push_back({a, b});
        }
    return out;
}

// Number of consistent orientations avoiding stars of interior < bound.
inline long oracle_tangle_count(const Multigraph& g, int k, int bound) {
    auto seps = oracle_separations(g, k);
    std::size_t m = seps.size();
    auto leq = [](const OSep& r, const OSep& s) {
        return (r.a & ~s.a) == 0 && (s.b & ~r.b) == 0;
    };
    auto lt = [&](const OSep& r, const OSep& s) {
        return leq(r, s) && !(r.a == s.a && r.b == s.b);
    };
    long count = 0;
    std::vector<OSep> chosen(m);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == m) {
            // avoid stars: no subset with pairwise r <= s* and small interior
            std::vector<std::size_t> clique;
            auto star = [&](auto&& inner, std::size_t from, std::uint32_t interior) -> bool {
                if (!clique.empty() &&
                    __builtin_popcount(interior) < bound)
                    return true;
                for (std::size_t i = from; i < m; ++i) {
                    bool fits = true;
                    for (std::size_t c : clique) {
                        const OSep& r = chosen[c];
                        const OSep& s = chosen[i];
                        if (r.a == s.a && r.b == s.b) continue;
                        // r <= s^* : A_r subseteq B_s and B_r supseteq A_s
                        if (!((r.a & ~s.b) == 0 && (s.a & ~r.b) == 0)) fits = false;
                    }
                    if (!fits) continue;
                    clique.push_back(i);
                    std::uint32_t next =
                        clique.size() == 1 ? chosen[i].b : (interior & chosen[i].b);
                    if (inner(inner, i + 1, next)) return true;
                    clique.pop_back();
                }
                return false;
            };
            if (!star(star, 0, 0)) ++count;
            return;
        }
        for (int o = 0; o < 2; ++o) {
            OSep s = o ? OSep{seps[pos].b, seps[pos].a} : seps[pos];
            bool ok = true;
            for (std::size_t j = 0; j < pos; ++j) {
                // consistency: no r^* < s among chosen
                OSep rstar{chosen[j].b, chosen[j].a};
                OSep sstar{s.b, s.a};
                if (lt(rstar, s) || lt(sstar, chosen[j])) ok = false;
            }
            if (!ok) continue;
            chosen[pos] = s;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return count;
}

// ---------------------------------------------------------------- partitions

inline bool refines(const tk::VertexPartition& fine, const tk::VertexPartition& coarse) {
    for (const VSet& b : fine.blocks()) {
        bool inside = false;
        for (const VSet& c : coarse.blocks())
            if (tk::is_subset(b, c)) inside = true;
        if (!inside) return false;
    }
    return true;
}

}  // namespace oracle
