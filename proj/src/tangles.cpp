#include "tanglekit/tangles.hpp"

#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tk {
namespace {

std::size_t ambient_tag(const Multigraph& g) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](long v) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    };
    for (VertexId v : g.vertices()) mix(v);
    for (const Edge& e : g.edges()) {
        mix(e.id);
        mix(e.u);
        mix(e.v);
    }
    return h;
}

}  // namespace

OrientedSep make_oriented_sep(const Multigraph& g, const VSet& x,
                              const VSet& side_ids) {
    auto comps = components(g, x);
    OrientedSep s;
    s.x = x;
    s.side = canon(side_ids);
    VSet big_union;
    VSet all_ids;
    for (const auto& c : comps) {
        all_ids.push_back(c.vertices.front());
        if (contains(s.side, c.vertices.front()))
            big_union = set_union(big_union, c.vertices);
    }
    if (!is_subset(s.side, canon(all_ids)))
        throw Error("BadSeparation", "side names a missing component");
    s.b = set_union(x, big_union);
    s.a = set_minus(g.vertices(), big_union);
    s.ambient = ambient_tag(g);
    return s;
}

OrientedSep inverse(const Multigraph& g, const OrientedSep& s) {
    auto comps = components(g, s.x);
    VSet rest;
    for (const auto& c : comps)
        if (!contains(s.side, c.vertices.front())) rest.push_back(c.vertices.front());
    return make_oriented_sep(g, s.x, rest);
}

SepOrder sep_compare(const OrientedSep& s, const OrientedSep& t) {
    if (s.ambient != t.ambient)
        throw Error("AmbientMismatch", "separations live on different graphs");
    bool leq = is_subset(s.a, t.a) && is_subset(t.b, s.b);
    bool geq = is_subset(t.a, s.a) && is_subset(s.b, t.b);
    if (leq && geq) return SepOrder::Equal;
    if (leq) return SepOrder::Leq;
    if (geq) return SepOrder::Geq;
    return SepOrder::Incomparable;
}

OrientationCheck check_orientation(const Orientation& o) {
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j) {
            if (i == j) continue;
            // violation: r* < s for distinct r, s in O
            const OrientedSep& r = o[i];
            const OrientedSep& s = o[j];
            bool leq = is_subset(r.b, s.a) && is_subset(s.b, r.a);  // r* <= s
            bool eq = r.b == s.a && r.a == s.b;
            if (leq && !eq) return {false, static_cast<int>(i), static_cast<int>(j)};
        }
    return {};
}

StarCheck check_star(const std::vector<OrientedSep>& sigma) {
    StarCheck r;
    if (sigma.empty()) return r;
    r.is_star = true;
    r.interior = sigma.front().b;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        r.interior = set_intersect(r.interior, sigma[i].b);
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            const OrientedSep& s = sigma[i];
            const OrientedSep& t = sigma[j];
            if (s.a == t.a && s.b == t.b) continue;  // not distinct
            // s <= t* : A_s subseteq B_t and B_s supseteq A_t
            if (!(is_subset(s.a, t.b) && is_subset(t.a, s.b))) r.is_star = false;
        }
    }
    return r;
}

std::vector<OrientedSep> separations_below(const Multigraph& g, int k) {
    std::vector<OrientedSep> out;
    std::set<std::pair<VSet, VSet>> seen;  // canonical (smaller side, separator)
    const VSet& verts = g.vertices();
    std::size_t n = verts.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        VSet x;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) x.push_back(verts[i]);
        if (static_cast<int>(x.size()) >= k) continue;
        auto comps = components(g, x);
        std::size_t m = comps.size();
        if (m > 20) throw Error("TooLarge", "too many components");
        for (std::size_t sm = 0; sm < (1u << m); ++sm) {
            VSet side;
            for (std::size_t i = 0; i < m; ++i)
                if (sm & (1u << i)) side.push_back(comps[i].vertices.front());
            OrientedSep s = make_oriented_sep(g, x, side);
            VSet key_a = std::min(s.a, s.b);
            if (!seen.insert({key_a, s.x}).second) continue;
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const OrientedSep& a, const OrientedSep& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.side < b.side;
    });
    return out;
}

namespace {

struct TangleSpace {
    std::vector<OrientedSep> fwd;   // canonical orientation per separation
    std::vector<OrientedSep> bwd;   // inverses
    // consistency[i][j] bit table over the 4 orientation combos: bit(oi*2+oj)
    std::vector<std::vector<unsigned>> ok;
};

bool pair_consistent(const OrientedSep& r, const OrientedSep& s) {
    // inconsistent iff r* < s or s* < r
    auto lt = [](const OrientedSep& u, const OrientedSep& v) {
        bool leq = is_subset(u.b, v.a) && is_subset(v.b, u.a);
        bool eq = u.b == v.a && u.a == v.b;
        return leq && !eq;
    };
    (void)lt;
    auto star_lt = [](const OrientedSep& u, const OrientedSep& v) {
        // u* <= v: A_{u*} = B_u subseteq A_v and B_{u*} = A_u supseteq B_v
        bool leq = is_subset(u.b, v.a) && is_subset(v.b, u.a);
        bool eq = u.b == v.a && u.a == v.b;
        return leq && !eq;
    };
    return !star_lt(r, s) && !star_lt(s, r);
}

TangleSpace build_space(const Multigraph& g, int k) {
    TangleSpace sp;
    sp.fwd = separations_below(g, k);
    for (const OrientedSep& s : sp.fwd) sp.bwd.push_back(inverse(g, s));
    std::size_t m = sp.fwd.size();
    sp.ok.assign(m, std::vector<unsigned>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            for (int oi = 0; oi < 2; ++oi)
                for (int oj = 0; oj < 2; ++oj) {
                    const OrientedSep& r = oi ? sp.bwd[i] : sp.fwd[i];
                    const OrientedSep& s = oj ? sp.bwd[j] : sp.fwd[j];
                    if (pair_consistent(r, s)) sp.ok[i][j] |= 1u << (oi * 2 + oj);
                }
        }
    return sp;
}

// Does the orientation given by `bits` contain a star of interior < bound?
bool has_small_star(const TangleSpace& sp, const std::vector<int>& bits, int bound) {
    std::size_t m = sp.fwd.size();
    std::vector<const OrientedSep*> chosen(m);
    for (std::size_t i = 0; i < m; ++i)
        chosen[i] = bits[i] ? &sp.bwd[i] : &sp.fwd[i];
    // star compatibility graph on the chosen orientations
    std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const OrientedSep& s = *chosen[i];
            const OrientedSep& t = *chosen[j];
            if (s.a == t.a && s.b == t.b) continue;
            compat[i][j] = compat[j][i] =
                is_subset(s.a, t.b) && is_subset(t.a, s.b);
        }
    // DFS over cliques; interiors only shrink, stop as soon as one dips
    // below the bound
    std::vector<std::size_t> clique;
    auto rec = [&](auto&& self, std::size_t from, VSet interior) -> bool {
        if (!clique.empty() && static_cast<int>(interior.size()) < bound) return true;
        for (std::size_t i = from; i < m; ++i) {
            bool fits = true;
            for (std::size_t c : clique)
                if (!compat[c][i]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            VSet next =
                clique.empty() ? chosen[i]->b : set_intersect(interior, chosen[i]->b);
            clique.push_back(i);
            if (self(self, i + 1, next)) return true;
            clique.pop_back();
        }
        return false;
    };
    return rec(rec, 0, {});
}

std::vector<Orientation> enumerate_impl(const Multigraph& g, int k, TangleOptions opt,
                                        bool parallel) {
    if (g.order() > 6) throw Error("TooLarge", "tangle enumeration is capped at 6 vertices");
    int bound = opt.interior_bound < 0 ? k : opt.interior_bound;
    TangleSpace sp = build_space(g, k);
    std::size_t m = sp.fwd.size();
    if (m > 40) throw Error("TooLarge", "too many separations");

    auto consistent_prefix = [&sp](const std::vector<int>& bits, std::size_t upto) {
        std::size_t i = upto;
        for (std::size_t j = 0; j < upto; ++j)
            if (!(sp.ok[i][j] & (1u << (bits[i] * 2 + bits[j])))) return false;
        return true;
    };

    // DFS over orientation bit vectors with pairwise pruning.
    auto sweep = [&](std::size_t prefix_bits,
                     std::size_t prefix_len) -> std::vector<std::vector<int>> {
        std::vector<std::vector<int>> found;
        std::vector<int> bits(m, 0);
        for (std::size_t i = 0; i < prefix_len; ++i) {
            bits[i] = (prefix_bits >> i) & 1;
            if (!consistent_prefix(bits, i)) return found;
        }
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == m) {
                if (!has_small_star(sp, bits, bound)) found.push_back(bits);
                return;
            }
            for (int v = 0; v < 2; ++v) {
                bits[pos] = v;
                if (consistent_prefix(bits, pos)) self(self, pos + 1);
            }
            bits[pos] = 0;
        };
        rec(rec, prefix_len);
        return found;
    };

    std::vector<std::vector<int>> all;
    if (!parallel || m < 4) {
        all = sweep(0, 0);
    } else {
        std::size_t plen = std::min<std::size_t>(4, m);
        std::size_t shards = 1u << plen;
        std::vector<std::vector<std::vector<int>>> buckets(shards);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t s = 0; s < shards; ++s) buckets[s] = sweep(s, plen);
        for (auto& b : buckets)
            all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());

    std::vector<Orientation> out;
    for (const auto& bits : all) {
        Orientation o;
        for (std::size_t i = 0; i < m; ++i) o.push_back(bits[i] ? sp.bwd[i] : sp.fwd[i]);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace

std::vector<Orientation> enumerate_tangles_finite(const Multigraph& g, int k,
                                                  TangleOptions opt) {
    return enumerate_impl(g, k, opt, true);
}

std::vector<Orientation> enumerate_tangles_finite_serial(const Multigraph& g, int k,
                                                         TangleOptions opt) {
    return enumerate_impl(g, k, opt, false);
}

std::vector<VSet> u_of(const Multigraph& g, const Orientation& tau, const VSet& x) {
    auto comps = components(g, x);
    std::size_t m = comps.size();
    if (m > 20) throw Error("TooLarge", "too many components");
    std::vector<VSet> family;
    for (std::size_t sm = 0; sm < (1u << m); ++sm) {
        VSet side;
        for (std::size_t i = 0; i < m; ++i)
            if (sm & (1u << i)) side.push_back(comps[i].vertices.front());
        OrientedSep probe = make_oriented_sep(g, x, side);
        bool found = false, member = false;
        for (const OrientedSep& s : tau) {
            if (s.a == probe.a && s.b == probe.b) {
                found = true;
                member = true;
            } else if (s.a == probe.b && s.b == probe.a) {
                found = true;
            }
        }
        if (!found) throw Error("IncompleteSample", "bipartition not oriented by tau");
        if (member) family.push_back(canon(side));
    }
    return family;
}

bool is_principal_ultrafilter(const Multigraph& g, const VSet& x,
                              const std::vector<VSet>& family) {
    auto comps = components(g, x);
    std::size_t m = comps.size();
    if (family.size() != (1u << m) / 2 && !(m == 0 && family.size() == 1)) return false;
    VSet core;
    bool first = true;
    for (const VSet& f : family) {
        if (first) {
            core = f;
            first = false;
        } else {
            core = set_intersect(core, f);
        }
    }
    if (core.size() != 1) return false;
    // family must be exactly the supersets of the core
    for (const VSet& f : family)
        if (!contains(f, core.front())) return false;
    return true;
}

std::optional<VSet> x_tau(const FThread& thread) {
    for (std::size_t i = 0; i < thread.points.size(); ++i)
        if (thread.points[i].kind == FPoint::Kind::Filter) return thread.points[i].y;
    return std::nullopt;
}

namespace {

// component ids with neighbourhood y on both sides, split by freshness
struct SplitCount {
    int now = 0;
    int old = 0;
};

}  // namespace

std::optional<bool> in_S_prime(const Presentation& p, const PSep& s, int n) {
    ComponentReport rep = component_report(p, s.x, n);
    const VSet& oldverts = p.truncate(std::max(0, n - 3)).graph.vertices();
    // witnessed + certified crit(X)
    std::map<VSet, int> counts;
    for (const LevelComponent& c : rep.closed) ++counts[c.nbhd];
    std::set<VSet> crit;
    for (const auto& [y, cnt] : counts)
        if (cnt >= 3 && !y.empty()) crit.insert(y);
    for (const VSet& y : p.crit(n))
        if (is_subset(y, s.x)) crit.insert(y);

    auto growing = [&](const VSet& y, bool inside) {
        SplitCount sc;
        auto scan = [&](const std::vector<LevelComponent>& comps) {
            for (const LevelComponent& c : comps) {
                if (c.nbhd != y) continue;
                bool member = contains(s.side, c.vertices.front());
                if (member != inside) continue;
                ++sc.now;
                if (contains(oldverts, c.vertices.front())) ++sc.old;
            }
        };
        scan(rep.closed);
        scan(rep.open);
        return sc.now > sc.old;
    };

    for (const VSet& y : crit)
        if (growing(y, true) && growing(y, false)) return false;
    if (p.certified()) return true;
    return std::nullopt;
}

Orientation fpoint_orientation(const Presentation& p, const FThread& thread,
                               const std::vector<PSep>& sample, int n) {
    const LeveledGraph& lg = p.truncate(n);
    const VSet& oldverts = p.truncate(std::max(0, n - 3)).graph.vertices();
    Orientation out;
    for (const PSep& s : sample) {
        auto sp = in_S_prime(p, s, n);
        if (sp.has_value() && !*sp)
            throw Error("NotInSPrime", "sampled separation splits a critical family");
        int pos = -1;
        for (std::size_t i = 0; i < thread.chain.size(); ++i)
            if (thread.chain[i] == s.x) pos = static_cast<int>(i);
        if (pos < 0) throw Error("ChainGap", "separator missing from the thread chain");
        const FPoint& pt = thread.points[pos];
        auto comps = components(lg.graph, s.x);
        bool big_is_side;
        if (pt.kind == FPoint::Kind::Principal) {
            VertexId id = -1;
            for (const auto& c : comps)
                if (contains(c.vertices, pt.comp)) id = c.vertices.front();
            big_is_side = contains(s.side, id);
        } else {
            // the side holding the growing (cofinite) part of C_X(Y)
            int in_fresh = 0, out_fresh = 0, in_n = 0, out_n = 0;
            for (const auto& c : comps) {
                if (c.nbhd != pt.y) continue;
                bool member = contains(s.side, c.vertices.front());
                bool fresh = !contains(oldverts, c.vertices.front());
                (member ? in_n : out_n)++;
                if (fresh) (member ? in_fresh : out_fresh)++;
            }
            if (in_fresh != out_fresh) big_is_side = in_fresh > out_fresh;
            else big_is_side = in_n >= out_n;
        }
        VSet side = s.side;
        if (!big_is_side) {
            VSet rest;
            for (const auto& c : comps)
                if (!contains(s.side, c.vertices.front()))
                    rest.push_back(c.vertices.front());
            side = canon(rest);
        }
        out.push_back(make_oriented_sep(lg.graph, s.x, side));
    }
    return out;
}

}  // namespace tk
