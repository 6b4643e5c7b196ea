#include "tanglekit/invsys.hpp"

#include <set>

namespace tk {

// ------------------------------------------------------------------ generic

std::optional<CompatIssue> check_compatibility(
    const InverseSystem& sys, const std::vector<std::vector<int>>& chains) {
    for (const auto& chain : chains)
        for (std::size_t a = 0; a < chain.size(); ++a)
            for (std::size_t b = a + 1; b < chain.size(); ++b)
                for (std::size_t c = b + 1; c < chain.size(); ++c) {
                    int lo = chain[a], mid = chain[b], hi = chain[c];
                    if (!sys.leq(lo, mid) || !sys.leq(mid, hi))
                        throw Error("BadChain", "chain is not ascending");
                    for (long pt : sys.points(hi)) {
                        long direct = sys.bond(hi, lo, pt);
                        long via = sys.bond(mid, lo, sys.bond(hi, mid, pt));
                        if (direct != via) return CompatIssue{lo, mid, hi, pt};
                    }
                }
    return std::nullopt;
}

namespace {

std::vector<std::vector<long>> prune(const InverseSystem& sys,
                                     const std::vector<int>& chain) {
    std::size_t d = chain.size();
    std::vector<std::vector<long>> survivors(d);
    for (std::size_t i = 0; i < d; ++i) {
        survivors[i] = sys.points(chain[i]);
        std::sort(survivors[i].begin(), survivors[i].end());
    }
    for (int i = static_cast<int>(d) - 2; i >= 0; --i) {
        std::set<long> images;
        for (long q : survivors[i + 1]) images.insert(sys.bond(chain[i + 1], chain[i], q));
        std::vector<long> keep;
        for (long pt : survivors[i])
            if (images.count(pt)) keep.push_back(pt);
        survivors[i] = std::move(keep);
    }
    return survivors;
}

}  // namespace

std::optional<Thread> thread_search(const InverseSystem& sys,
                                    const std::vector<int>& chain) {
    if (chain.empty()) return Thread{{}, {}};
    auto survivors = prune(sys, chain);
    for (const auto& s : survivors)
        if (s.empty()) return std::nullopt;
    Thread t;
    t.chain = chain;
    t.points.push_back(survivors[0].front());
    for (std::size_t i = 1; i < chain.size(); ++i) {
        bool found = false;
        for (long q : survivors[i])
            if (sys.bond(chain[i], chain[i - 1], q) == t.points.back()) {
                t.points.push_back(q);
                found = true;
                break;
            }
        if (!found) return std::nullopt;  // cannot happen after pruning
    }
    return t;
}

std::vector<Thread> all_threads(const InverseSystem& sys,
                                const std::vector<int>& chain) {
    std::vector<Thread> out;
    if (chain.empty()) return out;
    auto survivors = prune(sys, chain);
    std::vector<long> cur;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == chain.size()) {
            out.push_back({chain, cur});
            return;
        }
        for (long q : survivors[pos]) {
            if (!cur.empty() && sys.bond(chain[pos], chain[pos - 1], q) != cur.back())
                continue;
            cur.push_back(q);
            self(self, pos + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

InverseSystem restrict_cofinal(const InverseSystem& sys, const std::vector<int>& j,
                               const std::vector<int>& sample) {
    for (int i : sample) {
        bool dominated = false;
        for (int x : j)
            if (sys.leq(i, x)) {
                dominated = true;
                break;
            }
        if (!dominated)
            throw Error("NotCofinal", "sampled index " + std::to_string(i) +
                                          " has no upper bound in J");
    }
    InverseSystem r = sys;
    std::set<int> allowed(j.begin(), j.end());
    r.points = [sys, allowed](int i) {
        if (!allowed.count(i)) throw Error("NotCofinal", "index outside the restriction");
        return sys.points(i);
    };
    return r;
}

// ------------------------------------------------------------------ F-system

namespace {

std::vector<VSet> crit_sets_at(const Presentation& p, const VSet& x, int n,
                               int k_witness,
                               const std::vector<LevelComponent>& closed) {
    std::map<VSet, int> counts;
    for (const LevelComponent& c : closed) ++counts[c.nbhd];
    std::set<VSet> out;
    for (const auto& [y, cnt] : counts)
        if (cnt >= k_witness && !y.empty()) out.insert(y);
    for (const VSet& y : p.crit(n))
        if (is_subset(y, x)) out.insert(y);
    return {out.begin(), out.end()};
}

}  // namespace

FLevel f_level(const Presentation& p, const VSet& x, int n,
               std::optional<std::vector<CertEnd>> active_ends, int k_witness) {
    const LeveledGraph& lg = p.truncate(n);
    std::vector<CertEnd> ends = active_ends ? *active_ends : p.ends(n, n);

    FLevel lvl;
    lvl.x = x;
    lvl.level = n;
    ComponentReport rep = component_report(p, x, n);
    lvl.crit = crit_sets_at(p, x, n, k_witness, rep.closed);
    std::set<VSet> crit(lvl.crit.begin(), lvl.crit.end());

    for (const LevelComponent& c : rep.closed) {
        lvl.comps.push_back(c);
        lvl.points.push_back({FPoint::Kind::Principal, c.vertices.front(), {}, false});
    }
    for (const LevelComponent& c : rep.open) {
        lvl.comps.push_back(c);
        bool has_tail = false;
        for (const CertEnd& e : ends) {
            VertexId tail = -1;
            for (auto it = e.ray.rbegin(); it != e.ray.rend(); ++it)
                if (lg.graph.has_vertex(*it) && !contains(x, *it)) {
                    tail = *it;
                    break;
                }
            if (tail >= 0 && contains(c.vertices, tail)) {
                has_tail = true;
                break;
            }
        }
        if (has_tail)
            lvl.points.push_back({FPoint::Kind::Principal, c.vertices.front(), {}, true});
        else if (crit.count(c.nbhd))
            lvl.absorbed.push_back(c);
        else
            lvl.pending.push_back(c);
    }
    for (const VSet& y : lvl.crit)
        lvl.points.push_back({FPoint::Kind::Filter, -1, y, false});

    std::sort(lvl.points.begin(), lvl.points.end(), [](const FPoint& a, const FPoint& b) {
        if (a.kind != b.kind) return a.kind == FPoint::Kind::Principal;
        if (a.kind == FPoint::Kind::Principal) return a.comp < b.comp;
        return a.y < b.y;
    });
    std::sort(lvl.comps.begin(), lvl.comps.end(),
              [](const LevelComponent& a, const LevelComponent& b) {
                  return a.vertices.front() < b.vertices.front();
              });
    return lvl;
}

namespace {

const LevelComponent* comp_containing(const FLevel& lvl, VertexId v) {
    for (const LevelComponent& c : lvl.comps)
        if (contains(c.vertices, v)) return &c;
    return nullptr;
}

bool has_point_for(const FLevel& lvl, VertexId comp_id) {
    for (const FPoint& pt : lvl.points)
        if (pt.kind == FPoint::Kind::Principal && pt.comp == comp_id) return true;
    return false;
}

}  // namespace

FPoint f_bond(const FLevel& hi, const FLevel& lo, const FPoint& pt) {
    if (!is_subset(lo.x, hi.x))
        throw Error("BadChain", "f_bond requires lo.x subseteq hi.x");
    if (pt.kind == FPoint::Kind::Principal) {
        const LevelComponent* c = comp_containing(lo, pt.comp);
        if (!c)
            throw Error("PendingComponent", "component vanished at the lower level");
        if (!has_point_for(lo, c->vertices.front()))
            throw Error("PendingComponent",
                        "image component is not representable at the lower level");
        bool cert = false;
        for (const FPoint& q : lo.points)
            if (q.kind == FPoint::Kind::Principal && q.comp == c->vertices.front())
                cert = q.certified_end;
        return {FPoint::Kind::Principal, c->vertices.front(), {}, cert};
    }
    // filter point
    if (is_subset(pt.y, lo.x)) {
        for (const FPoint& q : lo.points)
            if (q.kind == FPoint::Kind::Filter && q.y == pt.y) return q;
        throw Error("NotWitnessed", "critical set lost its witness at the lower level");
    }
    // principal at the unique component including the union of C_{X'}(Y)
    VertexId sample = -1;
    for (const LevelComponent& c : hi.comps)
        if (c.nbhd == pt.y) {
            sample = c.vertices.front();
            break;
        }
    if (sample < 0)
        throw Error("PendingComponent", "no component realizes the filter family");
    const LevelComponent* c = comp_containing(lo, sample);
    if (!c || !has_point_for(lo, c->vertices.front()))
        throw Error("PendingComponent",
                    "filter image component is not representable at the lower level");
    bool cert = false;
    for (const FPoint& q : lo.points)
        if (q.kind == FPoint::Kind::Principal && q.comp == c->vertices.front())
            cert = q.certified_end;
    return {FPoint::Kind::Principal, c->vertices.front(), {}, cert};
}

std::vector<FThread> f_threads(const Presentation& p, int depth, int n) {
    auto chain = p.fchain(depth, n);
    auto active = p.ends(depth, n);
    std::vector<FLevel> levels;
    for (const VSet& x : chain) levels.push_back(f_level(p, x, n, active));

    // encode points: principal -> 2*comp, filter -> 2*index(y)+1
    std::vector<VSet> ytab;
    auto ycode = [&](const VSet& y) {
        for (std::size_t i = 0; i < ytab.size(); ++i)
            if (ytab[i] == y) return static_cast<long>(i);
        ytab.push_back(y);
        return static_cast<long>(ytab.size() - 1);
    };
    for (const FLevel& lvl : levels)
        for (const FPoint& pt : lvl.points)
            if (pt.kind == FPoint::Kind::Filter) ycode(pt.y);

    auto encode = [&](const FPoint& pt) {
        return pt.kind == FPoint::Kind::Principal ? 2L * pt.comp
                                                  : 2L * ycode(pt.y) + 1;
    };
    auto decode = [&](const FLevel& lvl, long code) -> FPoint {
        for (const FPoint& pt : lvl.points)
            if (encode(pt) == code) return pt;
        throw Error("BadPoint", "unknown point code");
    };

    InverseSystem sys;
    sys.size = static_cast<int>(levels.size());
    for (const FLevel& lvl : levels) {
        std::string nm = "X{";
        for (VertexId v : lvl.x) nm += std::to_string(v) + ",";
        nm += "}";
        sys.names.push_back(nm);
    }
    sys.leq = [&levels](int a, int b) { return is_subset(levels[a].x, levels[b].x); };
    sys.points = [&levels, &encode](int i) {
        std::vector<long> out;
        for (const FPoint& pt : levels[i].points) out.push_back(encode(pt));
        return out;
    };
    sys.bond = [&levels, &encode, &decode](int hi, int lo, long code) {
        FPoint pt = decode(levels[hi], code);
        return encode(f_bond(levels[hi], levels[lo], pt));
    };

    std::vector<int> idx(levels.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<FThread> out;
    const FLevel& top = levels.back();
    std::set<VSet> topcrit(top.crit.begin(), top.crit.end());
    for (const Thread& t : all_threads(sys, idx)) {
        FThread ft;
        ft.chain = chain;
        for (std::size_t i = 0; i < t.points.size(); ++i)
            ft.points.push_back(decode(levels[i], t.points[i]));
        const FPoint& toppt = ft.points.back();
        if (toppt.kind == FPoint::Kind::Filter) {
            ft.counts_in_census = true;
        } else {
            const LevelComponent* c = comp_containing(top, toppt.comp);
            ft.counts_in_census =
                toppt.certified_end || (c && !topcrit.count(c->nbhd));
        }
        out.push_back(std::move(ft));
    }
    return out;
}

// ------------------------------------------------------------------ Gamma

namespace {

std::vector<ComponentNbhd> comps_at(const Presentation& p, const VSet& x, int n) {
    return components(p.truncate(n).graph, x);
}

VSet comp_ids(const std::vector<ComponentNbhd>& comps) {
    VSet ids;
    for (const auto& c : comps) ids.push_back(c.vertices.front());
    return canon(ids);
}

// vertex partition p(X, P)
VertexPartition induced_partition(const Presentation& p, const GammaIndex& g, int n) {
    auto comps = comps_at(p, g.x, n);
    std::map<VertexId, const ComponentNbhd*> by_id;
    for (const auto& c : comps) by_id[c.vertices.front()] = &c;
    std::vector<VSet> blocks;
    for (VertexId v : g.x) blocks.push_back({v});
    for (const VSet& cls : g.classes) {
        VSet blk;
        for (VertexId id : cls) {
            auto it = by_id.find(id);
            if (it == by_id.end())
                throw Error("BadGammaIndex", "class names a missing component");
            blk = set_union(blk, it->second->vertices);
        }
        blocks.push_back(std::move(blk));
    }
    return VertexPartition(std::move(blocks));
}

bool refines(const VertexPartition& fine, const VertexPartition& coarse) {
    for (const VSet& b : fine.blocks()) {
        bool inside = false;
        for (const VSet& c : coarse.blocks())
            if (is_subset(b, c)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace

bool gamma_valid(const Presentation& p, const GammaIndex& g, int n) {
    auto ids = comp_ids(comps_at(p, g.x, n));
    VSet covered;
    for (const VSet& cls : g.classes) {
        if (cls.empty()) return false;
        covered = set_union(covered, cls);
    }
    std::size_t total = 0;
    for (const VSet& cls : g.classes) total += cls.size();
    return covered == ids && total == ids.size();
}

bool gamma_leq(const Presentation& p, const GammaIndex& a, const GammaIndex& b, int n) {
    if (!is_subset(a.x, b.x)) return false;
    return refines(induced_partition(p, b, n), induced_partition(p, a, n));
}

GammaIndex gamma_join(const Presentation& p, const GammaIndex& a, const GammaIndex& b,
                      int n) {
    VSet z = set_union(a.x, b.x);
    auto zc = comps_at(p, z, n);
    auto label_for = [&](const GammaIndex& g) {
        auto gc = comps_at(p, g.x, n);
        std::map<VertexId, int> cls_of;  // component id -> class index
        for (std::size_t i = 0; i < g.classes.size(); ++i)
            for (VertexId id : g.classes[i]) cls_of[id] = static_cast<int>(i);
        // map each Z-component to the class of the G-X component containing it
        std::map<VertexId, int> out;
        for (const auto& c : zc) {
            VertexId probe = c.vertices.front();
            int lbl = -1;
            for (const auto& gcomp : gc)
                if (contains(gcomp.vertices, probe)) {
                    lbl = cls_of.at(gcomp.vertices.front());
                    break;
                }
            out[c.vertices.front()] = lbl;  // -1: swallowed by the separator
        }
        return out;
    };
    auto la = label_for(a), lb = label_for(b);
    std::map<std::pair<int, int>, VSet> groups;
    for (const auto& c : zc)
        groups[{la[c.vertices.front()], lb[c.vertices.front()]}].push_back(
            c.vertices.front());
    GammaIndex r;
    r.x = z;
    for (auto& [key, cls] : groups) r.classes.push_back(canon(cls));
    std::sort(r.classes.begin(), r.classes.end());
    return r;
}

Multigraph gamma_space(const Presentation& p, const GammaIndex& g, int n) {
    Multigraph q = contract_partition(p.truncate(n).graph, induced_partition(p, g, n));
    // vertices arising from singletons of X are original, not dummies: only
    // the partition-class blocks keep labels
    std::map<VertexId, VSet> labels;
    for (const auto& [v, lab] : q.labels())
        if (!(lab.size() == 1 && contains(g.x, lab.front()))) labels[v] = lab;
    return Multigraph(q.vertices(), q.edges(), std::move(labels));
}

GammaElem gamma_bond(const Presentation& p, const GammaIndex& hi, const GammaIndex& lo,
                     const GammaElem& elem, int n) {
    Multigraph hi_space = gamma_space(p, hi, n);
    Multigraph lo_space = gamma_space(p, lo, n);
    VertexPartition lo_part = induced_partition(p, lo, n);
    if (elem.is_edge) {
        if (lo_space.find_edge(elem.edge)) return {true, -1, elem.edge};  // survives
        const Edge* e = hi_space.find_edge(elem.edge);
        if (!e) throw Error("UnknownEdge", std::to_string(elem.edge));
        // collapsed: the dummy of lo including both endpoints
        auto block_rep = [&](VertexId hv) {
            VSet members = hi_space.labels().count(hv) ? hi_space.labels().at(hv)
                                                       : VSet{hv};
            int b = lo_part.block_of(members.front());
            return lo_part.blocks()[b].front();
        };
        VertexId ru = block_rep(e->u), rv = block_rep(e->v);
        if (ru != rv)
            throw Error("BadBond", "collapsed edge endpoints fall in distinct blocks");
        return {false, ru, -1};
    }
    VSet members = hi_space.labels().count(elem.vertex)
                       ? hi_space.labels().at(elem.vertex)
                       : VSet{elem.vertex};
    int b = lo_part.block_of(members.front());
    if (b < 0) throw Error("UnknownVertex", std::to_string(elem.vertex));
    return {false, lo_part.blocks()[b].front(), -1};
}

// ------------------------------------------------------------------ Delta

namespace {

struct CompInfo {
    std::map<VertexId, VSet> nbhd;       // component id -> neighbourhood
    std::map<VertexId, bool> fresh;      // appeared within the growth window
    std::set<VSet> crit;
};

CompInfo comp_info(const Presentation& p, const VSet& x, int n) {
    CompInfo info;
    auto comps = comps_at(p, x, n);
    const VSet& oldverts = p.truncate(std::max(0, n - 3)).graph.vertices();
    for (const auto& c : comps) {
        info.nbhd[c.vertices.front()] = c.nbhd;
        info.fresh[c.vertices.front()] = !contains(oldverts, c.vertices.front());
    }
    ComponentReport rep = component_report(p, x, n);
    for (const auto& w : crit_sets_at(p, x, n, 3, rep.closed)) info.crit.insert(w);
    return info;
}

bool class_growing(const CompInfo& info, const VSet& cls) {
    for (VertexId id : cls)
        if (info.fresh.at(id)) return true;
    return false;
}

}  // namespace

bool delta_member(const Presentation& p, const GammaIndex& g, int n) {
    if (!gamma_valid(p, g, n)) throw Error("BadGammaIndex", "not a partition");
    CompInfo info = comp_info(p, g.x, n);
    std::map<VSet, int> growing_per_y;
    for (const VSet& cls : g.classes) {
        // the class must sit inside a single neighbourhood family
        VSet y = info.nbhd.at(cls.front());
        for (VertexId id : cls)
            if (info.nbhd.at(id) != y) return false;
        if (!info.crit.count(y)) {
            if (cls.size() != 1) return false;  // must be a singleton of P_X^-
            continue;
        }
        if (class_growing(info, cls) && ++growing_per_y[y] > 1) return false;
    }
    return true;
}

GammaIndex p_canonical(const Presentation& p, const VSet& x, int n) {
    CompInfo info = comp_info(p, x, n);
    std::map<VSet, VSet> families;
    GammaIndex g;
    g.x = x;
    for (const auto& [id, y] : info.nbhd) {
        if (info.crit.count(y))
            families[y].push_back(id);
        else
            g.classes.push_back({id});
    }
    for (auto& [y, cls] : families) g.classes.push_back(canon(cls));
    std::sort(g.classes.begin(), g.classes.end());
    return g;
}

GammaIndex delta_join(const Presentation& p, const GammaIndex& a, const GammaIndex& b,
                      int n) {
    VSet z = set_union(a.x, b.x);
    CompInfo info = comp_info(p, z, n);
    auto zc = comps_at(p, z, n);
    auto label_for = [&](const GammaIndex& g) {
        auto gc = comps_at(p, g.x, n);
        std::map<VertexId, int> cls_of;
        for (std::size_t i = 0; i < g.classes.size(); ++i)
            for (VertexId id : g.classes[i]) cls_of[id] = static_cast<int>(i);
        std::map<VertexId, int> out;
        for (const auto& c : zc) {
            VertexId probe = c.vertices.front();
            int lbl = -1;
            for (const auto& gcomp : gc)
                if (contains(gcomp.vertices, probe)) {
                    lbl = cls_of.at(gcomp.vertices.front());
                    break;
                }
            out[c.vertices.front()] = lbl;
        }
        return out;
    };
    auto la = label_for(a), lb = label_for(b);
    GammaIndex r;
    r.x = z;
    std::map<std::tuple<VSet, int, int>, VSet> groups;
    for (const auto& c : zc) {
        VertexId id = c.vertices.front();
        const VSet& y = info.nbhd.at(id);
        if (info.crit.count(y))
            groups[{y, la[id], lb[id]}].push_back(id);
        else
            r.classes.push_back({id});
    }
    for (auto& [key, cls] : groups) r.classes.push_back(canon(cls));
    std::sort(r.classes.begin(), r.classes.end());
    return r;
}

GammaIndex delta_dominate(const Presentation& p, const GammaIndex& g, int n) {
    if (!delta_member(p, g, n))
        throw Error("NotDeltaMember", "index is outside Delta at this level");
    CompInfo info = comp_info(p, g.x, n);
    VSet extra;
    for (const VSet& cls : g.classes) {
        const VSet& y = info.nbhd.at(cls.front());
        if (!info.crit.count(y)) continue;
        if (!class_growing(info, cls))
            for (VertexId id : cls) extra.push_back(id);  // id = minimal vertex
    }
    VSet x2 = set_union(g.x, canon(extra));
    return p_canonical(p, x2, n);
}

// ------------------------------------------------------------------ G.F

Multigraph gf_level(const Presentation& p, const std::vector<EdgeId>& f, int n) {
    const LeveledGraph& lg = p.truncate(n);
    for (EdgeId id : f)
        if (!lg.graph.find_edge(id))
            throw Error("FrontierEdge", "edge " + std::to_string(id) +
                                            " is not present at this level");
    return contract_by_edges(lg.graph, f);
}

VertexId gf_bond(const Presentation& p, const std::vector<EdgeId>& f,
                 const std::vector<EdgeId>& f2, VertexId dummy, int n) {
    if (!is_subset(canon(VSet(f.begin(), f.end())), canon(VSet(f2.begin(), f2.end()))))
        throw Error("BadChain", "gf_bond requires f subseteq f2");
    Multigraph hi = gf_level(p, f2, n);
    Multigraph lo = gf_level(p, f, n);
    auto it = hi.labels().find(dummy);
    VSet members = it != hi.labels().end() ? it->second : VSet{dummy};
    for (const auto& [v, lab] : lo.labels())
        if (is_subset(members, lab)) return v;
    throw Error("UnknownVertex", std::to_string(dummy));
}

// ------------------------------------------------------------ ultrafilter check

UltraCheck thread_ultrafilter_check(const Multigraph& g, const VSet& x,
                                    const std::vector<GammaIndex>& indices,
                                    const std::vector<int>& chosen) {
    if (indices.size() != chosen.size())
        throw Error("BadArgument", "one chosen class per index");
    std::vector<VSet> family;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i].x != x)
            throw Error("BadArgument", "all indices must share the separator X");
        if (chosen[i] < 0 || chosen[i] >= static_cast<int>(indices[i].classes.size()))
            return {false, "chosen class out of range"};
        family.push_back(indices[i].classes[chosen[i]]);
    }
    (void)g;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (set_intersect(family[i], family[j]).empty())
                return {false, "chosen classes " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are disjoint"};
    // upward consistency along refinement
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) {
            if (i == j) continue;
            // indices[j] refines indices[i] (same X): every class of j inside one of i
            bool j_refines_i = true;
            for (const VSet& cj : indices[j].classes) {
                bool inside = false;
                for (const VSet& ci : indices[i].classes)
                    if (is_subset(cj, ci)) inside = true;
                if (!inside) j_refines_i = false;
            }
            if (j_refines_i && !is_subset(family[j], family[i]))
                return {false, "choice at a finer index escapes the coarser choice"};
        }
    return {true, {}};
}

}  // namespace tk
