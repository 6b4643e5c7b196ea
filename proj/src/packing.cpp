#include "tanglekit/packing.hpp"

#include <cmath>
#include <set>

namespace tk {

AuxGraph aux_graph(const Presentation& p, int n) {
    AuxGraph ag;
    ag.level = n;
    ag.base = p.truncate(n).graph;
    std::vector<VSet> crit;
    if (p.certified()) {
        crit = p.crit(n);
    } else {
        for (const CritWitness& w : enumerate_crit(p, 4, n, 4)) crit.push_back(w.y);
    }
    for (const CertEnd& e : p.ends(n, n))
        for (VertexId u : e.dominators)
            if (ag.base.has_vertex(u))
                ag.aux.push_back({AuxEdge::Kind::EndEdge, u, -1, e.id, {}});
    for (const VSet& x : crit)
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                ag.aux.push_back({AuxEdge::Kind::CritEdge, x[i], x[j], -1, x});
    return ag;
}

// ------------------------------------------------------------------ V*

namespace {

using OrderType = std::vector<VertexId>;  // X-vertices in path order

OrderType restrict_type(const OrderType& t, const VSet& x) {
    OrderType r;
    for (VertexId v : t)
        if (contains(x, v)) r.push_back(v);
    return r;
}

}  // namespace

VStar vstar(const Presentation& p, VertexId x, VertexId y, int depth) {
    if (depth < 1) throw Error("BadArgument", "depth must be >= 1");
    int n = depth + 4;
    int m = std::max(4, 2 * depth);
    auto paths = p.path_family(x, y, m, n);  // throws NotEquivalent when separable
    if (paths.empty()) throw Error("ThreadEmpty", "no connecting paths at this level");
    int threshold = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(paths.size()))));

    std::vector<VSet> chain;
    for (VSet xi : p.fchain(depth, n)) chain.push_back(set_union(xi, canon({x, y})));

    // kept order types per chain position
    std::vector<std::vector<OrderType>> kept(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        std::map<OrderType, int> counts;
        for (const auto& path : paths)
            ++counts[restrict_type(path, chain[i])];
        for (const auto& [t, c] : counts)
            if (c >= threshold) kept[i].push_back(t);
        std::sort(kept[i].begin(), kept[i].end());
        if (kept[i].empty())
            throw Error("ThreadEmpty", "the finite order-type shadow collapsed");
    }

    InverseSystem sys;
    sys.size = static_cast<int>(chain.size());
    sys.leq = [&chain](int a, int b) { return is_subset(chain[a], chain[b]); };
    sys.points = [&kept](int i) {
        std::vector<long> out;
        for (std::size_t t = 0; t < kept[i].size(); ++t) out.push_back(static_cast<long>(t));
        return out;
    };
    sys.bond = [&kept, &chain](int hi, int lo, long t) {
        OrderType r = restrict_type(kept[hi][t], chain[lo]);
        for (std::size_t i = 0; i < kept[lo].size(); ++i)
            if (kept[lo][i] == r) return static_cast<long>(i);
        return -1L;  // image not kept: prunes the point
    };

    std::vector<int> idx(chain.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    auto thread = thread_search(sys, idx);
    if (!thread) throw Error("ThreadEmpty", "no compatible order-type thread");

    VStar vs;
    vs.order = kept.back()[thread->points.back()];
    vs.chain = chain;
    vs.paths_sampled = static_cast<int>(paths.size());
    vs.threshold = threshold;
    vs.level = n;
    if (vs.order.empty() || vs.order.front() != x || vs.order.back() != y)
        throw Error("ThreadEmpty", "extracted order lost its endpoints");
    return vs;
}

std::vector<GapEntry> classify_gaps(const Presentation& p, const VStar& vs, int n) {
    const LeveledGraph& lg = p.truncate(n);
    auto ends = p.ends(n, n);
    auto crit = p.crit(n);
    std::vector<GapEntry> out;
    for (std::size_t i = 0; i + 1 < vs.order.size(); ++i) {
        VertexId u = vs.order[i], t = vs.order[i + 1];
        GapEntry g{u, t, GapEntry::Kind::Unknown, -1, {}};
        bool resolved = false;
        for (const CertEnd& e : ends) {
            if (contains(e.dominators, u) && contains(e.dominators, t)) {
                g.kind = GapEntry::Kind::End;
                g.end_id = e.id;
                resolved = true;
                break;
            }
        }
        if (!resolved)
            for (const VSet& xc : crit)
                if (contains(xc, u) && contains(xc, t)) {
                    g.kind = GapEntry::Kind::Crit;
                    g.crit = xc;
                    resolved = true;
                    break;
                }
        if (!resolved) {
            bool adjacent = false;
            for (const Edge& e : lg.graph.edges())
                if ((e.u == u && e.v == t) || (e.u == t && e.v == u)) adjacent = true;
            if (adjacent) continue;  // plain edge, no gap entry
        }
        out.push_back(std::move(g));
    }
    return out;
}

// ------------------------------------------------------------------ ATST

namespace {

VertexId end_node(int end_id) { return -(end_id + 1); }

// Auxiliary multigraph of one inseparability class: class vertices plus one
// synthetic node per class end; edges = aux edges inside the class.
Multigraph class_aux_graph(const AuxGraph& ag, const SimClass& cls) {
    VSet verts = cls.vertices;
    for (int e : cls.ends) verts.push_back(end_node(e));
    verts = canon(verts);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ag.aux.size(); ++i) {
        const AuxEdge& ae = ag.aux[i];
        VertexId a = ae.u;
        VertexId b = ae.kind == AuxEdge::Kind::EndEdge ? end_node(ae.end_id) : ae.v;
        if (contains(verts, a) && contains(verts, b))
            edges.push_back({static_cast<EdgeId>(i), a, b});
    }
    return Multigraph(verts, edges);
}

// Components of the class aux graph minus `removed`, with certified
// end-absorption: a block holding an end is merged with the block holding
// the deepest visible vertex of its defining ray.
std::vector<VSet> absorbed_blocks(const Multigraph& auxg, const VSet& removed,
                                  const std::vector<CertEnd>& ends,
                                  const Multigraph& base) {
    auto comps = components(auxg, removed);
    std::vector<VSet> blocks;
    for (const auto& c : comps) blocks.push_back(c.vertices);
    bool merged = true;
    while (merged) {
        merged = false;
        for (const CertEnd& e : ends) {
            VertexId en = end_node(e.id);
            VertexId tail = -1;
            for (auto it = e.ray.rbegin(); it != e.ray.rend(); ++it)
                if (base.has_vertex(*it) && !contains(removed, *it)) {
                    tail = *it;
                    break;
                }
            if (tail < 0) continue;
            int bi = -1, bj = -1;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                if (contains(blocks[i], en)) bi = static_cast<int>(i);
                if (contains(blocks[i], tail)) bj = static_cast<int>(i);
            }
            if (bi < 0 || bj < 0 || bi == bj) continue;
            blocks[std::min(bi, bj)] =
                set_union(blocks[std::min(bi, bj)], blocks[std::max(bi, bj)]);
            blocks.erase(blocks.begin() + std::max(bi, bj));
            merged = true;
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const VSet& a, const VSet& b) { return a.front() < b.front(); });
    return blocks;
}

Multigraph quotient_graph(const Multigraph& auxg, const VSet& singletons,
                          const std::vector<VSet>& blocks) {
    VSet verts = singletons;
    std::map<VertexId, VertexId> rep;
    for (VertexId v : singletons) rep[v] = v;
    std::map<VertexId, VSet> labels;
    for (const VSet& b : blocks) {
        verts.push_back(b.front());
        labels[b.front()] = b;
        for (VertexId v : b) rep[v] = b.front();
    }
    std::vector<Edge> edges;
    for (const Edge& e : auxg.edges()) {
        auto iu = rep.find(e.u), iv = rep.find(e.v);
        if (iu == rep.end() || iv == rep.end()) continue;
        if (iu->second != iv->second) edges.push_back({e.id, iu->second, iv->second});
    }
    return Multigraph(canon(verts), edges, labels);
}

}  // namespace

AtstResult atst_levels(const Presentation& p, const SimClass& comp,
                       const std::vector<VertexId>& enumeration, int m, int n) {
    AuxGraph ag = aux_graph(p, n);
    std::vector<CertEnd> ends;
    for (const CertEnd& e : p.ends(n, n))
        if (std::count(comp.ends.begin(), comp.ends.end(), e.id)) ends.push_back(e);
    Multigraph auxg = class_aux_graph(ag, comp);
    if (m > static_cast<int>(enumeration.size()))
        throw Error("EnumerationIncomplete", "enumeration shorter than requested steps");
    for (VertexId u : enumeration)
        if (!contains(comp.vertices, u))
            throw Error("EnumerationIncomplete",
                        "enumeration vertex outside the component");

    AtstResult res;
    // H_0: single block
    {
        auto blocks = absorbed_blocks(auxg, {}, ends, ag.base);
        if (blocks.size() != 1)
            throw Error("Disconnected", "the auxiliary skeleton is not connected");
        res.quotients.push_back(quotient_graph(auxg, {}, blocks));
        res.trees.push_back({});
        res.expanded.push_back({});
    }
    VSet xcur;
    for (int step = 1; step <= m; ++step) {
        VertexId u = enumeration[step - 1];
        xcur = set_union(xcur, {u});
        auto blocks = absorbed_blocks(auxg, xcur, ends, ag.base);
        Multigraph h = quotient_graph(auxg, xcur, blocks);
        // previous tree edges survive; add a spanning star from u to the
        // blocks that split off the expanded one
        std::vector<EdgeId> tree = res.trees.back();
        const Multigraph& prev = res.quotients.back();
        // blocks of the current level that were inside the expanded block
        VSet prev_expanded;
        for (const auto& [v, lab] : prev.labels())
            if (contains(lab, u)) prev_expanded = lab;
        for (const VSet& b : blocks) {
            if (!is_subset(b, prev_expanded)) continue;
            EdgeId pick = -1;
            for (const Edge& e : h.edges()) {
                bool touches_u = e.u == u || e.v == u;
                VertexId other = e.u == u ? e.v : e.u;
                if (touches_u && other == b.front() && (pick < 0 || e.id < pick))
                    pick = e.id;
            }
            if (pick < 0)
                throw Error("Disconnected", "split block lost its star edge");
            tree.push_back(pick);
        }
        std::sort(tree.begin(), tree.end());
        res.quotients.push_back(std::move(h));
        res.trees.push_back(std::move(tree));
        res.expanded.push_back(xcur);
    }
    return res;
}

// ------------------------------------------------------------------ pipeline

namespace {

// Deterministic enumeration of k edge-disjoint spanning-tree packings of g,
// capped; `truncated` reports whether the cap or the node budget was hit.
std::vector<std::map<EdgeId, int>> enumerate_packings(const Multigraph& g, int k,
                                                      int cap, bool* truncated) {
    std::vector<std::map<EdgeId, int>> out;
    std::vector<const Edge*> eligible;
    for (const Edge& e : g.edges())
        if (e.u != e.v) eligible.push_back(&e);
    std::size_t need = g.order() >= 1 ? g.order() - 1 : 0;
    long budget = 500000;
    std::vector<std::map<VertexId, VertexId>> parents(k);
    std::vector<int> color(eligible.size(), 0);
    std::vector<int> used(k, 0);

    // union-find helpers rebuilt per query (graphs here are tiny)
    auto joins = [&](int f, std::size_t upto, const Edge* e) {
        std::map<VertexId, VertexId> par;
        for (VertexId v : g.vertices()) par[v] = v;
        std::function<VertexId(VertexId)> find = [&](VertexId v) {
            while (par[v] != v) v = par[v] = par[par[v]];
            return v;
        };
        for (std::size_t i = 0; i < upto; ++i)
            if (color[i] == f + 1) {
                VertexId a = find(eligible[i]->u), b = find(eligible[i]->v);
                if (a != b) par[b] = a;
            }
        return find(e->u) != find(e->v);
    };

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (static_cast<int>(out.size()) >= cap || budget <= 0) {
            *truncated = true;
            return;
        }
        --budget;
        // prune: remaining edges cannot complete the trees
        std::size_t remaining = eligible.size() - pos;
        std::size_t deficit = 0;
        for (int f = 0; f < k; ++f) deficit += need - used[f];
        if (deficit > remaining) return;
        if (pos == eligible.size()) {
            bool full = true;
            for (int f = 0; f < k; ++f)
                if (used[f] != static_cast<int>(need)) full = false;
            if (!full) return;
            std::map<EdgeId, int> packing;
            for (std::size_t i = 0; i < eligible.size(); ++i)
                if (color[i] > 0) packing[eligible[i]->id] = color[i] - 1;
            out.push_back(std::move(packing));
            return;
        }
        for (int f = 0; f < k; ++f) {
            if (used[f] == static_cast<int>(need)) continue;
            if (!joins(f, pos, eligible[pos])) continue;
            color[pos] = f + 1;
            ++used[f];
            self(self, pos + 1);
            --used[f];
            color[pos] = 0;
            if (static_cast<int>(out.size()) >= cap || budget <= 0) return;
        }
        color[pos] = 0;
        self(self, pos + 1);  // leave unused
    };
    *truncated = false;
    rec(rec, 0);
    return out;
}

}  // namespace

PackResult pack_pipeline(const Presentation& p, int k, int chain_length, int n,
                         int candidate_cap) {
    if (!p.certified() || !p.flags().connected.value_or(false))
        throw Error("Disconnected", "pipeline needs a certified connected presentation");
    PackResult res;
    res.level = n;

    // default F-chain: all edges visible at level i
    std::vector<std::vector<EdgeId>> fchain;
    for (int i = 1; i <= chain_length; ++i) {
        std::vector<EdgeId> f;
        for (const Edge& e : p.truncate(std::min(i, n)).graph.edges()) f.push_back(e.id);
        fchain.push_back(std::move(f));
    }

    std::vector<Multigraph> gfs;
    for (const auto& f : fchain) gfs.push_back(gf_level(p, f, n));

    for (const Multigraph& gf : gfs)
        if (gf.order() <= 10) {
            auto witness = cut_condition_witness(gf, k);
            if (witness) {
                res.status = PackResult::Status::CutConditionFailed;
                res.violating = *witness;
                return res;
            }
        }

    bool truncated = false;
    std::vector<std::vector<std::map<EdgeId, int>>> candidates;
    for (const Multigraph& gf : gfs) {
        bool t = false;
        candidates.push_back(enumerate_packings(gf, k, candidate_cap, &t));
        truncated = truncated || t;
        if (candidates.back().empty()) {
            res.status = PackResult::Status::ThreadEmpty;
            res.enumeration_truncated = truncated;
            return res;
        }
    }

    // cross-edge sets per level (edges that are not loops in gf_i)
    std::vector<std::set<EdgeId>> cross(gfs.size());
    for (std::size_t i = 0; i < gfs.size(); ++i)
        for (const Edge& e : gfs[i].edges())
            if (e.u != e.v) cross[i].insert(e.id);

    InverseSystem sys;
    sys.size = static_cast<int>(gfs.size());
    sys.leq = [](int a, int b) { return a <= b; };
    sys.points = [&candidates](int i) {
        std::vector<long> out;
        for (std::size_t c = 0; c < candidates[i].size(); ++c)
            out.push_back(static_cast<long>(c));
        return out;
    };
    sys.bond = [&candidates, &cross](int hi, int lo, long c) {
        std::map<EdgeId, int> restricted;
        for (const auto& [e, t] : candidates[hi][c])
            if (cross[lo].count(e)) restricted[e] = t;
        for (std::size_t i = 0; i < candidates[lo].size(); ++i)
            if (candidates[lo][i] == restricted) return static_cast<long>(i);
        return -1L;
    };

    std::vector<int> idx(gfs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    auto thread = thread_search(sys, idx);
    if (!thread) {
        res.status = PackResult::Status::ThreadEmpty;
        res.enumeration_truncated = truncated;
        return res;
    }

    for (std::size_t i = 0; i < gfs.size(); ++i) {
        const auto& packing = candidates[i][thread->points[i]];
        LevelPack lp;
        lp.f = fchain[i];
        lp.trees.assign(k, {});
        for (const auto& [e, t] : packing) lp.trees[t].push_back(e);
        res.levels.push_back(std::move(lp));
        for (const auto& [e, t] : packing) res.limit_assignment[e] = t;
    }

    // auxiliary completion: one shared skeleton tree per inseparability class
    for (const SimClass& cls : p.sim_classes(n)) {
        std::vector<VertexId> enumeration = cls.vertices;
        int steps = std::min<int>(static_cast<int>(enumeration.size()),
                                  std::max(1, chain_length));
        AtstResult atst = atst_levels(p, cls, enumeration, steps, n);
        AuxGraph ag = aux_graph(p, n);
        for (EdgeId id : atst.trees.back()) res.completion.push_back(ag.aux[id]);
    }
    res.enumeration_truncated = truncated;
    return res;
}

}  // namespace tk
