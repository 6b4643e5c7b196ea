#include "tanglekit/structure.hpp"

#include <deque>
#include <set>

#include "tanglekit/flow.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tk {
namespace {

bool touches_frontier(const VSet& comp, const VSet& frontier) {
    return !set_intersect(comp, frontier).empty();
}

std::optional<CertEnd> find_end(const Presentation& p, int end_id, int n) {
    for (const CertEnd& e : p.ends(n, n))
        if (e.id == end_id) return e;
    return std::nullopt;
}

// Deepest defining-ray vertex visible in g.
VertexId ray_tail(const CertEnd& e, const Multigraph& g) {
    for (auto it = e.ray.rbegin(); it != e.ray.rend(); ++it)
        if (g.has_vertex(*it)) return *it;
    throw Error("InsufficientDepth", "end ray not visible at this level");
}

int evidence_threshold(int n) { return std::max(3, n / 2); }

}  // namespace

ComponentReport component_report(const Presentation& p, const VSet& x, int n) {
    const LeveledGraph& lg = p.truncate(n);
    for (VertexId v : x)
        if (!lg.graph.has_vertex(v)) throw Error("UnknownVertex", std::to_string(v));
    ComponentReport rep;
    rep.level = n;
    rep.separator = x;
    for (const auto& c : components(lg.graph, x)) {
        LevelComponent lc{c.vertices, c.nbhd};
        if (touches_frontier(c.vertices, lg.frontier))
            rep.open.push_back(std::move(lc));
        else
            rep.closed.push_back(std::move(lc));
    }
    return rep;
}

std::vector<CritWitness> crit_of(const Presentation& p, const VSet& x, int n, int k) {
    if (k < 2) throw Error("BadArgument", "crit_of needs k >= 2");
    ComponentReport rep = component_report(p, x, n);
    std::map<VSet, int> counts;
    for (const LevelComponent& c : rep.closed) ++counts[c.nbhd];
    auto cert_list = p.crit(n);
    std::set<VSet> certified(cert_list.begin(), cert_list.end());
    std::vector<CritWitness> out;
    for (const auto& [y, count] : counts)
        if (count >= k)
            out.push_back({x, y, count, n, certified.count(y) > 0});
    return out;
}

std::vector<CritWitness> enumerate_crit(const Presentation& p, int size_bound,
                                        int n, int k) {
    if (size_bound > 6) throw Error("TooLarge", "size bound is capped at 6");
    const LeveledGraph& lg = p.truncate(n);
    const LeveledGraph& old = p.truncate(std::max(0, n - 3));

    // Candidates: vertices whose degree strictly increased over the last
    // three levels (and which already existed back then).
    VSet candidates;
    for (VertexId v : old.graph.vertices())
        if (lg.graph.degree(v) > old.graph.degree(v)) candidates.push_back(v);

    // Compact adjacency for fast repeated component sweeps.
    std::map<VertexId, int> idx;
    int nv = 0;
    for (VertexId v : lg.graph.vertices()) idx[v] = nv++;
    std::vector<std::vector<int>> adj(nv);
    for (const Edge& e : lg.graph.edges()) {
        if (e.u == e.v) continue;
        adj[idx[e.u]].push_back(idx[e.v]);
        adj[idx[e.v]].push_back(idx[e.u]);
    }
    std::vector<bool> frontier(nv, false);
    for (VertexId v : lg.frontier) frontier[idx[v]] = true;
    std::vector<VertexId> back(nv);
    for (const auto& [v, i] : idx) back[i] = v;

    // All nonempty subsets of candidates up to the size bound.
    std::vector<VSet> subsets;
    VSet cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!cur.empty()) subsets.push_back(cur);
        if (static_cast<int>(cur.size()) == size_bound) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            cur.push_back(candidates[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    auto cert_list = p.crit(n);
    std::set<VSet> certified(cert_list.begin(), cert_list.end());
    std::map<VSet, CritWitness> found;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::map<VSet, CritWitness> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
        for (std::size_t si = 0; si < subsets.size(); ++si) {
            const VSet& x = subsets[si];
            std::vector<int> mark(nv, 0);  // 1 = in x
            for (VertexId v : x) mark[idx.at(v)] = 1;
            std::vector<int> comp(nv, -1);
            int nc = 0;
            std::vector<int> stack;
            std::map<VSet, int> counts;
            for (int s = 0; s < nv; ++s) {
                if (mark[s] || comp[s] >= 0) continue;
                int c = nc++;
                bool open = false;
                VSet nbhd;
                stack.push_back(s);
                comp[s] = c;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    if (frontier[v]) open = true;
                    for (int w : adj[v]) {
                        if (mark[w]) {
                            nbhd.push_back(back[w]);
                        } else if (comp[w] < 0) {
                            comp[w] = c;
                            stack.push_back(w);
                        }
                    }
                }
                if (!open) ++counts[canon(std::move(nbhd))];
            }
            for (const auto& [y, count] : counts) {
                if (count < k || y.empty()) continue;
                auto it = local.find(y);
                if (it == local.end() || it->second.witness_count < count)
                    local[y] = {x, y, count, n, certified.count(y) > 0};
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        for (const auto& [y, w] : local) {
            auto it = found.find(y);
            if (it == found.end() || it->second.witness_count < w.witness_count ||
                (it->second.witness_count == w.witness_count && w.x < it->second.x))
                found[y] = w;
        }
    }
    std::vector<CritWitness> out;
    for (const auto& [y, w] : found) out.push_back(w);
    return out;
}

std::vector<EndSurrogate> directions(const Presentation& p, int depth) {
    if (depth < 1) throw Error("BadArgument", "depth must be >= 1");
    int n = depth + 4;
    const LeveledGraph& lg = p.truncate(n);

    std::vector<VSet> chain;
    for (int i = 1; i <= depth; ++i) {
        const LeveledGraph& li = p.truncate(i);
        chain.push_back(set_minus(li.graph.vertices(), li.frontier));
    }
    // components per chain position
    std::vector<std::vector<ComponentNbhd>> comps;
    for (const VSet& x : chain) comps.push_back(components(lg.graph, x));

    // threads via backward pruning over component containment
    std::vector<std::vector<int>> survivors(depth);
    for (int i = 0; i < depth; ++i)
        for (std::size_t c = 0; c < comps[i].size(); ++c)
            survivors[i].push_back(static_cast<int>(c));
    for (int i = depth - 2; i >= 0; --i) {
        std::vector<int> keep;
        for (int c : survivors[i]) {
            bool has_pre = false;
            for (int d : survivors[i + 1])
                if (is_subset(comps[i + 1][d].vertices, comps[i][c].vertices)) {
                    has_pre = true;
                    break;
                }
            if (has_pre) keep.push_back(c);
        }
        survivors[i] = std::move(keep);
    }
    // enumerate all threads (deterministic DFS, least first)
    std::vector<std::vector<int>> threads;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int pos) -> void {
        if (pos == depth) {
            threads.push_back(cur);
            return;
        }
        for (int c : survivors[pos]) {
            if (pos > 0 &&
                !is_subset(comps[pos][c].vertices, comps[pos - 1][cur.back()].vertices))
                continue;
            cur.push_back(c);
            self(self, pos + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);

    auto ends = p.ends(depth, n);
    std::vector<EndSurrogate> out;
    for (const auto& t : threads) {
        EndSurrogate s;
        for (int i = 0; i < depth; ++i)
            s.thread.push_back({chain[i], comps[i][t[i]].vertices});
        for (const CertEnd& e : ends) {
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                VSet avail = set_minus(VSet(e.ray.begin(), e.ray.end()), chain[i]);
                VertexId tail = -1;
                for (auto it = e.ray.rbegin(); it != e.ray.rend(); ++it)
                    if (lg.graph.has_vertex(*it) && !contains(chain[i], *it)) {
                        tail = *it;
                        break;
                    }
                (void)avail;
                if (tail < 0 || !contains(comps[i][t[i]].vertices, tail)) ok = false;
            }
            if (ok) {
                s.end_id = e.id;
                s.name = e.name;
                s.dominators = e.dominators;
                s.matched = true;
                break;
            }
        }
        out.push_back(std::move(s));
    }
    if (p.certified()) {
        std::vector<EndSurrogate> matched;
        std::set<int> seen;
        for (auto& s : out)
            if (s.matched && seen.insert(s.end_id).second) matched.push_back(std::move(s));
        return matched;
    }
    return out;
}

DominationResult dominates(const Presentation& p, VertexId u, int end_id, int n) {
    auto e = find_end(p, end_id, n);
    if (!e) throw Error("UnknownEnd", std::to_string(end_id));
    const LeveledGraph& lg = p.truncate(n);
    if (!lg.graph.has_vertex(u)) throw Error("UnknownVertex", std::to_string(u));

    VSet targets;
    for (VertexId v : e->ray)
        if (v != u && lg.graph.has_vertex(v)) targets.push_back(v);
    targets = canon(std::move(targets));
    VSet separator;
    int fan = max_vertex_fan(lg.graph, u, targets, &separator);

    if (p.certified()) {
        if (contains(e->dominators, u)) return {Verdict::Witnessed, fan, {}, "certified"};
        if (!e->dominators_unbounded)
            return {Verdict::Refuted, fan, separator, "certified"};
    }
    if (fan >= evidence_threshold(n)) return {Verdict::Witnessed, fan, {}, "witnessed"};
    // closed-component refutation: u's side of the separator is final
    auto comps = components(lg.graph, separator);
    for (const auto& c : comps)
        if (contains(c.vertices, u)) {
            if (!touches_frontier(c.vertices, lg.frontier))
                return {Verdict::Refuted, fan, separator, "closed-component"};
            break;
        }
    return {Verdict::Unknown, fan, separator, "depth-bounded"};
}

namespace {

VertexId proxy_of(const Presentation& p, const PointRef& r, int n) {
    const LeveledGraph& lg = p.truncate(n);
    if (!r.is_end) {
        if (!lg.graph.has_vertex(r.vertex))
            throw Error("UnknownVertex", std::to_string(r.vertex));
        return r.vertex;
    }
    auto e = find_end(p, r.end_id, n);
    if (!e) throw Error("UnknownEnd", std::to_string(r.end_id));
    return ray_tail(*e, lg.graph);
}

bool in_common_class(const Presentation& p, const PointRef& a, const PointRef& b,
                     int n) {
    for (const SimClass& c : p.sim_classes(n)) {
        auto holds = [&](const PointRef& r) {
            return r.is_end ? std::count(c.ends.begin(), c.ends.end(), r.end_id) > 0
                            : contains(c.vertices, r.vertex);
        };
        if (holds(a) && holds(b)) return true;
    }
    return false;
}

}  // namespace

SeparabilityResult not_finitely_separable(const Presentation& p, PointRef a,
                                          PointRef b, int n) {
    const LeveledGraph& lg = p.truncate(n);
    VertexId va = proxy_of(p, a, n), vb = proxy_of(p, b, n);
    if (va == vb) throw Error("SameVertex", std::to_string(va));
    std::vector<EdgeId> cut;
    int flow = max_edge_disjoint_paths(lg.graph, va, vb, &cut);

    if (p.certified()) {
        if (in_common_class(p, a, b, n))
            return {Verdict::Witnessed, flow, {}, {}, "certified"};
        // certified separable: report the level cut with its closed side
        SeparabilityResult r{Verdict::Refuted, flow, cut, {}, "certified"};
        Multigraph rest(lg.graph.vertices(), [&] {
            std::vector<Edge> kept;
            VSet cs = canon(VSet(cut.begin(), cut.end()));
            for (const Edge& e : lg.graph.edges())
                if (!contains(cs, e.id)) kept.push_back(e);
            return kept;
        }());
        for (const auto& c : components(rest, {}))
            if (contains(c.vertices, va) || contains(c.vertices, vb))
                if (!touches_frontier(c.vertices, lg.frontier)) r.side = c.vertices;
        return r;
    }
    if (flow >= evidence_threshold(n))
        return {Verdict::Witnessed, flow, {}, {}, "witnessed"};
    // uncertified separation: valid when one side of the min cut is closed
    Multigraph rest(lg.graph.vertices(), [&] {
        std::vector<Edge> kept;
        VSet cs = canon(VSet(cut.begin(), cut.end()));
        for (const Edge& e : lg.graph.edges())
            if (!contains(cs, e.id)) kept.push_back(e);
        return kept;
    }());
    for (const auto& c : components(rest, {}))
        if ((contains(c.vertices, va) || contains(c.vertices, vb)) &&
            !touches_frontier(c.vertices, lg.frontier))
            return {Verdict::Refuted, flow, cut, c.vertices, "closed-side"};
    return {Verdict::Unknown, flow, cut, {}, "depth-bounded"};
}

LinkResult strongly_linked(const Presentation& p, VertexId a, VertexId b, int n) {
    if (a == b) throw Error("SameVertex", std::to_string(a));
    const LeveledGraph& lg = p.truncate(n);
    if (!lg.graph.has_vertex(a) || !lg.graph.has_vertex(b))
        throw Error("UnknownVertex", "linkage endpoints must be visible");

    // Candidate X sets: {a,b}, certified critical sets through both, and
    // unions along paths in the certified linkage graph (vertices joined when
    // they share a critical set or both dominate a common end).
    std::vector<VSet> candidates;
    candidates.push_back(canon({a, b}));
    std::vector<VSet> cliques;  // linkage cliques
    for (const VSet& c : p.crit(n)) cliques.push_back(c);
    for (const CertEnd& e : p.ends(n, n))
        if (e.dominators.size() >= 2 || e.dominators_unbounded)
            cliques.push_back(e.dominators);
    // BFS from a to b over clique-connectivity
    {
        std::map<VertexId, std::pair<VertexId, int>> pred;  // vertex -> (prev, clique)
        std::deque<VertexId> q{a};
        pred[a] = {a, -1};
        while (!q.empty() && !pred.count(b)) {
            VertexId v = q.front();
            q.pop_front();
            for (std::size_t ci = 0; ci < cliques.size(); ++ci)
                if (contains(cliques[ci], v))
                    for (VertexId w : cliques[ci])
                        if (!pred.count(w)) {
                            pred[w] = {v, static_cast<int>(ci)};
                            q.push_back(w);
                        }
        }
        if (pred.count(b)) {
            VSet x;
            for (VertexId v = b; v != a; v = pred[v].first) x.push_back(v);
            x.push_back(a);
            candidates.push_back(canon(x));
        }
    }

    int threshold = evidence_threshold(n);
    LinkResult best{Verdict::Refuted, {}, 0, p.certified() ? "certified" : "bounded-search"};
    for (const VSet& x : candidates) {
        VSet visible = set_intersect(x, lg.graph.vertices());
        if (!contains(visible, a) || !contains(visible, b)) continue;
        // remove edges inside X, make X uncuttable, measure the cut
        std::vector<Edge> kept;
        for (const Edge& e : lg.graph.edges())
            if (!(contains(visible, e.u) && contains(visible, e.v))) kept.push_back(e);
        Multigraph h(lg.graph.vertices(), kept);
        int cut = max_internally_disjoint_paths_avoiding(h, a, b, visible);
        if (cut >= threshold) return {Verdict::Witnessed, visible, cut, "witnessed"};
        best.cut_size = std::max(best.cut_size, cut);
    }
    if (!p.certified()) best.verdict = Verdict::Unknown;
    return best;
}

CompactnessReport compactness_predicates(const Presentation& p, int n) {
    (void)n;
    CertFlags f = p.flags();
    if (f.ends_locally_compact.has_value() || f.one_point_omega.has_value())
        return {f.ends_locally_compact, f.one_point_omega, "certified"};
    return {std::nullopt, std::nullopt, "unknown"};
}

std::vector<VSet> defining_sequence(const Presentation& p, int end_id, int m,
                                    int n) {
    auto e = find_end(p, end_id, n);
    if (!e) throw Error("UnknownEnd", std::to_string(end_id));
    if (e->dominators_unbounded)
        throw Error("DominatorsUnbounded", "certificate marks the dominating set infinite");
    const LeveledGraph& lg = p.truncate(n);
    VSet delta = e->dominators;

    // H = the component of G - Delta(omega) in which the end lives.
    VertexId tail = ray_tail(*e, lg.graph);
    VSet hverts;
    for (const auto& c : components(lg.graph, delta))
        if (contains(c.vertices, tail)) hverts = c.vertices;
    std::vector<Edge> hedges;
    for (const Edge& ed : lg.graph.edges())
        if (contains(hverts, ed.u) && contains(hverts, ed.v)) hedges.push_back(ed);
    Multigraph h(hverts, hedges);

    VertexId start = -1;
    for (VertexId v : e->ray)
        if (h.has_vertex(v)) {
            start = v;
            break;
        }
    if (start < 0) throw Error("InsufficientDepth", "ray does not reach past the dominators");

    std::vector<VSet> out{{start}};
    for (int i = 0; i < m; ++i) {
        const VSet& xi = out.back();
        VSet separators;
        for (VertexId x : xi) {
            VSet targets;
            for (VertexId v : e->ray)
                if (h.has_vertex(v) && v != x) targets.push_back(v);
            VSet s;
            max_vertex_fan(h, x, canon(std::move(targets)), &s);
            separators = set_union(separators, s);
        }
        if (separators.empty())
            throw Error("InsufficientDepth", "no further separator at this level");
        // X_{i+1} = neighbourhood of the tail component of H - separators
        VertexId t = -1;
        for (auto it = e->ray.rbegin(); it != e->ray.rend(); ++it)
            if (h.has_vertex(*it) && !contains(separators, *it)) {
                t = *it;
                break;
            }
        if (t < 0) throw Error("InsufficientDepth", "tail swallowed by separator");
        VSet next;
        for (const auto& c : components(h, separators))
            if (contains(c.vertices, t)) next = c.nbhd;
        if (next.empty()) throw Error("InsufficientDepth", "empty neighbourhood");
        out.push_back(next);
    }
    return out;
}

MinorWitness bipartite_minor_witness(const Presentation& p, const VSet& x, int k,
                                     int n) {
    auto certified = p.crit(n);
    if (x.size() < 3 ||
        std::find(certified.begin(), certified.end(), x) == certified.end())
        throw Error("NotCritical", "X must be a certified critical set of size >= 3");
    ComponentReport rep = component_report(p, x, n);
    MinorWitness w;
    w.x = x;
    for (const LevelComponent& c : rep.closed) {
        if (c.nbhd != x) continue;
        w.component_branches.push_back(c.vertices);
        if (static_cast<int>(w.component_branches.size()) == k) break;
    }
    if (static_cast<int>(w.component_branches.size()) < k)
        throw Error("InsufficientDepth", "fewer than k closed components attach to X");
    return w;
}

QuotientReport quotient_points(const Presentation& p, int n) {
    CertFlags f = p.flags();
    if (!f.connected.value_or(false))
        throw Error("Disconnected", "quotient classification needs a certified connected graph");
    const LeveledGraph& lg = p.truncate(n);
    QuotientReport rep;
    rep.level = n;
    auto classes = p.sim_classes(n);
    VSet covered;
    std::set<int> covered_ends;
    for (const SimClass& c : classes) {
        rep.vertex_classes.push_back({c.vertices, c.ends});
        covered = set_union(covered, c.vertices);
        covered_ends.insert(c.ends.begin(), c.ends.end());
    }
    for (VertexId v : lg.graph.vertices())
        if (!contains(covered, v)) rep.vertex_classes.push_back({{v}, {}});
    for (const CertEnd& e : p.ends(n, n))
        if (!covered_ends.count(e.id) && e.dominators.empty() && !e.dominators_unbounded)
            rep.singleton_ends.push_back(e.id);
        else if (!covered_ends.count(e.id) && (!e.dominators.empty() || e.dominators_unbounded)) {
            // dominated end: absorbed into the class of its dominators
            for (auto& qc : rep.vertex_classes)
                if (!set_intersect(qc.vertices, e.dominators).empty()) {
                    qc.ends.push_back(e.id);
                    break;
                }
        }
    return rep;
}

}  // namespace tk
