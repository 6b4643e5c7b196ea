#include "tanglekit/sweeps.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tk {
namespace {

using Clock = std::chrono::steady_clock;

std::string show(const VSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(s[i]);
    }
    return r + "}";
}

// ------------------------------------------------------------- graph pools

void multigraphs_rec(int nv, int max_edges, const std::vector<std::pair<int, int>>& slots,
                     std::size_t slot, int used, std::vector<int>& mult,
                     std::vector<Multigraph>& out) {
    if (slot == slots.size()) {
        VSet verts;
        for (int i = 0; i < nv; ++i) verts.push_back(i);
        std::vector<Edge> edges;
        EdgeId id = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
            for (int c = 0; c < mult[s]; ++c)
                edges.push_back({id++, slots[s].first, slots[s].second});
        Multigraph g(verts, edges);
        if (g.connected()) out.push_back(std::move(g));
        return;
    }
    for (int c = 0; used + c <= max_edges; ++c) {
        mult[slot] = c;
        multigraphs_rec(nv, max_edges, slots, slot + 1, used + c, mult, out);
    }
    mult[slot] = 0;
}

}  // namespace

std::vector<Multigraph> all_connected_multigraphs(int max_vertices, int max_edges) {
    std::vector<Multigraph> out;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j) slots.push_back({i, j});
        std::vector<int> mult(slots.size(), 0);
        multigraphs_rec(nv, max_edges, slots, 0, 0, mult, out);
    }
    return out;
}

Multigraph random_connected_multigraph(std::uint64_t seed, int vertices,
                                       int min_edges, int max_edges) {
    std::mt19937_64 rng(seed);
    while (true) {
        int ne = min_edges + static_cast<int>(rng() % (max_edges - min_edges + 1));
        VSet verts;
        for (int i = 0; i < vertices; ++i) verts.push_back(i);
        std::vector<Edge> edges;
        for (int e = 0; e < ne; ++e) {
            VertexId u = static_cast<VertexId>(rng() % vertices);
            VertexId v = static_cast<VertexId>(rng() % vertices);
            edges.push_back({e, u, v});
        }
        Multigraph g(verts, edges);
        if (g.connected()) return g;
    }
}

std::vector<Multigraph> all_simple_graphs(int max_vertices) {
    std::vector<Multigraph> out;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) slots.push_back({i, j});
        for (std::size_t mask = 0; mask < (1u << slots.size()); ++mask) {
            VSet verts;
            for (int i = 0; i < nv; ++i) verts.push_back(i);
            std::vector<Edge> edges;
            EdgeId id = 0;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask & (1u << s))
                    edges.push_back({id++, slots[s].first, slots[s].second});
            out.emplace_back(verts, edges);
        }
    }
    return out;
}

namespace {

// ------------------------------------------------------------- sweep bodies

SweepResult sweep_treepack(unsigned seed) {
    SweepResult r{"treepack-nwt", true, "", 0};
    auto graphs = all_connected_multigraphs(4, 7);
    for (int i = 0; i < 500; ++i)
        graphs.push_back(random_connected_multigraph(seed * 1000003ull + i, 5, 4, 10));
    std::string fail;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (int k = 1; k <= 3; ++k) {
            bool packed = pack_trees(graphs[i], k).has_value();
            bool cc = cut_condition(graphs[i], k);
            if (packed != cc) {
#ifdef _OPENMP
#pragma omp critical
#endif
                fail = "graph " + std::to_string(i) + " k=" + std::to_string(k);
            }
        }
    }
    if (!fail.empty()) {
        r.pass = false;
        r.detail = "pack/cut mismatch at " + fail;
    } else {
        r.detail = std::to_string(graphs.size()) + " graphs, k in {1,2,3}";
    }
    return r;
}

SweepResult sweep_crit_regression(unsigned) {
    SweepResult r{"crit-regression", true, "", 0};
    auto collect = [](const std::string& fam, int n, int k) {
        auto p = make_presentation(fam);
        std::set<VSet> ys;
        for (const CritWitness& w : enumerate_crit(*p, 6, n, k)) ys.insert(w.y);
        return ys;
    };
    std::ostringstream detail;
    auto expect = [&](const std::string& fam, int n, int k, std::set<VSet> want) {
        auto got = collect(fam, n, k);
        if (got != want) {
            r.pass = false;
            detail << fam << ": got {";
            for (const VSet& y : got) detail << show(y);
            detail << "} ";
        }
    };
    expect("fig4", 40, 10, {{0}, {1}, {0, 1}});
    expect("k2inf", 30, 10, {{0, 1}});
    {
        std::set<VSet> want;
        VSet x;
        for (int j = 0; j <= 5; ++j) {
            x.push_back(2 * j);
            want.insert(x);
        }
        expect("crit_chain", 20, 10, want);
    }
    expect("ray", 12, 2, {});
    expect("grid", 12, 2, {});
    expect("double_ray", 12, 2, {});
    if (r.pass) r.detail = "fig4/k2inf/crit_chain/ray/grid/double_ray exact";
    else r.detail = detail.str();
    return r;
}

SweepResult sweep_census(unsigned) {
    SweepResult r{"fthread-census", true, "", 0};
    std::ostringstream detail;
    auto census = [](const std::string& fam, int depth, int n) {
        auto p = make_presentation(fam);
        int c = 0;
        for (const FThread& t : f_threads(*p, depth, n))
            if (t.counts_in_census) ++c;
        return c;
    };
    auto expect = [&](const std::string& fam, int depth, int n, int want) {
        int got = census(fam, depth, n);
        if (got != want) {
            r.pass = false;
            detail << fam << " d=" << depth << ": " << got << " != " << want << "; ";
        }
    };
    expect("ray_star", 6, 10, 7);   // 6 ends + 1 critical set
    expect("k2inf", 6, 12, 1);      // 0 + 1
    // crit_chain, depth-5 window: 1 end + the critical sets visible at the top
    {
        auto p = make_presentation("crit_chain");
        auto chain = p->fchain(5, 12);
        auto lvl = f_level(*p, chain.back(), 12, p->ends(5, 12));
        expect("crit_chain", 5, 12, 1 + static_cast<int>(lvl.crit.size()));
    }
    if (r.pass) r.detail = "ray_star 6+1, k2inf 0+1, crit_chain 1+crit";
    else r.detail = detail.str();
    return r;
}

SweepResult sweep_bonding(unsigned seed) {
    SweepResult r{"bonding-laws", true, "", 0};
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, int>> fams = {
        {"k2inf", 15}, {"kminf", 12},      {"dominated_ray", 15}, {"ray_star", 8},
        {"fig4", 12},  {"fig5", 8},        {"crit_chain", 10},    {"fig16", 10},
        {"ray", 15},   {"double_ray", 15}, {"grid", 8},           {"binary_flower", 7}};
    int checked = 0, skipped = 0;
    std::string fail;
    for (int trial = 0; trial < 1000 && fail.empty(); ++trial) {
        auto& [fam, n] = fams[trial % fams.size()];
        auto p = make_presentation(fam);
        const VSet& verts = p->truncate(n).graph.vertices();
        auto sample = [&](const VSet& base, std::size_t extra) {
            VSet s = base;
            for (std::size_t i = 0; i < extra; ++i)
                s.push_back(verts[rng() % verts.size()]);
            return canon(s);
        };
        VSet x = sample({}, 1 + rng() % 3);
        VSet x2 = sample(x, 1 + rng() % 3);
        VSet x3 = sample(x2, 1 + rng() % 3);
        auto ends = p->ends(n, n);
        FLevel lo = f_level(*p, x, n, ends);
        FLevel mid = f_level(*p, x2, n, ends);
        FLevel hi = f_level(*p, x3, n, ends);
        for (const FPoint& pt : hi.points) {
            try {
                FPoint direct = f_bond(hi, lo, pt);
                FPoint via = f_bond(mid, lo, f_bond(hi, mid, pt));
                if (!(direct == via)) {
                    fail = fam + " composition at level " + std::to_string(n);
                    break;
                }
                ++checked;
            } catch (const Error& e) {
                if (e.kind() == "PendingComponent" || e.kind() == "NotWitnessed")
                    ++skipped;
                else
                    throw;
            }
        }
        // Eq (4): principal bonds follow the component maps
        for (const FPoint& pt : hi.points) {
            if (pt.kind != FPoint::Kind::Principal || pt.certified_end) continue;
            try {
                FPoint img = f_bond(hi, lo, pt);
                if (img.kind != FPoint::Kind::Principal) {
                    fail = fam + ": principal bonded to a filter";
                    break;
                }
                bool containment = false;
                for (const LevelComponent& c : lo.comps)
                    if (c.vertices.front() == img.comp && contains(c.vertices, pt.comp))
                        containment = true;
                if (!containment) {
                    fail = fam + ": principal bond violates phi";
                    break;
                }
            } catch (const Error&) {
                ++skipped;
            }
        }
        // unique lifting of filter points
        for (const FPoint& low : lo.points) {
            if (low.kind != FPoint::Kind::Filter) continue;
            bool witnessed_hi = false;
            for (const FPoint& q : hi.points)
                if (q.kind == FPoint::Kind::Filter && q.y == low.y) witnessed_hi = true;
            if (!witnessed_hi) continue;
            int preimages = 0;
            bool is_filter = true;
            for (const FPoint& q : hi.points) {
                try {
                    FPoint img = f_bond(hi, lo, q);
                    if (img == low) {
                        ++preimages;
                        is_filter = is_filter && q.kind == FPoint::Kind::Filter &&
                                    q.y == low.y;
                    }
                } catch (const Error&) {
                }
            }
            if (preimages != 1 || !is_filter) {
                fail = fam + ": filter " + show(low.y) + " lifts " +
                       std::to_string(preimages) + " ways";
                break;
            }
        }
    }
    if (!fail.empty()) {
        r.pass = false;
        r.detail = fail;
    } else {
        r.detail = std::to_string(checked) + " bonds checked, " +
                   std::to_string(skipped) + " pending skips";
    }
    return r;
}

GammaIndex random_gamma(const Presentation& p, std::mt19937_64& rng, int n) {
    const VSet& verts = p.truncate(n).graph.vertices();
    VSet x;
    std::size_t size = 1 + rng() % 3;
    for (std::size_t i = 0; i < size; ++i) x.push_back(verts[rng() % verts.size()]);
    x = canon(x);
    auto comps = components(p.truncate(n).graph, x);
    int classes = 1 + static_cast<int>(rng() % 3);
    std::map<int, VSet> groups;
    for (const auto& c : comps)
        groups[static_cast<int>(rng() % classes)].push_back(c.vertices.front());
    GammaIndex g;
    g.x = x;
    for (auto& [k, cls] : groups) g.classes.push_back(canon(cls));
    std::sort(g.classes.begin(), g.classes.end());
    return g;
}

GammaIndex random_delta(const Presentation& p, std::mt19937_64& rng, int n) {
    const VSet& verts = p.truncate(n).graph.vertices();
    const VSet& stale = p.truncate(std::max(0, n - 3)).graph.vertices();
    VSet x;
    std::size_t size = 1 + rng() % 2;
    for (std::size_t i = 0; i < size; ++i) x.push_back(verts[rng() % verts.size()]);
    GammaIndex g = p_canonical(p, canon(x), n);
    // split finitely many settled components off each non-singleton class
    GammaIndex out;
    out.x = g.x;
    for (const VSet& cls : g.classes) {
        VSet old_members;
        for (VertexId id : cls)
            if (contains(stale, id)) old_members.push_back(id);
        if (cls.size() <= 2 || old_members.size() < 2 || rng() % 2 == 0) {
            out.classes.push_back(cls);
            continue;
        }
        std::size_t cut = 1 + rng() % std::min<std::size_t>(2, old_members.size() - 1);
        VSet head(old_members.begin(), old_members.begin() + cut);
        VSet tail = set_minus(cls, head);
        for (VertexId id : head) out.classes.push_back({id});
        out.classes.push_back(tail);
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

SweepResult sweep_poset(unsigned seed) {
    SweepResult r{"poset-laws", true, "", 0};
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, int>> fams = {
        {"k2inf", 10}, {"fig4", 10}, {"ray_star", 6}, {"crit_chain", 8}, {"fig5", 6}};
    std::string fail;
    for (int trial = 0; trial < 500 && fail.empty(); ++trial) {
        auto& [fam, n] = fams[trial % fams.size()];
        auto p = make_presentation(fam);
        GammaIndex a = random_gamma(*p, rng, n);
        GammaIndex b = random_gamma(*p, rng, n);
        GammaIndex j = gamma_join(*p, a, b, n);
        if (!gamma_leq(*p, a, j, n) || !gamma_leq(*p, b, j, n))
            fail = "gamma join not an upper bound (" + fam + ")";
    }
    for (int trial = 0; trial < 200 && fail.empty(); ++trial) {
        auto& [fam, n] = fams[trial % fams.size()];
        auto p = make_presentation(fam);
        GammaIndex a = random_delta(*p, rng, n);
        GammaIndex b = random_delta(*p, rng, n);
        if (!delta_member(*p, a, n) || !delta_member(*p, b, n)) {
            fail = "random Delta member invalid (" + fam + ")";
            break;
        }
        GammaIndex j = delta_join(*p, a, b, n);
        if (!delta_member(*p, j, n)) fail = "Delta join escaped Delta (" + fam + ")";
        else if (!gamma_leq(*p, a, j, n) || !gamma_leq(*p, b, j, n))
            fail = "Delta join not an upper bound (" + fam + ")";
    }
    for (int trial = 0; trial < 200 && fail.empty(); ++trial) {
        auto& [fam, n] = fams[trial % fams.size()];
        auto p = make_presentation(fam);
        GammaIndex a = random_delta(*p, rng, n);
        GammaIndex d = delta_dominate(*p, a, n);
        GammaIndex canon_d = p_canonical(*p, d.x, n);
        if (!(d.x == canon_d.x && d.classes == canon_d.classes))
            fail = "dominate output not canonical (" + fam + ")";
        else if (!gamma_leq(*p, a, d, n))
            fail = "dominate output below the input (" + fam + ")";
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? "500 joins, 200 Delta joins, 200 dominations" : fail;
    return r;
}

SweepResult sweep_tangle_self(unsigned) {
    SweepResult r{"tangle-consistency", true, "", 0};
    std::string fail;
    auto graphs = all_simple_graphs(4);
    for (const Multigraph& g : graphs) {
        for (int k = 1; k <= 3 && fail.empty(); ++k) {
            auto par = enumerate_tangles_finite(g, k);
            auto ser = enumerate_tangles_finite_serial(g, k);
            if (par.size() != ser.size()) {
                fail = "parallel/serial disagree";
                break;
            }
            for (const Orientation& tau : par) {
                if (!check_orientation(tau).consistent) {
                    fail = "inconsistent tangle emitted";
                    break;
                }
                // U(tau, X) is a principal ultrafilter for every small X
                const VSet& verts = g.vertices();
                for (std::size_t mask = 0; mask < (1u << verts.size()); ++mask) {
                    VSet x;
                    for (std::size_t i = 0; i < verts.size(); ++i)
                        if (mask & (1u << i)) x.push_back(verts[i]);
                    if (static_cast<int>(x.size()) >= k) continue;
                    if (components(g, x).empty()) continue;
                    auto fam = u_of(g, tau, x);
                    if (!is_principal_ultrafilter(g, x, fam)) {
                        fail = "U(tau,X) not principal";
                        break;
                    }
                }
                if (!fail.empty()) break;
            }
        }
        if (!fail.empty()) break;
    }
    // finite shadow: no dummy-only Gamma-thread survives to X = V
    if (fail.empty()) {
        Json spec = {{"custom",
                      {{"levels",
                        {{{"add_vertices", {0, 1, 2, 3}},
                          {"add_edges",
                           {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 1, 2}, {4, 1, 3}, {5, 2, 3}}},
                          {"frontier", Json::array()}}}}}}};
        auto p = presentation_from_json(spec);
        int n = 2;
        std::vector<GammaIndex> chain;
        VSet x;
        chain.push_back(p_canonical(*p, x, n));
        for (VertexId v : {0, 1, 2, 3}) {
            x = set_union(x, {v});
            chain.push_back(p_canonical(*p, x, n));
        }
        InverseSystem sys;
        sys.size = static_cast<int>(chain.size());
        sys.leq = [&chain](int a, int b) { return is_subset(chain[a].x, chain[b].x); };
        sys.points = [&chain, &p, n](int i) {
            std::vector<long> out;
            Multigraph space = gamma_space(*p, chain[i], n);
            for (VertexId v : space.vertices())
                if (space.labels().count(v)) out.push_back(v);  // dummies only
            return out;
        };
        sys.bond = [&chain, &p, n](int hi, int lo, long v) {
            GammaElem e =
                gamma_bond(*p, chain[hi], chain[lo], {false, static_cast<VertexId>(v), -1}, n);
            Multigraph space = gamma_space(*p, chain[lo], n);
            if (space.labels().count(e.vertex)) return static_cast<long>(e.vertex);
            return -1000000L;  // left the dummy world
        };
        std::vector<int> idx(chain.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        if (thread_search(sys, idx).has_value())
            fail = "dummy-only thread survived to X = V";
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? "parallel=serial, principal U, no dummy thread" : fail;
    return r;
}

SweepResult sweep_sprime(unsigned) {
    SweepResult r{"sprime-orientation", true, "", 0};
    std::string fail;
    auto p = make_presentation("k2inf");
    int n = 30;
    VSet x{0, 1};
    auto comps = components(p->truncate(n).graph, x);
    // evens/odds split is rejected
    VSet evens;
    for (std::size_t i = 0; i < comps.size(); i += 2)
        evens.push_back(comps[i].vertices.front());
    auto verdict = in_S_prime(*p, {x, evens}, n);
    if (!verdict.has_value() || *verdict)
        fail = "evens/odds split was not rejected from S'";
    // 20 singleton-side separations are in S'; threads orient them consistently
    std::vector<PSep> sample;
    for (int i = 0; i < 20; ++i) sample.push_back({x, {comps[i].vertices.front()}});
    for (const PSep& s : sample) {
        auto v = in_S_prime(*p, s, n);
        if (!v.has_value() || !*v) fail = "singleton-side separation rejected";
    }
    if (fail.empty()) {
        auto threads = f_threads(*p, 6, n);
        std::vector<Orientation> oris;
        for (const FThread& t : threads) {
            if (!t.counts_in_census) continue;
            Orientation o = fpoint_orientation(*p, t, sample, n);
            if (!check_orientation(o).consistent) fail = "thread orientation inconsistent";
            oris.push_back(std::move(o));
        }
        if (oris.empty()) fail = "no census thread produced an orientation";
    }
    // distinctness on fig4's three filter threads
    if (fail.empty()) {
        auto p4 = make_presentation("fig4");
        int n4 = 20;
        VSet x4{0, 1};
        auto comps4 = components(p4->truncate(n4).graph, x4);
        std::vector<PSep> sample4;
        // the three family sides distinguish the filter threads
        std::map<VSet, VSet> families;
        for (const auto& c : comps4) families[c.nbhd].push_back(c.vertices.front());
        for (auto& [y, side] : families) sample4.push_back({x4, canon(side)});
        for (int i = 0; i < 17 && i < static_cast<int>(comps4.size()); ++i)
            sample4.push_back({x4, {comps4[i].vertices.front()}});
        auto threads = f_threads(*p4, 4, n4);
        std::vector<std::string> sigs;
        for (const FThread& t : threads) {
            if (!t.counts_in_census) continue;
            Orientation o = fpoint_orientation(*p4, t, sample4, n4);
            if (!check_orientation(o).consistent) fail = "fig4 orientation inconsistent";
            std::string sig;
            for (const OrientedSep& s : o) sig += show(s.side) + "|";
            sigs.push_back(sig);
        }
        std::sort(sigs.begin(), sigs.end());
        if (std::adjacent_find(sigs.begin(), sigs.end()) != sigs.end())
            fail = "distinct fig4 threads induced equal orientations";
        if (sigs.size() < 3) fail = "expected fig4 to carry three filter threads";
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? "evens/odds rejected; 20-sep orientations consistent+distinct"
                            : fail;
    return r;
}

SweepResult sweep_packing_contrast(unsigned) {
    SweepResult r{"packing-contrast", true, "", 0};
    std::string fail;
    // K_{2,5} level graph has no 2 edge-disjoint spanning trees
    auto p = make_presentation("k2inf");
    const Multigraph& k25 = p->truncate(5).graph;
    if (pack_trees(k25, 2).has_value()) fail = "K_{2,5} unexpectedly packed";
    if (fail.empty()) {
        PackResult res = pack_pipeline(*p, 2, 5, 10);
        if (res.status != PackResult::Status::Success) {
            fail = "pipeline did not succeed";
        } else {
            // limit assignment: x-edges one tree, y-edges the other
            std::set<int> xtrees, ytrees;
            for (const auto& [e, t] : res.limit_assignment)
                (e % 2 == 0 ? xtrees : ytrees).insert(t);  // x-u_i edges have even ids
            if (xtrees.size() != 1 || ytrees.size() != 1 || xtrees == ytrees)
                fail = "limit assignment is not the x/y split";
            if (res.completion.size() != 1 ||
                res.completion.front().kind != AuxEdge::Kind::CritEdge)
                fail = "expected exactly one shared critical completion edge";
        }
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? "K_{2,5} absent; pipeline splits x/y with one shared edge"
                            : fail;
    return r;
}

SweepResult sweep_vstar(unsigned) {
    SweepResult r{"vstar-suite", true, "", 0};
    std::string fail;
    auto p = make_presentation("k2inf");
    VStar vs = vstar(*p, 0, 1, 5);
    if (vs.order != VSet{0, 1}) fail = "k2inf V* is not <x,y>";
    if (fail.empty()) {
        auto gaps = classify_gaps(*p, vs, vs.level);
        if (gaps.size() != 1 || gaps.front().kind != GapEntry::Kind::Crit ||
            gaps.front().crit != VSet{0, 1})
            fail = "k2inf gap is not CritGap({x,y})";
    }
    if (fail.empty()) {
        auto pd = make_presentation("dominated_ray");
        try {
            vstar(*pd, 0, 1, 4);
            fail = "dominated_ray pair was not rejected";
        } catch (const Error& e) {
            if (e.kind() != "NotEquivalent") fail = "wrong rejection kind: " + e.kind();
        }
    }
    if (fail.empty()) {
        auto pf = make_presentation("binary_fan");
        VStar v4 = vstar(*pf, 2, 3, 4);
        VStar v8 = vstar(*pf, 2, 3, 8);
        if (v8.order.size() <= v4.order.size())
            fail = "binary_fan V* did not grow from depth 4 to 8 (" +
                   std::to_string(v4.order.size()) + " -> " +
                   std::to_string(v8.order.size()) + ")";
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? "k2inf <x<y>/CritGap, NotEquivalent, binary_fan growth"
                            : fail;
    return r;
}

SweepResult sweep_quotient(unsigned) {
    SweepResult r{"quotient-predicates", true, "", 0};
    std::string fail;
    {
        auto p = make_presentation("k2inf");
        QuotientReport q = quotient_points(*p, 8);
        bool merged = false;
        for (const auto& c : q.vertex_classes)
            if (c.vertices == VSet{0, 1}) merged = true;
        if (!merged || q.vertex_classes.size() != 9)  // {x,y} + 8 singleton u_i
            fail = "k2inf quotient classes wrong";
    }
    if (fail.empty()) {
        auto p = make_presentation("fig16");
        QuotientReport q = quotient_points(*p, 8);
        bool big = false;
        for (const auto& c : q.vertex_classes)
            if (c.vertices.size() == 9 && c.ends == std::vector<int>{0}) big = true;
        if (!big || !q.singleton_ends.empty())
            fail = "fig16 quotient did not absorb the end into the vertex class";
    }
    if (fail.empty()) {
        auto p = make_presentation("ray");
        QuotientReport q = quotient_points(*p, 8);
        for (const auto& c : q.vertex_classes)
            if (c.vertices.size() != 1) fail = "ray quotient has a nontrivial class";
        if (q.singleton_ends != std::vector<int>{0})
            fail = "ray end is not its own quotient point";
    }
    if (fail.empty()) {
        auto check = [&](const std::string& fam, std::optional<bool> elc,
                         std::optional<bool> opo) {
            auto p = make_presentation(fam);
            CompactnessReport c = compactness_predicates(*p, 8);
            if (c.ends_locally_compact != elc || c.one_point_omega != opo)
                fail = fam + " compactness flags wrong";
        };
        check("ray_star", true, true);
        check("tree_inf", false, false);
        check("fig5", true, false);
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? "quotients + compactness flags exact" : fail;
    return r;
}

}  // namespace

std::vector<std::string> sweep_names() {
    return {"treepack-nwt",    "crit-regression",    "fthread-census",
            "bonding-laws",    "poset-laws",         "tangle-consistency",
            "sprime-orientation", "packing-contrast", "vstar-suite",
            "quotient-predicates"};
}

SweepResult run_sweep(const std::string& name, unsigned seed) {
    auto t0 = Clock::now();
    SweepResult r;
    if (name == "treepack-nwt") r = sweep_treepack(seed);
    else if (name == "crit-regression") r = sweep_crit_regression(seed);
    else if (name == "fthread-census") r = sweep_census(seed);
    else if (name == "bonding-laws") r = sweep_bonding(seed);
    else if (name == "poset-laws") r = sweep_poset(seed);
    else if (name == "tangle-consistency") r = sweep_tangle_self(seed);
    else if (name == "sprime-orientation") r = sweep_sprime(seed);
    else if (name == "packing-contrast") r = sweep_packing_contrast(seed);
    else if (name == "vstar-suite") r = sweep_vstar(seed);
    else if (name == "quotient-predicates") r = sweep_quotient(seed);
    else throw Error("UnknownSweep", name);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

}  // namespace tk
