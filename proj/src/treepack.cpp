#include "tanglekit/treepack.hpp"

#include <deque>
#include <map>

#include "tanglekit/flow.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tk {
namespace {

// Union-find over a forest's current edge set.
struct Dsu {
    std::map<VertexId, VertexId> parent;
    explicit Dsu(const VSet& verts) {
        for (VertexId v : verts) parent[v] = v;
    }
    VertexId find(VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// The cycle closed by edge e in the forest `forest` (edge ids), or empty if
// e joins two components.
std::vector<EdgeId> forest_cycle(const Multigraph& g,
                                 const std::vector<EdgeId>& forest, Edge e) {
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
    for (EdgeId id : forest) {
        const Edge* f = g.find_edge(id);
        adj[f->u].push_back({f->v, id});
        adj[f->v].push_back({f->u, id});
    }
    // path from e.u to e.v inside the forest
    std::map<VertexId, std::pair<VertexId, EdgeId>> pred;
    std::deque<VertexId> q{e.u};
    pred[e.u] = {e.u, -1};
    while (!q.empty() && !pred.count(e.v)) {
        VertexId v = q.front();
        q.pop_front();
        for (auto [w, id] : adj[v])
            if (!pred.count(w)) {
                pred[w] = {v, id};
                q.push_back(w);
            }
    }
    std::vector<EdgeId> cycle;
    if (!pred.count(e.v)) return cycle;
    for (VertexId v = e.v; v != e.u; v = pred[v].first) cycle.push_back(pred[v].second);
    std::sort(cycle.begin(), cycle.end());
    return cycle;
}

}  // namespace

std::optional<std::vector<std::vector<EdgeId>>> pack_trees(const Multigraph& g,
                                                           int k) {
    if (k < 1) throw Error("BadArgument", "k must be >= 1");
    if (!g.connected()) throw Error("Disconnected", "graph must be connected");
    std::size_t n = g.order();
    if (n <= 1) return std::vector<std::vector<EdgeId>>(k);  // k empty trees

    // Matroid partition (Edmonds): color(e) in {0 = unused, 1..k}. For each
    // uncolored edge run a BFS over exchange arcs; a shortest augmenting
    // sequence is applied back to front.
    std::map<EdgeId, int> color;
    std::vector<std::vector<EdgeId>> forests(k);
    for (const Edge& e : g.edges()) color[e.id] = 0;

    auto independent = [&](int f, EdgeId id) {
        // Would forests[f] + id stay a forest? (id assumed not in forests[f])
        const Edge* e = g.find_edge(id);
        if (e->u == e->v) return false;
        Dsu dsu(g.vertices());
        for (EdgeId fe : forests[f])
            if (fe != id) dsu.unite(g.find_edge(fe)->u, g.find_edge(fe)->v);
        return dsu.find(e->u) != dsu.find(e->v);
    };

    for (const Edge& e0 : g.edges()) {
        if (e0.u == e0.v) continue;  // loops never enter a forest
        // BFS from e0 over edges; label[f] = (pred edge, forest whose cycle
        // produced f). Accepting state: some forest f-index where the edge
        // is independent.
        std::map<EdgeId, std::pair<EdgeId, int>> label;
        std::deque<EdgeId> q{e0.id};
        label[e0.id] = {-1, -1};
        std::optional<std::pair<EdgeId, int>> accept;  // (edge, forest)
        while (!q.empty() && !accept) {
            EdgeId cur = q.front();
            q.pop_front();
            for (int f = 0; f < k && !accept; ++f) {
                if (color[cur] == f + 1) continue;
                if (independent(f, cur)) {
                    accept = {{cur, f}};
                    break;
                }
                auto cyc = forest_cycle(g, forests[f], *g.find_edge(cur));
                for (EdgeId ce : cyc)
                    if (!label.count(ce)) {
                        label[ce] = {cur, f};
                        q.push_back(ce);
                    }
            }
        }
        if (!accept) continue;  // e0 stays unused
        // Apply augmenting sequence back to front.
        auto [edge, forest] = *accept;
        while (edge != -1) {
            int old = color[edge];
            color[edge] = forest + 1;
            if (old > 0) {
                auto& fv = forests[old - 1];
                fv.erase(std::find(fv.begin(), fv.end(), edge));
            }
            forests[forest].push_back(edge);
            auto [pred, predForest] = label[edge];
            edge = pred;
            forest = predForest;
        }
    }

    for (auto& f : forests) {
        if (f.size() != n - 1) return std::nullopt;
        std::sort(f.begin(), f.end());
    }
    return forests;
}

bool cut_condition_serial(const Multigraph& g, int k) {
    return !cut_condition_witness(g, k).has_value();
}

namespace {
std::size_t required_cross(int k, std::size_t classes) {
    return classes <= 1 ? 0 : static_cast<std::size_t>(k) * (classes - 1);
}
}  // namespace

std::optional<VertexPartition> cut_condition_witness(const Multigraph& g, int k) {
    if (g.order() > 10)
        throw Error("TooLarge", "cut_condition is limited to 10 vertices");
    for (const auto& p : all_partitions(g.vertices()))
        if (cross_edge_count(g, p) < required_cross(k, p.size())) return p;
    return std::nullopt;
}

bool cut_condition(const Multigraph& g, int k) {
    if (g.order() > 10)
        throw Error("TooLarge", "cut_condition is limited to 10 vertices");
    auto parts = all_partitions(g.vertices());
    bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(&& : ok)
#endif
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!ok) continue;
        if (cross_edge_count(g, parts[i]) < required_cross(k, parts[i].size()))
            ok = false;
    }
    return ok;
}

std::pair<int, int> local_connectivity(const Multigraph& g, VertexId a,
                                       VertexId b) {
    if (a == b) throw Error("SameVertex", std::to_string(a));
    if (!g.has_vertex(a) || !g.has_vertex(b))
        throw Error("UnknownVertex", "endpoints must be vertices of g");
    int paths = max_internally_disjoint_paths(g, a, b);
    int cut = max_edge_disjoint_paths(g, a, b);
    return {paths, cut};
}

}  // namespace tk
