#include "tanglekit/flow.hpp"

#include <climits>
#include <set>
#include <deque>
#include <map>

namespace tk {
namespace {

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;  // index of reverse arc in adj[to]
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add_arc(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    // Edmonds-Karp; fine for the small graphs handled here.
    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
            std::deque<int> q{s};
            pred[s] = {s, 0};
            while (!q.empty() && pred[t].first < 0) {
                int u = q.front();
                q.pop_front();
                for (std::size_t i = 0; i < adj[u].size(); ++i) {
                    const Arc& a = adj[u][i];
                    if (a.cap > 0 && pred[a.to].first < 0) {
                        pred[a.to] = {u, static_cast<int>(i)};
                        q.push_back(a.to);
                    }
                }
            }
            if (pred[t].first < 0) break;
            int bottleneck = INT_MAX;
            for (int v = t; v != s;) {
                auto [u, i] = pred[v];
                bottleneck = std::min(bottleneck, adj[u][i].cap);
                v = u;
            }
            for (int v = t; v != s;) {
                auto [u, i] = pred[v];
                adj[u][i].cap -= bottleneck;
                adj[adj[u][i].to][adj[u][i].rev].cap += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
        return total;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(adj.size(), false);
        std::deque<int> q{s};
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const Arc& a : adj[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    q.push_back(a.to);
                }
        }
        return seen;
    }
};

std::map<VertexId, int> index_of(const Multigraph& g) {
    std::map<VertexId, int> idx;
    int i = 0;
    for (VertexId v : g.vertices()) idx[v] = i++;
    return idx;
}

constexpr int kInf = 1 << 28;

}  // namespace

int max_edge_disjoint_paths(const Multigraph& g, VertexId a, VertexId b,
                            std::vector<EdgeId>* min_cut) {
    if (a == b) throw Error("SameVertex", std::to_string(a));
    auto idx = index_of(g);
    FlowNet net(static_cast<int>(g.order()));
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        net.add_arc(idx[e.u], idx[e.v], 1);
        net.add_arc(idx[e.v], idx[e.u], 1);
    }
    int f = net.max_flow(idx[a], idx[b]);
    if (min_cut) {
        auto reach = net.residual_reachable(idx[a]);
        min_cut->clear();
        for (const Edge& e : g.edges()) {
            if (e.u == e.v) continue;
            if (reach[idx[e.u]] != reach[idx[e.v]]) min_cut->push_back(e.id);
        }
    }
    return f;
}

namespace {

int vertex_capacitated_flow(const Multigraph& g, VertexId a, VertexId b,
                            const VSet& uncuttable, VSet* separator) {
    if (a == b) throw Error("SameVertex", std::to_string(a));
    auto idx = index_of(g);
    int n = static_cast<int>(g.order());
    // node 2i = in, 2i+1 = out
    FlowNet net(2 * n);
    for (VertexId v : g.vertices()) {
        int i = idx[v];
        int cap = (v == a || v == b || contains(uncuttable, v)) ? kInf : 1;
        net.add_arc(2 * i, 2 * i + 1, cap);
    }
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        net.add_arc(2 * idx[e.u] + 1, 2 * idx[e.v], 1);
        net.add_arc(2 * idx[e.v] + 1, 2 * idx[e.u], 1);
    }
    int f = net.max_flow(2 * idx[a] + 1, 2 * idx[b]);
    if (separator) {
        separator->clear();
        auto reach = net.residual_reachable(2 * idx[a] + 1);
        for (VertexId v : g.vertices()) {
            int i = idx[v];
            if (v != a && v != b && !contains(uncuttable, v) && reach[2 * i] &&
                !reach[2 * i + 1])
                separator->push_back(v);
        }
        *separator = canon(std::move(*separator));
    }
    return f;
}

}  // namespace

int max_internally_disjoint_paths(const Multigraph& g, VertexId a, VertexId b,
                                  VSet* separator) {
    return vertex_capacitated_flow(g, a, b, {}, separator);
}

int max_internally_disjoint_paths_avoiding(const Multigraph& g, VertexId a,
                                           VertexId b, const VSet& uncuttable,
                                           VSet* separator) {
    return vertex_capacitated_flow(g, a, b, uncuttable, separator);
}

std::vector<std::vector<VertexId>> edge_disjoint_paths(const Multigraph& g,
                                                       VertexId a, VertexId b,
                                                       int max_paths) {
    if (a == b) throw Error("SameVertex", std::to_string(a));
    // Repeated BFS for a shortest a-b path on the remaining edges; remove the
    // path's edges and repeat. Deterministic: neighbours scanned in edge-id
    // order. (Greedy shortest-first extraction, not quite max-flow optimal,
    // but monotone in the edge set and reproducible.)
    std::map<VertexId, std::vector<const Edge*>> adj;
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        adj[e.u].push_back(&e);
        adj[e.v].push_back(&e);
    }
    std::set<EdgeId> used;
    std::vector<std::vector<VertexId>> out;
    while (max_paths < 0 || static_cast<int>(out.size()) < max_paths) {
        std::map<VertexId, std::pair<VertexId, EdgeId>> pred;
        std::deque<VertexId> q{a};
        pred[a] = {a, -1};
        while (!q.empty() && !pred.count(b)) {
            VertexId u = q.front();
            q.pop_front();
            auto it = adj.find(u);
            if (it == adj.end()) continue;
            for (const Edge* e : it->second) {
                if (used.count(e->id)) continue;
                VertexId w = e->u == u ? e->v : e->u;
                if (!pred.count(w)) {
                    pred[w] = {u, e->id};
                    q.push_back(w);
                }
            }
        }
        if (!pred.count(b)) break;
        std::vector<VertexId> path;
        for (VertexId v = b; v != a; v = pred[v].first) {
            path.push_back(v);
            used.insert(pred[v].second);
        }
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        out.push_back(std::move(path));
    }
    return out;
}

int max_vertex_fan(const Multigraph& g, VertexId a, const VSet& targets,
                   VSet* separator) {
    auto idx = index_of(g);
    int n = static_cast<int>(g.order());
    FlowNet net(2 * n + 1);
    int sink = 2 * n;
    for (VertexId v : g.vertices()) {
        int i = idx[v];
        net.add_arc(2 * i, 2 * i + 1, v == a ? kInf : 1);
        if (contains(targets, v) && v != a) net.add_arc(2 * i + 1, sink, 1);
    }
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        net.add_arc(2 * idx[e.u] + 1, 2 * idx[e.v], 1);
        net.add_arc(2 * idx[e.v] + 1, 2 * idx[e.u], 1);
    }
    int f = net.max_flow(2 * idx[a] + 1, sink);
    if (separator) {
        separator->clear();
        auto reach = net.residual_reachable(2 * idx[a] + 1);
        for (VertexId v : g.vertices()) {
            int i = idx[v];
            if (v != a && reach[2 * i] && !reach[2 * i + 1]) separator->push_back(v);
        }
        *separator = canon(std::move(*separator));
    }
    return f;
}

}  // namespace tk
