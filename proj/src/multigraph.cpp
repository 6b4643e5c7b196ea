#include "tanglekit/multigraph.hpp"

#include <map>
#include <set>

namespace tk {

Multigraph::Multigraph(VSet vertices, std::vector<Edge> edges,
                       std::map<VertexId, VSet> labels)
    : vertices_(canon(std::move(vertices))), edges_(std::move(edges)),
      labels_(std::move(labels)) {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::set<EdgeId> seen;
    for (const Edge& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw Error("UnknownVertex", "edge " + std::to_string(e.id) +
                                             " has an endpoint outside the vertex set");
        if (!seen.insert(e.id).second)
            throw Error("DuplicateEdgeId", "edge id " + std::to_string(e.id));
    }
}

const Edge* Multigraph::find_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
}

int Multigraph::degree(VertexId v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

VSet Multigraph::neighbours(VertexId v) const {
    VSet n;
    for (const Edge& e : edges_) {
        if (e.u == v && e.v != v) n.push_back(e.v);
        if (e.v == v && e.u != v) n.push_back(e.u);
    }
    return canon(std::move(n));
}

std::vector<EdgeId> Multigraph::incident(VertexId v) const {
    std::vector<EdgeId> r;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) r.push_back(e.id);
    return r;
}

bool Multigraph::connected() const {
    if (vertices_.empty()) return true;
    return components(*this, {}).size() == 1;
}

VertexPartition::VertexPartition(std::vector<VSet> blocks) {
    std::set<VertexId> seen;
    for (VSet& b : blocks) {
        b = canon(std::move(b));
        if (b.empty()) throw Error("EmptyBlock", "partition blocks must be nonempty");
        for (VertexId v : b)
            if (!seen.insert(v).second)
                throw Error("OverlappingBlocks", "vertex " + std::to_string(v));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const VSet& a, const VSet& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
}

VSet VertexPartition::ground() const {
    VSet g;
    for (const VSet& b : blocks_) g.insert(g.end(), b.begin(), b.end());
    return canon(std::move(g));
}

int VertexPartition::block_of(VertexId v) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (contains(blocks_[i], v)) return static_cast<int>(i);
    return -1;
}

void validate_cut(const Multigraph& g, const Cut& c) {
    VSet f = canon(VSet(c.edges.begin(), c.edges.end()));
    for (const Edge& e : g.edges()) {
        bool u1 = contains(c.side1, e.u), v1 = contains(c.side1, e.v);
        bool u2 = contains(c.side2, e.u), v2 = contains(c.side2, e.v);
        bool crossing = (u1 && v2) || (u2 && v1);
        bool listed = contains(f, e.id);
        if (crossing != listed)
            throw Error("InvalidCut", "edge " + std::to_string(e.id));
    }
}

std::vector<ComponentNbhd> components(const Multigraph& g, const VSet& x) {
    for (VertexId v : x)
        if (!g.has_vertex(v))
            throw Error("UnknownVertex", std::to_string(v));
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        if (contains(x, e.u) || contains(x, e.v)) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::set<VertexId> unseen;
    for (VertexId v : g.vertices())
        if (!contains(x, v)) unseen.insert(v);

    std::vector<ComponentNbhd> out;
    while (!unseen.empty()) {
        VertexId start = *unseen.begin();
        VSet comp;
        std::vector<VertexId> stack{start};
        unseen.erase(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (VertexId w : it->second) {
                if (unseen.erase(w)) stack.push_back(w);
            }
        }
        comp = canon(std::move(comp));
        VSet nb;
        for (const Edge& e : g.edges()) {
            if (contains(comp, e.u) && contains(x, e.v)) nb.push_back(e.v);
            if (contains(comp, e.v) && contains(x, e.u)) nb.push_back(e.u);
        }
        out.push_back({std::move(comp), canon(std::move(nb))});
    }
    std::sort(out.begin(), out.end(), [](const ComponentNbhd& a, const ComponentNbhd& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

Multigraph contract_partition(const Multigraph& g, const VertexPartition& p) {
    if (p.ground() != g.vertices())
        throw Error("PartitionMismatch", "partition does not cover the vertex set");
    VSet verts;
    std::map<VertexId, VSet> labels;
    std::map<VertexId, VertexId> rep;  // original -> block representative
    for (const VSet& b : p.blocks()) {
        VertexId r = b.front();
        verts.push_back(r);
        labels[r] = b;
        for (VertexId v : b) rep[v] = r;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        VertexId ru = rep[e.u], rv = rep[e.v];
        if (ru != rv) edges.push_back({e.id, ru, rv});
    }
    return Multigraph(std::move(verts), std::move(edges), std::move(labels));
}

Multigraph contract_by_edges(const Multigraph& g, const std::vector<EdgeId>& f) {
    VSet fs = canon(VSet(f.begin(), f.end()));
    for (EdgeId id : fs)
        if (!g.find_edge(id)) throw Error("UnknownEdge", std::to_string(id));
    // Components of g - f (vertex set unchanged, f-edges removed).
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!contains(fs, e.id)) kept.push_back(e);
    Multigraph h(g.vertices(), std::move(kept));
    auto comps = components(h, {});

    VSet verts;
    std::map<VertexId, VSet> labels;
    std::map<VertexId, VertexId> rep;
    for (const auto& c : comps) {
        VertexId r = c.vertices.front();
        verts.push_back(r);
        labels[r] = c.vertices;
        for (VertexId v : c.vertices) rep[v] = r;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        VertexId ru = rep[e.u], rv = rep[e.v];
        edges.push_back({e.id, ru, rv});  // loop when ru == rv
    }
    return Multigraph(std::move(verts), std::move(edges), std::move(labels));
}

std::size_t cross_edge_count(const Multigraph& g, const VertexPartition& p) {
    if (p.ground() != g.vertices())
        throw Error("PartitionMismatch", "partition does not cover the vertex set");
    std::map<VertexId, int> blk;
    for (std::size_t i = 0; i < p.blocks().size(); ++i)
        for (VertexId v : p.blocks()[i]) blk[v] = static_cast<int>(i);
    std::size_t n = 0;
    for (const Edge& e : g.edges())
        if (blk[e.u] != blk[e.v]) ++n;
    return n;
}

VertexPartition refine(const VertexPartition& p, const VertexPartition& q) {
    if (p.ground() != q.ground())
        throw Error("GroundSetMismatch", "partitions have different ground sets");
    std::vector<VSet> blocks;
    for (const VSet& a : p.blocks())
        for (const VSet& b : q.blocks()) {
            VSet c = set_intersect(a, b);
            if (!c.empty()) blocks.push_back(std::move(c));
        }
    return VertexPartition(std::move(blocks));
}

std::vector<VertexPartition> all_partitions(const VSet& ground) {
    std::vector<VertexPartition> out;
    std::size_t n = ground.size();
    if (n == 0) {
        out.emplace_back(std::vector<VSet>{});
        return out;
    }
    std::vector<int> a(n, 0);
    while (true) {
        int maxa = 0;
        for (std::size_t i = 0; i < n; ++i) maxa = std::max(maxa, a[i] + 1);
        std::vector<VSet> blocks(maxa);
        for (std::size_t i = 0; i < n; ++i) blocks[a[i]].push_back(ground[i]);
        out.emplace_back(std::move(blocks));
        // next restricted growth string
        int i = static_cast<int>(n) - 1;
        while (i > 0) {
            int prefmax = 0;
            for (int j = 0; j < i; ++j) prefmax = std::max(prefmax, a[j]);
            if (a[i] <= prefmax) break;
            --i;
        }
        if (i == 0) break;
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
    }
    return out;
}

}  // namespace tk
