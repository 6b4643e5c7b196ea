#include "tanglekit/presentation.hpp"

#include <cmath>
#include <sstream>

#include "tanglekit/flow.hpp"

namespace tk {
namespace {

long cantor(long a, long b) { return (a + b) * (a + b + 1) / 2 + b; }
long cantor3(long a, long b, long c) { return cantor(cantor(a, b), c); }
long zig(long p) { return p >= 0 ? 2 * p : -2 * p - 1; }

}  // namespace

const LeveledGraph& Presentation::truncate(int n) const {
    if (n < 0) throw Error("BadArgument", "level must be >= 0");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, build(n)).first;
    return it->second;
}

std::vector<std::vector<VertexId>> Presentation::path_family(VertexId a, VertexId b,
                                                             int count,
                                                             int level) const {
    const LeveledGraph& lg = truncate(level);
    if (!lg.graph.has_vertex(a) || !lg.graph.has_vertex(b))
        throw Error("UnknownVertex", "path family endpoints must be visible");
    if (certified()) {
        bool together = false;
        for (const SimClass& c : sim_classes(level))
            if (contains(c.vertices, a) && contains(c.vertices, b)) together = true;
        if (!together)
            throw Error("NotEquivalent", "pair is certified finitely separable");
    }
    return edge_disjoint_paths(lg.graph, a, b, count);
}

std::vector<VSet> Presentation::fchain(int depth, int level) const {
    std::vector<VSet> chain;
    for (int i = 1; i <= depth; ++i) {
        const LeveledGraph& lg = truncate(std::min(i, level));
        chain.push_back(set_minus(lg.graph.vertices(), lg.frontier));
    }
    return chain;
}

std::map<VertexId, std::string> Presentation::names(int level) const {
    std::map<VertexId, std::string> m;
    for (VertexId v : truncate(level).graph.vertices()) m[v] = std::to_string(v);
    return m;
}

VertexId Presentation::vertex_by_name(const std::string& name, int level) const {
    for (const auto& [id, nm] : names(level))
        if (nm == name) return id;
    // fall back to a numeric id
    try {
        VertexId v = static_cast<VertexId>(std::stol(name));
        if (truncate(level).graph.has_vertex(v)) return v;
    } catch (const std::exception&) {
    }
    throw Error("UnknownVertex", name);
}

namespace {

// ---------------------------------------------------------------- ray

class RayFamily : public Presentation {
public:
    std::string family() const override { return "ray"; }
    CertFlags flags() const override { return {true, true, false, true, true}; }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {}, false};
        for (int i = 0; i <= level; ++i) e.ray.push_back(i);
        return {e};
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int i = 0; i <= level; ++i) m[i] = "v" + std::to_string(i);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        for (int i = 0; i <= n; ++i) verts.push_back(i);
        for (int i = 0; i < n; ++i) edges.push_back({i, i, i + 1});
        return {n, Multigraph(verts, edges), {n}};
    }
};

// ---------------------------------------------------------------- double_ray

class DoubleRayFamily : public Presentation {
public:
    std::string family() const override { return "double_ray"; }
    CertFlags flags() const override { return {true, true, false, true, true}; }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd plus{0, "omega+", {}, {}, false};
        CertEnd minus{1, "omega-", {}, {}, false};
        for (int p = 0; p <= level; ++p) plus.ray.push_back(static_cast<VertexId>(zig(p)));
        for (int p = 0; p >= -level; --p) minus.ray.push_back(static_cast<VertexId>(zig(p)));
        return {plus, minus};
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int p = -level; p <= level; ++p)
            m[static_cast<VertexId>(zig(p))] = "v" + std::to_string(p);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        for (int p = -n; p <= n; ++p) verts.push_back(static_cast<VertexId>(zig(p)));
        for (int p = -n; p < n; ++p)
            edges.push_back({static_cast<EdgeId>(zig(p)), static_cast<VertexId>(zig(p)),
                             static_cast<VertexId>(zig(p + 1))});
        return {n, Multigraph(verts, edges),
                {static_cast<VertexId>(zig(-n)), static_cast<VertexId>(zig(n))}};
    }
};

// ---------------------------------------------------------------- grid

class GridFamily : public Presentation {
public:
    std::string family() const override { return "grid"; }
    CertFlags flags() const override { return {true, true, false, true, true}; }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {}, false};
        for (int j = 0; j <= level; ++j) e.ray.push_back(static_cast<VertexId>(cantor(0, j)));
        return {e};
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int i = 0; i <= level; ++i)
            for (int j = 0; j <= level; ++j)
                m[static_cast<VertexId>(cantor(i, j))] =
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                VertexId v = static_cast<VertexId>(cantor(i, j));
                verts.push_back(v);
                if (i == n || j == n) frontier.push_back(v);
                if (j < n)
                    edges.push_back({static_cast<EdgeId>(2 * cantor(i, j)), v,
                                     static_cast<VertexId>(cantor(i, j + 1))});
                if (i < n)
                    edges.push_back({static_cast<EdgeId>(2 * cantor(i, j) + 1), v,
                                     static_cast<VertexId>(cantor(i + 1, j))});
            }
        return {n, Multigraph(verts, edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- k2inf / kminf

class KmInfFamily : public Presentation {
public:
    explicit KmInfFamily(int m) : m_(m) {
        if (m < 2) throw Error("BadArgument", "kminf needs m >= 2");
    }
    std::string family() const override { return m_ == 2 ? "k2inf" : "kminf"; }
    Json params() const override {
        return m_ == 2 ? Json::object() : Json{{"m", m_}};
    }
    CertFlags flags() const override { return {false, true, true, true, true}; }
    std::vector<VSet> crit(int) const override {
        VSet hubs;
        for (int j = 0; j < m_; ++j) hubs.push_back(j);
        return {hubs};
    }
    std::vector<SimClass> sim_classes(int) const override {
        VSet hubs;
        for (int j = 0; j < m_; ++j) hubs.push_back(j);
        return {{hubs, {}, false}};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x;
            for (int j = 0; j < m_; ++j) x.push_back(j);
            for (int j = 0; j < std::min(i - 1, level); ++j) x.push_back(m_ + j);
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::vector<std::vector<VertexId>> path_family(VertexId a, VertexId b, int count,
                                                   int level) const override {
        if (a >= 0 && a < m_ && b >= 0 && b < m_ && a != b) {
            std::vector<std::vector<VertexId>> out;
            for (int i = 0; i < std::min(count, level); ++i)
                out.push_back({a, m_ + i, b});
            return out;
        }
        return Presentation::path_family(a, b, count, level);
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        if (m_ == 2) {
            m[0] = "x";
            m[1] = "y";
        } else {
            for (int j = 0; j < m_; ++j) m[j] = "h" + std::to_string(j);
        }
        for (int i = 0; i < level; ++i) m[m_ + i] = "u" + std::to_string(i);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int j = 0; j < m_; ++j) {
            verts.push_back(j);
            frontier.push_back(j);
        }
        for (int i = 0; i < n; ++i) {
            verts.push_back(m_ + i);
            for (int j = 0; j < m_; ++j)
                edges.push_back({i * m_ + j, j, m_ + i});
        }
        return {n, Multigraph(verts, edges), frontier};
    }

private:
    int m_;
};

// ---------------------------------------------------------------- dominated_ray

class DominatedRayFamily : public Presentation {
public:
    std::string family() const override { return "dominated_ray"; }
    CertFlags flags() const override { return {false, true, false, true, true}; }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {0}, false};
        for (int i = 0; i <= level; ++i) e.ray.push_back(1 + i);
        return {e};
    }
    std::vector<SimClass> sim_classes(int) const override {
        return {{{0}, {0}, false}};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x{0};
            for (int j = 0; j < std::min(i, level); ++j) x.push_back(1 + j);
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        m[0] = "h";
        for (int i = 0; i <= level; ++i) m[1 + i] = "v" + std::to_string(i);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts{0};
        std::vector<Edge> edges;
        for (int i = 0; i <= n; ++i) verts.push_back(1 + i);
        for (int i = 0; i < n; ++i) edges.push_back({2 * i, 1 + i, 2 + i});
        for (int i = 0; i <= n; ++i) edges.push_back({2 * i + 1, 0, 1 + i});
        return {n, Multigraph(verts, edges), {0, static_cast<VertexId>(1 + n)}};
    }
};

// ---------------------------------------------------------------- ray_star

class RayStarFamily : public Presentation {
public:
    std::string family() const override { return "ray_star"; }
    CertFlags flags() const override { return {false, true, true, true, true}; }
    static VertexId vid(int r, int j) { return static_cast<VertexId>(cantor(r, j)); }
    std::vector<CertEnd> ends(int depth, int level) const override {
        std::vector<CertEnd> out;
        for (int r = 1; r <= std::min(depth, level); ++r) {
            CertEnd e{r, "omega" + std::to_string(r), {}, {}, false};
            for (int j = 1; j <= level; ++j) e.ray.push_back(vid(r, j));
            out.push_back(std::move(e));
        }
        return out;
    }
    std::vector<VSet> crit(int) const override { return {{0}}; }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x{0};
            int m = std::min(i, level);
            for (int r = 1; r <= m; ++r)
                for (int j = 1; j <= m; ++j) x.push_back(vid(r, j));
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        m[0] = "c";
        for (int r = 1; r <= level; ++r)
            for (int j = 1; j <= level; ++j)
                m[vid(r, j)] = "r" + std::to_string(r) + "_" + std::to_string(j);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts{0};
        std::vector<Edge> edges;
        VSet frontier{0};
        for (int r = 1; r <= n; ++r) {
            for (int j = 1; j <= n; ++j) {
                verts.push_back(vid(r, j));
                if (j == 1)
                    edges.push_back({static_cast<EdgeId>(2 * cantor(r, 1)), 0, vid(r, 1)});
                if (j < n)
                    edges.push_back({static_cast<EdgeId>(2 * cantor(r, j) + 1), vid(r, j),
                                     vid(r, j + 1)});
            }
            frontier.push_back(vid(r, n));
        }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- fig4

class Fig4Family : public Presentation {
public:
    std::string family() const override { return "fig4"; }
    CertFlags flags() const override { return {false, true, true, true, true}; }
    std::vector<VSet> crit(int) const override { return {{0}, {1}, {0, 1}}; }
    std::vector<SimClass> sim_classes(int) const override {
        return {{{0, 1}, {}, false}};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x{0, 1};
            for (int j = 0; j < std::min(i - 1, level); ++j) {
                x.push_back(2 + 3 * j);
                x.push_back(3 + 3 * j);
                x.push_back(4 + 3 * j);
            }
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::vector<std::vector<VertexId>> path_family(VertexId a, VertexId b, int count,
                                                   int level) const override {
        if ((a == 0 && b == 1) || (a == 1 && b == 0)) {
            std::vector<std::vector<VertexId>> out;
            for (int i = 0; i < std::min(count, level); ++i)
                out.push_back({a, 4 + 3 * i, b});
            return out;
        }
        return Presentation::path_family(a, b, count, level);
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        m[0] = "u";
        m[1] = "t";
        for (int i = 0; i < level; ++i) {
            m[2 + 3 * i] = "a" + std::to_string(i);
            m[3 + 3 * i] = "b" + std::to_string(i);
            m[4 + 3 * i] = "c" + std::to_string(i);
        }
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts{0, 1};
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            VertexId a = 2 + 3 * i, b = 3 + 3 * i, c = 4 + 3 * i;
            verts.push_back(a);
            verts.push_back(b);
            verts.push_back(c);
            edges.push_back({4 * i, 0, a});
            edges.push_back({4 * i + 1, 1, b});
            edges.push_back({4 * i + 2, 0, c});
            edges.push_back({4 * i + 3, 1, c});
        }
        return {n, Multigraph(verts, edges), {0, 1}};
    }
};

// ---------------------------------------------------------------- fig5

class Fig5Family : public Presentation {
public:
    std::string family() const override { return "fig5"; }
    CertFlags flags() const override { return {false, true, false, true, true}; }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {}, false};
        for (int i = 0; i <= level; ++i) e.ray.push_back(2 * i);
        return {e};
    }
    std::vector<VSet> crit(int level) const override {
        std::vector<VSet> out;
        for (int i = 0; i <= level; ++i) out.push_back({2 * i});
        return out;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int i = 0; i <= level; ++i) {
            m[2 * i] = "v" + std::to_string(i);
            for (int j = 0; j < level; ++j)
                m[static_cast<VertexId>(2 * cantor(i, j) + 1)] =
                    "l" + std::to_string(i) + "_" + std::to_string(j);
        }
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int i = 0; i <= n; ++i) {
            verts.push_back(2 * i);
            frontier.push_back(2 * i);
            if (i < n) edges.push_back({static_cast<EdgeId>(4 * i + 4), 2 * i, 2 * i + 2});
            for (int j = 0; j < n; ++j) {
                VertexId leaf = static_cast<VertexId>(2 * cantor(i, j) + 1);
                verts.push_back(leaf);
                edges.push_back({static_cast<EdgeId>(4 * cantor(i, j) + 2), 2 * i, leaf});
            }
        }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- crit_chain

class CritChainFamily : public Presentation {
public:
    std::string family() const override { return "crit_chain"; }
    CertFlags flags() const override { return {false, true, false, true, true}; }
    static VertexId aid(int i) { return 2 * i; }
    static VertexId bid(int k, int j) { return static_cast<VertexId>(2 * cantor(k, j) + 1); }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {}, true};
        for (int i = 0; i <= level; ++i) e.dominators.push_back(aid(i));
        e.dominators = canon(e.dominators);
        for (int i = 0; i < level; ++i) {
            e.ray.push_back(aid(i));
            e.ray.push_back(bid(i + 1, 0));
        }
        e.ray.push_back(aid(level));
        return {e};
    }
    std::vector<VSet> crit(int level) const override {
        std::vector<VSet> out;
        for (int k = 0; k <= level; ++k) {
            VSet x;
            for (int i = 0; i <= k; ++i) x.push_back(aid(i));
            out.push_back(std::move(x));
        }
        return out;
    }
    std::vector<SimClass> sim_classes(int level) const override {
        SimClass c;
        for (int i = 0; i <= level; ++i) c.vertices.push_back(aid(i));
        c.ends = {0};
        c.grows = true;
        return {c};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x;
            for (int j = 0; j < std::min(i, level + 1); ++j) x.push_back(aid(j));
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int i = 0; i <= level; ++i) m[aid(i)] = "a" + std::to_string(i);
        for (int k = 0; k <= level; ++k)
            for (int j = 0; j < level; ++j)
                m[bid(k, j)] = "b" + std::to_string(k) + "_" + std::to_string(j);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int i = 0; i <= n; ++i) {
            verts.push_back(aid(i));
            frontier.push_back(aid(i));
        }
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j < n; ++j) {
                VertexId b = bid(k, j);
                verts.push_back(b);
                for (int s = 0; s <= k; ++s)
                    edges.push_back({static_cast<EdgeId>(cantor(cantor(k, j), s)),
                                     aid(s), b});
            }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- tree_inf

class TreeInfFamily : public Presentation {
public:
    std::string family() const override { return "tree_inf"; }
    CertFlags flags() const override { return {false, true, false, false, true}; }

    static int width(int n) { return static_cast<int>(std::sqrt(static_cast<double>(n))); }

    std::vector<CertEnd> ends(int depth, int level) const override {
        int w = width(level);
        std::vector<CertEnd> out;
        for (int r = 0; r < std::min(depth, w); ++r) {
            CertEnd e{r, "branch" + std::to_string(r), {0}, {}, false};
            long id = 0;
            e.ray = {0};
            id = cantor(id, r) + 1;
            e.ray.push_back(static_cast<VertexId>(id));
            for (int d = 2; d <= w; ++d) {
                id = cantor(id, 0) + 1;
                e.ray.push_back(static_cast<VertexId>(id));
            }
            out.push_back(std::move(e));
        }
        return out;
    }
    std::vector<VSet> crit(int level) const override {
        std::vector<VSet> out;
        for (VertexId v : truncate(level).graph.vertices()) out.push_back({v});
        return out;
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        const VSet& verts = truncate(level).graph.vertices();
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x(verts.begin(),
                   verts.begin() + std::min<std::size_t>(i, verts.size()));
            chain.push_back(std::move(x));
        }
        return chain;
    }

protected:
    LeveledGraph build(int n) const override {
        int w = width(n);
        VSet verts{0};
        std::vector<Edge> edges;
        // breadth-first over sequences of length <= w with entries < w
        std::vector<long> frontier_ids{0};
        std::vector<long> all{0};
        for (int depth = 1; depth <= w; ++depth) {
            std::vector<long> next;
            for (long v : frontier_ids)
                for (int c = 0; c < w; ++c) {
                    long child = cantor(v, c) + 1;
                    next.push_back(child);
                    all.push_back(child);
                    edges.push_back({static_cast<EdgeId>(child), static_cast<VertexId>(v),
                                     static_cast<VertexId>(child)});
                }
            frontier_ids = std::move(next);
        }
        for (long v : all) verts.push_back(static_cast<VertexId>(v));
        VSet front;
        for (long v : all) front.push_back(static_cast<VertexId>(v));
        return {n, Multigraph(canon(verts), edges), canon(front)};
    }
};

// ---------------------------------------------------------------- binary_fan / binary_flower

// Vertices are binary strings with heap ids (root = 1, child s.b = 2*id + b).
class BinaryBase : public Presentation {
public:
    static VertexId heap_of(const std::string& s) {
        VertexId h = 1;
        for (char c : s) h = 2 * h + (c - '0');
        return h;
    }
    static std::string string_of(VertexId h) {
        std::string s;
        while (h > 1) {
            s.push_back('0' + (h & 1));
            h >>= 1;
        }
        std::reverse(s.begin(), s.end());
        return s;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (VertexId v : truncate(level).graph.vertices()) {
            std::string s = string_of(v);
            m[v] = s.empty() ? "@" : s;
        }
        return m;
    }
    std::vector<CertEnd> ends(int depth, int level) const override {
        // spine ends u.0.1^w (id 4h) and u.1.0^w (id 4h+1), plus the all-0
        // and all-1 ends (ids 1 and 3)
        std::vector<CertEnd> out;
        int cap = std::max(0, std::min(depth, level) - 2);
        for (VertexId h = 1; h < (1 << (cap + 1)); ++h) {
            std::string u = string_of(h);
            if (static_cast<int>(u.size()) > cap) continue;
            for (int side = 0; side < 2; ++side) {
                CertEnd e;
                e.id = 4 * h + side;
                e.name = (u.empty() ? std::string("@") : u) + (side == 0 ? ".01w" : ".10w");
                e.dominators = dominators_of(h);
                std::string s = u;
                e.ray.push_back(heap_of(s));
                s.push_back(side == 0 ? '0' : '1');
                e.ray.push_back(heap_of(s));
                while (static_cast<int>(s.size()) < level) {
                    s.push_back(side == 0 ? '1' : '0');
                    e.ray.push_back(heap_of(s));
                }
                out.push_back(std::move(e));
            }
        }
        for (int side = 0; side < 2; ++side) {
            CertEnd e;
            e.id = side == 0 ? 1 : 3;
            e.name = side == 0 ? "0w" : "1w";
            e.dominators = dominators_of(-1);
            std::string s;
            e.ray.push_back(1);
            while (static_cast<int>(s.size()) < level) {
                s.push_back(side == 0 ? '0' : '1');
                e.ray.push_back(heap_of(s));
            }
            out.push_back(std::move(e));
        }
        std::sort(out.begin(), out.end(),
                  [](const CertEnd& a, const CertEnd& b) { return a.id < b.id; });
        return out;
    }

protected:
    // dominators of the spine ends of u (heap id h); h = -1 for 0^w / 1^w
    virtual VSet dominators_of(VertexId h) const = 0;
};

class BinaryFanFamily : public BinaryBase {
public:
    std::string family() const override { return "binary_fan"; }
    CertFlags flags() const override { return {false, true, false, true, false}; }
    std::vector<SimClass> sim_classes(int level) const override {
        SimClass c;
        c.vertices = truncate(level).graph.vertices();
        for (const CertEnd& e : ends(level, level)) c.ends.push_back(e.id);
        c.grows = true;
        return {c};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x;
            int len = std::min(i, level);
            for (VertexId h = 1; h < (1 << len); ++h) x.push_back(h);
            chain.push_back(canon(x));
        }
        return chain;
    }

protected:
    VSet dominators_of(VertexId h) const override {
        return h < 0 ? VSet{} : VSet{h};
    }
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (VertexId h = 1; h < (1 << (n + 1)); ++h) {
            verts.push_back(h);
            frontier.push_back(h);
            if (h > 1) edges.push_back({2 * h, h / 2, h});  // tree edge
            // the unique fan edge arriving with h: drop the trailing run and
            // its preceding opposite bit to find the fan ancestor
            std::string s = string_of(h);
            if (!s.empty()) {
                char last = s.back();
                std::size_t i = s.size();
                while (i > 0 && s[i - 1] == last) --i;
                if (i > 0) {
                    // s = u . opposite(last) . last^j with j >= 1
                    std::string u = s.substr(0, i - 1);
                    edges.push_back({2 * h + 1, heap_of(u), h});
                }
            }
        }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

class BinaryFlowerFamily : public BinaryBase {
public:
    std::string family() const override { return "binary_flower"; }
    CertFlags flags() const override { return {false, true, false, true, true}; }
    std::vector<SimClass> sim_classes(int level) const override {
        SimClass c;
        c.vertices = {1};
        for (const CertEnd& e : ends(level, level)) c.ends.push_back(e.id);
        c.grows = true;
        return {c};
    }

protected:
    VSet dominators_of(VertexId) const override { return {1}; }
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier{1};
        for (VertexId h = 1; h < (1 << (n + 1)); ++h) {
            verts.push_back(h);
            if (h >= (1 << n)) frontier.push_back(h);  // deepest layer
            if (h > 1) edges.push_back({2 * h, h / 2, h});
            if (h >= 4) edges.push_back({2 * h + 1, 1, h});  // star edge to the root
        }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- fig16

class Fig16Family : public Presentation {
public:
    std::string family() const override { return "fig16"; }
    CertFlags flags() const override { return {false, true, false, true, true}; }
    static VertexId uid(int i) { return 3 * i; }
    static VertexId mid(int i, int j) { return static_cast<VertexId>(3 * cantor(i, j) + 1); }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {}, false};
        for (int i = 0; i < level; ++i) {
            e.ray.push_back(uid(i));
            e.ray.push_back(mid(i, 0));
        }
        e.ray.push_back(uid(level));
        return {e};
    }
    std::vector<VSet> crit(int level) const override {
        std::vector<VSet> out;
        for (int i = 0; i < level; ++i) out.push_back({uid(i), uid(i + 1)});
        return out;
    }
    std::vector<SimClass> sim_classes(int level) const override {
        SimClass c;
        for (int i = 0; i <= level; ++i) c.vertices.push_back(uid(i));
        c.ends = {0};
        c.grows = true;
        return {c};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x;
            for (int j = 0; j <= std::min(i, level); ++j) x.push_back(uid(j));
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::vector<std::vector<VertexId>> path_family(VertexId a, VertexId b, int count,
                                                   int level) const override {
        if (a % 3 == 0 && b % 3 == 0 && a != b) {
            int lo = std::min(a, b) / 3, hi = std::max(a, b) / 3;
            std::vector<std::vector<VertexId>> out;
            for (int s = 0; s < std::min(count, level); ++s) {
                std::vector<VertexId> p;
                for (int i = lo; i < hi; ++i) {
                    p.push_back(uid(i));
                    p.push_back(mid(i, s));
                }
                p.push_back(uid(hi));
                if (a > b) std::reverse(p.begin(), p.end());
                out.push_back(std::move(p));
            }
            return out;
        }
        return Presentation::path_family(a, b, count, level);
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int i = 0; i <= level; ++i) m[uid(i)] = "u" + std::to_string(i);
        for (int i = 0; i < level; ++i)
            for (int j = 0; j < level; ++j)
                m[mid(i, j)] = "m" + std::to_string(i) + "_" + std::to_string(j);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int i = 0; i <= n; ++i) {
            verts.push_back(uid(i));
            frontier.push_back(uid(i));
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                VertexId m = mid(i, j);
                verts.push_back(m);
                edges.push_back({static_cast<EdgeId>(2 * (3 * cantor(i, j) + 1)), uid(i), m});
                edges.push_back({static_cast<EdgeId>(2 * (3 * cantor(i, j) + 1) + 1), m,
                                 uid(i + 1)});
            }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- fig17

class Fig17Family : public Presentation {
public:
    std::string family() const override { return "fig17"; }
    CertFlags flags() const override { return {false, true, false, true, false}; }
    static VertexId aid(int n, int p) {
        return static_cast<VertexId>(4 * cantor(n, zig(p)));
    }
    static VertexId mid(int n, int p, int j) {
        return static_cast<VertexId>(4 * cantor3(n, zig(p), j) + 1);
    }
    std::vector<CertEnd> ends(int depth, int level) const override {
        std::vector<CertEnd> out;
        // id 0: the limit end along the rung zigzag
        CertEnd lim{0, "omega_lim", {}, {}, false};
        lim.ray.push_back(aid(1, 1));
        for (int n = 2; n <= level; ++n) {
            lim.ray.push_back(aid(n, -1));
            lim.ray.push_back(mid(n, -1, 0));
            lim.ray.push_back(aid(n, 0));
            lim.ray.push_back(mid(n, 0, 0));
            lim.ray.push_back(aid(n, 1));
        }
        out.push_back(std::move(lim));
        // id 1: the left end of chain 1
        CertEnd left{1, "omega0", {}, {}, false};
        left.ray.push_back(aid(1, 0));
        for (int p = -1; p >= -level; --p) {
            left.ray.push_back(mid(1, p, 0));
            left.ray.push_back(aid(1, p));
        }
        out.push_back(std::move(left));
        // id n+1: the shared right-of-chain-n / left-of-chain-(n+1) end
        for (int n = 1; n <= std::min(depth, level - 1); ++n) {
            CertEnd e{n + 1, "omega" + std::to_string(n), {}, {}, false};
            e.ray.push_back(aid(n, 0));
            for (int p = 0; p < level; ++p) {
                e.ray.push_back(mid(n, p, 0));
                e.ray.push_back(aid(n, p + 1));
            }
            out.push_back(std::move(e));
        }
        return out;
    }
    std::vector<VSet> crit(int level) const override {
        std::vector<VSet> out;
        for (int n = 1; n <= level; ++n)
            for (int p = -level; p < level; ++p)
                out.push_back(canon({aid(n, p), aid(n, p + 1)}));
        return out;
    }
    std::vector<SimClass> sim_classes(int level) const override {
        SimClass c;
        for (int n = 1; n <= level; ++n)
            for (int p = -level; p <= level; ++p) c.vertices.push_back(aid(n, p));
        c.vertices = canon(c.vertices);
        for (const CertEnd& e : ends(level, level)) c.ends.push_back(e.id);
        c.grows = true;
        return {c};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x;
            int m = std::min(i, level);
            for (int n = 1; n <= m; ++n)
                for (int p = -m; p <= m; ++p) x.push_back(aid(n, p));
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int n = 1; n <= level; ++n)
            for (int p = -level; p <= level; ++p) {
                m[aid(n, p)] = "a" + std::to_string(n) + "_" + std::to_string(p);
                for (int j = 0; j < level; ++j)
                    if (p < level)
                        m[mid(n, p, j)] = "m" + std::to_string(n) + "_" +
                                          std::to_string(p) + "_" + std::to_string(j);
            }
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int c = 1; c <= n; ++c)
            for (int p = -n; p <= n; ++p) {
                verts.push_back(aid(c, p));
                frontier.push_back(aid(c, p));
                if (p < n)
                    for (int j = 0; j < n; ++j) {
                        VertexId m = mid(c, p, j);
                        verts.push_back(m);
                        EdgeId base = static_cast<EdgeId>(8 * cantor3(c, zig(p), j));
                        edges.push_back({base, aid(c, p), m});
                        edges.push_back({base + 1, m, aid(c, p + 1)});
                    }
                // rung to the next chain
                if (p >= 1 && c + 1 <= n && p <= n)
                    edges.push_back({static_cast<EdgeId>(8 * cantor(c, p) + 2), aid(c, p),
                                     aid(c + 1, -p)});
            }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- grid_k2

class GridK2Family : public Presentation {
public:
    std::string family() const override { return "grid_k2"; }
    CertFlags flags() const override { return {false, true, false, true, false}; }
    static VertexId hub(int r, int i) { return 3 * (4 * i + r); }
    static VertexId mid(int r, int i, int j) {
        return static_cast<VertexId>(3 * cantor(4 * i + r, j) + 1);
    }
    static VertexId smid(int j) { return static_cast<VertexId>(3 * cantor(0, j) + 2); }
    std::vector<CertEnd> ends(int, int level) const override {
        CertEnd e{0, "omega", {}, {}, false};
        for (int i = 0; i < level; ++i) {
            e.ray.push_back(hub(0, i));
            e.ray.push_back(mid(0, i, 0));
        }
        e.ray.push_back(hub(0, level));
        return {e};
    }
    std::vector<VSet> crit(int level) const override {
        std::vector<VSet> out;
        for (int r = 0; r < 4; ++r)
            for (int i = 0; i < level; ++i)
                out.push_back(canon({hub(r, i), hub(r, i + 1)}));
        out.push_back(canon({hub(1, 0), hub(2, 0)}));
        return out;
    }
    std::vector<SimClass> sim_classes(int level) const override {
        SimClass c;
        for (int r = 0; r < 4; ++r)
            for (int i = 0; i <= level; ++i) c.vertices.push_back(hub(r, i));
        c.vertices = canon(c.vertices);
        c.ends = {0};
        c.grows = true;
        return {c};
    }
    std::vector<VSet> fchain(int depth, int level) const override {
        std::vector<VSet> chain;
        for (int i = 1; i <= depth; ++i) {
            VSet x;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < std::min(i, level); ++c) x.push_back(hub(r, c));
            chain.push_back(canon(x));
        }
        return chain;
    }
    std::map<VertexId, std::string> names(int level) const override {
        std::map<VertexId, std::string> m;
        for (int r = 0; r < 4; ++r)
            for (int i = 0; i <= level; ++i) {
                m[hub(r, i)] = "h" + std::to_string(r) + "_" + std::to_string(i);
                for (int j = 0; j < level; ++j)
                    if (i < level)
                        m[mid(r, i, j)] = "m" + std::to_string(r) + "_" +
                                          std::to_string(i) + "_" + std::to_string(j);
            }
        for (int j = 0; j < level; ++j) m[smid(j)] = "s" + std::to_string(j);
        return m;
    }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        for (int r = 0; r < 4; ++r)
            for (int i = 0; i <= n; ++i) {
                verts.push_back(hub(r, i));
                frontier.push_back(hub(r, i));
                // vertical plain edges, except the replaced (1,0)-(2,0)
                if (r < 3 && !(r == 1 && i == 0))
                    edges.push_back({static_cast<EdgeId>(8 * (4 * i + r)), hub(r, i),
                                     hub(r + 1, i)});
                // row gadgets
                if (i < n)
                    for (int j = 0; j < n; ++j) {
                        VertexId m = mid(r, i, j);
                        verts.push_back(m);
                        EdgeId base = static_cast<EdgeId>(8 * cantor(4 * i + r, j));
                        edges.push_back({base + 1, hub(r, i), m});
                        edges.push_back({base + 2, m, hub(r, i + 1)});
                    }
            }
        for (int j = 0; j < n; ++j) {
            VertexId s = smid(j);
            verts.push_back(s);
            edges.push_back({static_cast<EdgeId>(8 * j + 3), hub(1, 0), s});
            edges.push_back({static_cast<EdgeId>(8 * j + 4), s, hub(2, 0)});
        }
        return {n, Multigraph(canon(verts), edges), canon(frontier)};
    }
};

// ---------------------------------------------------------------- custom

class CustomPresentation : public Presentation {
public:
    explicit CustomPresentation(const Json& spec) : spec_(spec) {
        if (!spec.contains("levels") || !spec["levels"].is_array())
            throw Error("BadPresentation", "custom presentations need a levels array");
        VSet verts;
        VSet frontier;
        for (const Json& lvl : spec["levels"]) {
            VSet added = lvl.value("add_vertices", VSet{});
            VSet allowed = set_union(frontier, canon(added));
            for (const Json& e : lvl.value("add_edges", Json::array())) {
                for (int side = 1; side <= 2; ++side) {
                    VertexId u = e[side].get<VertexId>();
                    if (!contains(allowed, u))
                        throw Error("BadPresentation",
                                    contains(verts, u)
                                        ? "edge touches a settled non-frontier vertex"
                                        : "edge endpoint was never added");
                }
            }
            verts = set_union(verts, canon(added));
            VSet nf = lvl.value("frontier", VSet{});
            for (VertexId v : nf)
                if (!contains(verts, v))
                    throw Error("BadPresentation", "frontier vertex not added");
            // frontier never regrows
            for (VertexId v : nf)
                if (!contains(frontier, v) && !contains(canon(added), v))
                    throw Error("BadPresentation", "frontier regrows at vertex " +
                                                       std::to_string(v));
            frontier = canon(nf);
        }
    }
    std::string family() const override { return "custom"; }
    Json params() const override { return spec_; }
    bool certified() const override { return false; }

protected:
    LeveledGraph build(int n) const override {
        VSet verts;
        std::vector<Edge> edges;
        VSet frontier;
        const Json& levels = spec_["levels"];
        int upto = std::min<int>(n + 1, static_cast<int>(levels.size()));
        for (int i = 0; i < upto; ++i) {
            const Json& lvl = levels[i];
            for (VertexId v : lvl.value("add_vertices", VSet{})) verts.push_back(v);
            for (const Json& e : lvl.value("add_edges", Json::array()))
                edges.push_back({e[0].get<EdgeId>(), e[1].get<VertexId>(),
                                 e[2].get<VertexId>()});
            frontier = canon(lvl.value("frontier", VSet{}));
        }
        if (upto == static_cast<int>(levels.size())) {
            // presentation exhausted: the graph is final
            frontier = {};
        }
        return {n, Multigraph(canon(verts), edges), frontier};
    }

private:
    Json spec_;
};

}  // namespace

std::vector<std::string> catalog_families() {
    return {"k2inf",       "kminf",        "dominated_ray", "ray_star",
            "fig4",        "fig5",         "crit_chain",    "tree_inf",
            "binary_fan",  "binary_flower", "fig16",        "fig17",
            "grid_k2",     "ray",          "double_ray",    "grid"};
}

PresentationPtr make_presentation(const std::string& family, const Json& params) {
    if (family == "ray") return std::make_shared<RayFamily>();
    if (family == "double_ray") return std::make_shared<DoubleRayFamily>();
    if (family == "grid") return std::make_shared<GridFamily>();
    if (family == "k2inf") return std::make_shared<KmInfFamily>(2);
    if (family == "kminf") return std::make_shared<KmInfFamily>(params.value("m", 3));
    if (family == "dominated_ray") return std::make_shared<DominatedRayFamily>();
    if (family == "ray_star") return std::make_shared<RayStarFamily>();
    if (family == "fig4") return std::make_shared<Fig4Family>();
    if (family == "fig5") return std::make_shared<Fig5Family>();
    if (family == "crit_chain") return std::make_shared<CritChainFamily>();
    if (family == "tree_inf") return std::make_shared<TreeInfFamily>();
    if (family == "binary_fan") return std::make_shared<BinaryFanFamily>();
    if (family == "binary_flower") return std::make_shared<BinaryFlowerFamily>();
    if (family == "fig16") return std::make_shared<Fig16Family>();
    if (family == "fig17") return std::make_shared<Fig17Family>();
    if (family == "grid_k2") return std::make_shared<GridK2Family>();
    throw Error("UnknownFamily", family);
}

PresentationPtr presentation_from_json(const Json& spec) {
    if (spec.contains("custom")) return std::make_shared<CustomPresentation>(spec["custom"]);
    if (spec.contains("family"))
        return make_presentation(spec["family"].get<std::string>(),
                                 spec.value("params", Json::object()));
    throw Error("BadPresentation", "expected {\"family\":...} or {\"custom\":...}");
}

}  // namespace tk
