#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "tanglekit/report.hpp"

namespace tk {

struct LeveledGraph {
    int level = 0;
    Multigraph graph;
    VSet frontier;  // vertices whose incident edge list may still grow
};

struct CertFlags {
    std::optional<bool> locally_finite;
    std::optional<bool> connected;
    std::optional<bool> one_point_omega;
    std::optional<bool> ends_locally_compact;
    std::optional<bool> simply_branching;
};

// A certified end, realized at a truncation level. `ray` is a prefix of a
// defining ray (a concrete path in the level graph) used to locate the end's
// component; `dominators` lists the visible part of its dominating set.
struct CertEnd {
    int id = 0;
    std::string name;
    std::vector<VertexId> ray;
    VSet dominators;
    bool dominators_unbounded = false;
};

// A nontrivial class of the finite-separability relation, realized at a
// level. Vertices not covered by any class are singletons.
struct SimClass {
    VSet vertices;
    std::vector<int> ends;  // certified end ids absorbed into the class
    bool grows = false;     // keeps acquiring vertices at deeper levels
};

// A finitely-presented infinite graph: a monotone sequence of finite graphs
// with frontier marks, plus (for catalog families) exact structural answers.
class Presentation {
public:
    virtual ~Presentation() = default;

    virtual std::string family() const = 0;
    virtual Json params() const { return Json::object(); }

    // Monotone truncation; memoized and safe for concurrent use.
    const LeveledGraph& truncate(int n) const;

    virtual bool certified() const { return true; }
    virtual CertFlags flags() const { return {}; }

    // Certified ends active for a depth-d analysis, realized at `level`.
    virtual std::vector<CertEnd> ends(int depth, int level) const {
        (void)depth;
        (void)level;
        return {};
    }
    // Certified critical vertex sets whose members are visible at `level`.
    virtual std::vector<VSet> crit(int level) const {
        (void)level;
        return {};
    }
    virtual std::vector<SimClass> sim_classes(int level) const {
        (void)level;
        return {};
    }

    // Edge-disjoint a-b path family (first `count` members) realized at
    // `level`. Throws Error("NotEquivalent") when the pair is certified
    // separable; the default falls back to greedy extraction.
    virtual std::vector<std::vector<VertexId>> path_family(VertexId a, VertexId b,
                                                           int count,
                                                           int level) const;

    // Canonical separator chain X_1 c ... c X_depth for inverse-system work,
    // realized at `level`. Default: non-frontier vertex sets per level.
    virtual std::vector<VSet> fchain(int depth, int level) const;

    virtual std::map<VertexId, std::string> names(int level) const;
    VertexId vertex_by_name(const std::string& name, int level) const;

protected:
    virtual LeveledGraph build(int n) const = 0;

private:
    mutable std::mutex mu_;
    mutable std::map<int, LeveledGraph> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

std::vector<std::string> catalog_families();

// Family by name; `params` carries family parameters (e.g. {"m":3}).
PresentationPtr make_presentation(const std::string& family,
                                  const Json& params = Json::object());

// {"family":"k2inf","params":{}} or {"custom":{"levels":[...]}}
PresentationPtr presentation_from_json(const Json& spec);

}  // namespace tk
