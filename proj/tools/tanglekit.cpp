#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tanglekit/sweeps.hpp"

namespace {

using namespace tk;

struct Cli {
    std::string family = "k2inf";
    std::string params = "{}";
    std::string preset_file;
    int depth = 6;
    int k = 2;
    int size_bound = 4;
    int levels = 5;
    std::string format = "json";
    unsigned seed = 1;
    std::string x_arg;
    std::string a_arg, b_arg;
    std::string end_arg;
    std::string graph_file;
    std::string sweep;
    std::string partition;
};

int depth_cap() {
    const char* cap = std::getenv("TANGLEKIT_DEPTH_CAP");
    return cap ? std::atoi(cap) : 64;
}

PresentationPtr load_presentation(const Cli& cli) {
    if (!cli.preset_file.empty()) {
        std::ifstream in(cli.preset_file);
        if (!in) throw Error("BadFile", cli.preset_file);
        Json spec = Json::parse(in);
        return presentation_from_json(spec);
    }
    return make_presentation(cli.family, Json::parse(cli.params));
}

VSet parse_vertices(const Presentation& p, const std::string& arg, int level) {
    VSet out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(p.vertex_by_name(cur, level));
        cur.clear();
    };
    for (char c : arg) {
        if (c == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    flush();
    return canon(out);
}

// Resolves a vertex name or an end name.
PointRef parse_point(const Presentation& p, const std::string& arg, int level) {
    for (const CertEnd& e : p.ends(level, level))
        if (e.name == arg) return PointRef::of_end(e.id);
    return PointRef::of_vertex(p.vertex_by_name(arg, level));
}

Json provenance(const Cli& cli, int level) {
    Json j;
    j["family"] = cli.family;
    j["level"] = level;
    j["seed"] = cli.seed;
    return j;
}

Json verdict_json(Verdict v) {
    switch (v) {
        case Verdict::Witnessed: return "witnessed";
        case Verdict::Refuted: return "refuted";
        default: return "unknown";
    }
}

struct Report {
    Json body;
    int unknowns = 0;
    int decided = 0;
};

int emit(const Report& rep, const Cli& cli, const Presentation* p, int level) {
    if (cli.format == "json" || cli.format == "text") {
        std::cout << rep.body.dump(2) << "\n";
    } else if (cli.format == "dot") {
        if (!rep.body.contains("dot")) {
            std::cerr << "no dot view for this command\n";
            return 1;
        }
        std::cout << rep.body["dot"].get<std::string>();
    }
    (void)p;
    (void)level;
    return rep.unknowns > rep.decided ? 2 : 0;
}

Json names_json(const Presentation& p, const VSet& vs, int level) {
    auto names = p.names(level);
    Json arr = Json::array();
    for (VertexId v : vs) {
        auto it = names.find(v);
        arr.push_back(it != names.end() ? it->second : std::to_string(v));
    }
    return arr;
}

int run_families(const Cli& cli) {
    Json out = Json::array();
    for (const std::string& fam : catalog_families()) {
        auto p = make_presentation(fam, fam == "kminf" ? Json{{"m", 3}} : Json::object());
        Json j;
        j["family"] = fam;
        CertFlags f = p->flags();
        Json flags;
        auto put = [&](const char* k, const std::optional<bool>& v) {
            flags[k] = v.has_value() ? Json(*v) : Json(nullptr);
        };
        put("locally_finite", f.locally_finite);
        put("connected", f.connected);
        put("one_point_omega", f.one_point_omega);
        put("ends_locally_compact", f.ends_locally_compact);
        put("simply_branching", f.simply_branching);
        j["flags"] = flags;
        j["certified_crit_at_6"] = Json::array();
        for (const VSet& y : p->crit(6)) j["certified_crit_at_6"].push_back(names_json(*p, y, 6));
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
    (void)cli;
    return 0;
}

int run_truncate(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    const LeveledGraph& lg = p->truncate(n);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    rep.body["graph"] = to_json(lg.graph);
    rep.body["frontier"] = lg.frontier;
    rep.body["names"] = names_json(*p, lg.graph.vertices(), n);
    rep.body["dot"] = to_dot(lg.graph, p->names(n));
    return emit(rep, cli, p.get(), n);
}

int run_components(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    VSet x = parse_vertices(*p, cli.x_arg, n);
    ComponentReport cr = component_report(*p, x, n);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    rep.body["separator"] = names_json(*p, x, n);
    Json closed = Json::array(), open = Json::array();
    for (const auto& c : cr.closed)
        closed.push_back({{"vertices", names_json(*p, c.vertices, n)},
                          {"nbhd", names_json(*p, c.nbhd, n)}});
    for (const auto& c : cr.open)
        open.push_back({{"vertices", names_json(*p, c.vertices, n)},
                        {"partial_nbhd", names_json(*p, c.nbhd, n)}});
    rep.body["closed"] = std::move(closed);
    rep.body["open"] = std::move(open);
    return emit(rep, cli, p.get(), n);
}

int run_crit(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    auto witnesses = cli.x_arg.empty()
                         ? enumerate_crit(*p, cli.size_bound, n, cli.k)
                         : crit_of(*p, parse_vertices(*p, cli.x_arg, n), n, cli.k);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    rep.body["k"] = cli.k;
    rep.body["size_bound"] = cli.size_bound;
    Json arr = Json::array();
    for (const CritWitness& w : witnesses)
        arr.push_back({{"y", names_json(*p, w.y, n)},
                       {"witness_count", w.witness_count},
                       {"certified", w.certified}});
    rep.body["critical_sets"] = std::move(arr);
    return emit(rep, cli, p.get(), n);
}

int run_ends(const Cli& cli) {
    auto p = load_presentation(cli);
    int d = std::min(cli.depth, depth_cap());
    auto surrogates = directions(*p, d);
    Report rep;
    rep.body["provenance"] = provenance(cli, d);
    Json arr = Json::array();
    for (const EndSurrogate& s : surrogates) {
        Json j;
        j["matched"] = s.matched;
        if (s.matched) {
            j["end"] = s.name;
            j["dominators"] = names_json(*p, s.dominators, d + 4);
        } else {
            ++rep.unknowns;
        }
        Json thread = Json::array();
        for (const auto& [x, comp] : s.thread)
            thread.push_back({{"separator", names_json(*p, x, d + 4)},
                              {"component_min", comp.front()}});
        j["thread"] = std::move(thread);
        arr.push_back(std::move(j));
        ++rep.decided;
    }
    rep.body["surrogates"] = std::move(arr);
    return emit(rep, cli, p.get(), d);
}

int run_fpoints(const Cli& cli) {
    auto p = load_presentation(cli);
    int d = std::min(cli.depth, depth_cap());
    int n = d + 4;
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    if (!cli.x_arg.empty()) {
        VSet x = parse_vertices(*p, cli.x_arg, n);
        FLevel lvl = f_level(*p, x, n, p->ends(d, n));
        Json pts = Json::array();
        for (const FPoint& pt : lvl.points) {
            if (pt.kind == FPoint::Kind::Principal)
                pts.push_back({{"kind", "principal"},
                               {"component_min", pt.comp},
                               {"certified_end", pt.certified_end}});
            else
                pts.push_back({{"kind", "filter"}, {"y", names_json(*p, pt.y, n)}});
        }
        rep.body["points"] = std::move(pts);
        rep.body["pending"] = static_cast<int>(lvl.pending.size());
        rep.body["absorbed"] = static_cast<int>(lvl.absorbed.size());
    } else {
        auto threads = f_threads(*p, d, n);
        Json arr = Json::array();
        for (const FThread& t : threads) {
            Json j;
            j["census"] = t.counts_in_census;
            Json pts = Json::array();
            for (const FPoint& pt : t.points)
                pts.push_back(pt.kind == FPoint::Kind::Principal
                                  ? Json{{"principal", pt.comp}}
                                  : Json{{"filter", names_json(*p, pt.y, n)}});
            j["points"] = std::move(pts);
            auto xv = x_tau(t);
            j["x_tau"] = xv ? names_json(*p, *xv, n) : Json(nullptr);
            arr.push_back(std::move(j));
        }
        rep.body["threads"] = std::move(arr);
    }
    return emit(rep, cli, p.get(), n);
}

GammaIndex parse_gamma(const Presentation& p, const std::string& xs,
                       const std::string& part, int n) {
    VSet x = parse_vertices(p, xs, n);
    GammaIndex g;
    g.x = x;
    auto comps = components(p.truncate(n).graph, x);
    if (part.empty()) {
        VSet all;
        for (const auto& c : comps) all.push_back(c.vertices.front());
        g.classes.push_back(canon(all));
        return g;
    }
    if (part == "canonical") return p_canonical(p, x, n);
    // "v1,v2|v3|..." names component representatives per class; unlisted
    // components become singleton classes.
    VSet seen;
    std::string cur;
    VSet cls;
    auto flush_cls = [&] {
        if (!cls.empty()) {
            g.classes.push_back(canon(cls));
            seen = set_union(seen, cls);
        }
        cls.clear();
    };
    auto flush_v = [&] {
        if (!cur.empty()) {
            VertexId v = p.vertex_by_name(cur, n);
            for (const auto& c : comps)
                if (contains(c.vertices, v)) cls.push_back(c.vertices.front());
        }
        cur.clear();
    };
    for (char c : part) {
        if (c == ',') flush_v();
        else if (c == '|') {
            flush_v();
            flush_cls();
        } else if (!std::isspace(static_cast<unsigned char>(c)))
            cur.push_back(c);
    }
    flush_v();
    flush_cls();
    for (const auto& c : comps)
        if (!contains(seen, c.vertices.front())) g.classes.push_back({c.vertices.front()});
    std::sort(g.classes.begin(), g.classes.end());
    return g;
}

int run_gamma(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    GammaIndex g = parse_gamma(*p, cli.x_arg, cli.partition, n);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    Multigraph space = gamma_space(*p, g, n);
    rep.body["space"] = to_json(space);
    rep.body["delta_member"] = delta_member(*p, g, n);
    if (rep.body["delta_member"].get<bool>()) {
        GammaIndex d = delta_dominate(*p, g, n);
        rep.body["delta_dominate_x"] = names_json(*p, d.x, n);
    }
    rep.body["dot"] = to_dot(space, p->names(n));
    return emit(rep, cli, p.get(), n);
}

int run_tangles(const Cli& cli) {
    Multigraph g = [&] {
        if (!cli.graph_file.empty()) {
            std::ifstream in(cli.graph_file);
            if (!in) throw Error("BadFile", cli.graph_file);
            return multigraph_from_json(Json::parse(in));
        }
        // default: the truncation of the chosen family at the chosen depth
        auto p = load_presentation(cli);
        return p->truncate(std::min(cli.depth, depth_cap())).graph;
    }();
    auto tangles = enumerate_tangles_finite(g, cli.k);
    Report rep;
    rep.body["k"] = cli.k;
    rep.body["graph"] = to_json(g);
    rep.body["count"] = tangles.size();
    Json arr = Json::array();
    for (const Orientation& tau : tangles) {
        Json o = Json::array();
        for (const OrientedSep& s : tau)
            o.push_back({{"x", s.x}, {"big_side_components", s.side}});
        arr.push_back(std::move(o));
    }
    rep.body["tangles"] = std::move(arr);
    return emit(rep, cli, nullptr, 0);
}

int run_sprime(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    VSet x = parse_vertices(*p, cli.x_arg, n);
    auto comps = components(p->truncate(n).graph, x);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    Json arr = Json::array();
    VSet side;
    if (!cli.partition.empty()) {
        // side given as vertex names; collect their components
        for (VertexId v : parse_vertices(*p, cli.partition, n))
            for (const auto& c : comps)
                if (contains(c.vertices, v)) side.push_back(c.vertices.front());
        side = canon(side);
        auto v = in_S_prime(*p, {x, side}, n);
        Json j;
        j["side_components"] = side;
        j["in_s_prime"] = v.has_value() ? Json(*v) : Json(nullptr);
        if (!v.has_value()) ++rep.unknowns;
        else ++rep.decided;
        arr.push_back(std::move(j));
    } else {
        for (std::size_t i = 0; i < comps.size() && i < 20; ++i) {
            PSep s{x, {comps[i].vertices.front()}};
            auto v = in_S_prime(*p, s, n);
            Json j;
            j["side_components"] = s.side;
            j["in_s_prime"] = v.has_value() ? Json(*v) : Json(nullptr);
            if (!v.has_value()) ++rep.unknowns;
            else ++rep.decided;
            arr.push_back(std::move(j));
        }
    }
    rep.body["separations"] = std::move(arr);
    return emit(rep, cli, p.get(), n);
}

int run_sim(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    if (!cli.a_arg.empty() && !cli.b_arg.empty()) {
        PointRef a = parse_point(*p, cli.a_arg, n);
        PointRef b = parse_point(*p, cli.b_arg, n);
        SeparabilityResult s = not_finitely_separable(*p, a, b, n);
        rep.body["not_finitely_separable"] = {{"verdict", verdict_json(s.verdict)},
                                              {"edge_disjoint_paths", s.paths},
                                              {"cut", s.cut},
                                              {"source", s.source}};
        if (s.verdict == Verdict::Unknown) ++rep.unknowns;
        else ++rep.decided;
        if (!a.is_end && !b.is_end) {
            LinkResult l = strongly_linked(*p, a.vertex, b.vertex, n);
            rep.body["strongly_linked"] = {{"verdict", verdict_json(l.verdict)},
                                           {"x", names_json(*p, l.x, n)},
                                           {"cut_size", l.cut_size},
                                           {"source", l.source}};
            if (l.verdict == Verdict::Unknown) ++rep.unknowns;
            else ++rep.decided;
        }
    } else {
        QuotientReport q = quotient_points(*p, n);
        Json classes = Json::array();
        for (const auto& c : q.vertex_classes)
            classes.push_back({{"vertices", names_json(*p, c.vertices, n)},
                               {"ends", c.ends}});
        rep.body["vertex_classes"] = std::move(classes);
        rep.body["singleton_ends"] = q.singleton_ends;
        ++rep.decided;
    }
    return emit(rep, cli, p.get(), n);
}

int run_aux(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    AuxGraph ag = aux_graph(*p, n);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    Json arr = Json::array();
    for (const AuxEdge& e : ag.aux) {
        Json j;
        if (e.kind == AuxEdge::Kind::EndEdge) {
            j["kind"] = "end";
            j["u"] = names_json(*p, {e.u}, n)[0];
            j["end"] = e.end_id;
        } else {
            j["kind"] = "crit";
            j["u"] = names_json(*p, {e.u}, n)[0];
            j["v"] = names_json(*p, {e.v}, n)[0];
            j["label"] = names_json(*p, e.label, n);
        }
        arr.push_back(std::move(j));
    }
    rep.body["aux_edges"] = std::move(arr);
    return emit(rep, cli, p.get(), n);
}

int run_vstar(const Cli& cli) {
    auto p = load_presentation(cli);
    int d = std::min(cli.depth, depth_cap());
    VertexId a = p->vertex_by_name(cli.a_arg, d + 4);
    VertexId b = p->vertex_by_name(cli.b_arg, d + 4);
    VStar vs = vstar(*p, a, b, d);
    Report rep;
    rep.body["provenance"] = provenance(cli, vs.level);
    rep.body["order"] = names_json(*p, vs.order, vs.level);
    rep.body["paths_sampled"] = vs.paths_sampled;
    rep.body["threshold"] = vs.threshold;
    Json gaps = Json::array();
    for (const GapEntry& g : classify_gaps(*p, vs, vs.level)) {
        Json j;
        j["u"] = names_json(*p, {g.u}, vs.level)[0];
        j["t"] = names_json(*p, {g.t}, vs.level)[0];
        switch (g.kind) {
            case GapEntry::Kind::End:
                j["gap"] = "end";
                j["end"] = g.end_id;
                ++rep.decided;
                break;
            case GapEntry::Kind::Crit:
                j["gap"] = "crit";
                j["crit"] = names_json(*p, g.crit, vs.level);
                ++rep.decided;
                break;
            default:
                j["gap"] = "unknown";
                ++rep.unknowns;
        }
        gaps.push_back(std::move(j));
    }
    rep.body["gaps"] = std::move(gaps);
    return emit(rep, cli, p.get(), vs.level);
}

int run_pack(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(std::max(cli.depth, cli.levels + 3), depth_cap());
    PackResult res = pack_pipeline(*p, cli.k, cli.levels, n);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    switch (res.status) {
        case PackResult::Status::Success: rep.body["status"] = "success"; break;
        case PackResult::Status::CutConditionFailed:
            rep.body["status"] = "cut_condition_failed";
            rep.body["violating_partition"] = to_json(*res.violating);
            break;
        case PackResult::Status::ThreadEmpty:
            rep.body["status"] = "thread_empty";
            break;
    }
    Json lv = Json::array();
    for (const LevelPack& l : res.levels) {
        Json trees = Json::array();
        for (const auto& t : l.trees) trees.push_back(t);
        lv.push_back({{"F", l.f}, {"trees", std::move(trees)}});
    }
    rep.body["levels"] = std::move(lv);
    Json limit = Json::object();
    for (const auto& [e, t] : res.limit_assignment) limit[std::to_string(e)] = t;
    rep.body["limit_assignment"] = std::move(limit);
    Json completion = Json::array();
    for (const AuxEdge& e : res.completion)
        completion.push_back(e.kind == AuxEdge::Kind::CritEdge
                                 ? Json{{"crit", names_json(*p, e.label, n)},
                                        {"u", e.u},
                                        {"v", e.v}}
                                 : Json{{"end", e.end_id}, {"u", e.u}});
    rep.body["aux_completion"] = std::move(completion);
    rep.body["enumeration_truncated"] = res.enumeration_truncated;
    int code = emit(rep, cli, p.get(), n);
    if (code == 0 && res.status != PackResult::Status::Success) return 2;
    return code;
}

int run_predicates(const Cli& cli) {
    auto p = load_presentation(cli);
    int n = std::min(cli.depth, depth_cap());
    CompactnessReport c = compactness_predicates(*p, n);
    Report rep;
    rep.body["provenance"] = provenance(cli, n);
    auto put = [&](const char* k, const std::optional<bool>& v) {
        rep.body[k] = v.has_value() ? Json(*v) : Json(nullptr);
        if (v.has_value()) ++rep.decided;
        else ++rep.unknowns;
    };
    put("ends_locally_compact", c.ends_locally_compact);
    put("one_point_omega", c.one_point_omega);
    rep.body["source"] = c.source;
    return emit(rep, cli, p.get(), n);
}

int run_check(const Cli& cli) {
    if (cli.sweep.empty()) {
        Json out = sweep_names();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    SweepResult r = run_sweep(cli.sweep, cli.seed);
    Json j;
    j["sweep"] = r.name;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    j["seconds"] = r.seconds;
    std::cout << j.dump(2) << "\n";
    return r.pass ? 0 : 1;
}

const char* kSchema = R"({
  "presentation": {"family": "k2inf", "params": {}},
  "custom_presentation": {"custom": {"levels": [{"add_vertices": [0], "add_edges": [[0, 0, 1]], "frontier": [0]}]}},
  "multigraph": {"vertices": [0, 1], "edges": [[0, 0, 1]], "labels": {"0": [0]}},
  "packing_thread": {"levels": [{"F": [0], "trees": [[0]]}], "limit_assignment": {"0": 0}, "aux_completion": []}
})";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tanglekit: finite-truncation analysis of finitely presented infinite graphs"};
    app.require_subcommand(0, 1);
    Cli cli;
    bool schema = false;
    app.add_flag("--schema", schema, "print the JSON schemas and exit");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cli.family, "catalog family name");
        sub->add_option("--params", cli.params, "family parameters as JSON");
        sub->add_option("--preset-file", cli.preset_file, "presentation JSON file");
        sub->add_option("--depth", cli.depth, "truncation depth / chain depth");
        sub->add_option("--format", cli.format, "json|dot|text");
        sub->add_option("--seed", cli.seed, "seed for sampled sweeps");
        return sub;
    };

    auto* families = app.add_subcommand("families", "list catalog families");
    auto* truncate = add_common(app.add_subcommand("truncate", "emit a truncation level"));
    auto* comps = add_common(app.add_subcommand("components", "component report for a separator"));
    comps->add_option("--x", cli.x_arg, "separator vertices (comma separated names)");
    auto* crit = add_common(app.add_subcommand("crit", "critical-set search"));
    crit->add_option("--x", cli.x_arg, "restrict to one separator");
    crit->add_option("--k", cli.k, "witness threshold");
    crit->add_option("--size-bound", cli.size_bound, "max critical-set size");
    auto* ends = add_common(app.add_subcommand("ends", "direction surrogates"));
    auto* fpoints = add_common(app.add_subcommand("fpoints", "F-system levels and threads"));
    fpoints->add_option("--x", cli.x_arg, "emit a single level instead of threads");
    auto* gamma = add_common(app.add_subcommand("gamma", "contraction space for a Gamma index"));
    gamma->add_option("--x", cli.x_arg, "separator vertices");
    gamma->add_option("--classes", cli.partition,
                      "component classes: 'canonical' or 'v1,v2|v3' groups");
    auto* tangles = add_common(app.add_subcommand("tangles", "finite tangle enumeration"));
    tangles->add_option("--graph", cli.graph_file, "multigraph JSON file");
    tangles->add_option("--k", cli.k, "order bound");
    auto* sprime = add_common(app.add_subcommand("sprime", "restricted-system membership"));
    sprime->add_option("--x", cli.x_arg, "separator vertices");
    sprime->add_option("--side", cli.partition, "vertices marking the designated side");
    auto* sim = add_common(app.add_subcommand("sim", "finite-separability and quotient points"));
    sim->add_option("--a", cli.a_arg, "first point (vertex or end name)");
    sim->add_option("--b", cli.b_arg, "second point");
    auto* aux = add_common(app.add_subcommand("aux", "auxiliary edge sets"));
    auto* vstar_cmd = add_common(app.add_subcommand("vstar", "linear-order extraction"));
    vstar_cmd->add_option("--a", cli.a_arg, "least vertex")->required();
    vstar_cmd->add_option("--b", cli.b_arg, "greatest vertex")->required();
    auto* pack = add_common(app.add_subcommand("pack", "tree-packing pipeline"));
    pack->add_option("--k", cli.k, "number of trees");
    pack->add_option("--levels", cli.levels, "length of the F-chain");
    auto* predicates = add_common(app.add_subcommand("predicates", "compactness predicates"));
    auto* check = app.add_subcommand("check", "run a named invariant sweep");
    check->add_option("--name", cli.sweep, "sweep name (omit to list)");
    check->add_option("--seed", cli.seed, "sweep seed");

    CLI11_PARSE(app, argc, argv);

    if (schema) {
        std::cout << kSchema << "\n";
        return 0;
    }

    try {
        if (families->parsed()) return run_families(cli);
        if (truncate->parsed()) return run_truncate(cli);
        if (comps->parsed()) return run_components(cli);
        if (crit->parsed()) return run_crit(cli);
        if (ends->parsed()) return run_ends(cli);
        if (fpoints->parsed()) return run_fpoints(cli);
        if (gamma->parsed()) return run_gamma(cli);
        if (tangles->parsed()) return run_tangles(cli);
        if (sprime->parsed()) return run_sprime(cli);
        if (sim->parsed()) return run_sim(cli);
        if (aux->parsed()) return run_aux(cli);
        if (vstar_cmd->parsed()) return run_vstar(cli);
        if (pack->parsed()) return run_pack(cli);
        if (predicates->parsed()) return run_predicates(cli);
        if (check->parsed()) return run_check(cli);
        std::cout << app.help();
        return 0;
    } catch (const tk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
