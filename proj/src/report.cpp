#include "tanglekit/report.hpp"

#include <sstream>

namespace tk {

Json to_json(const Multigraph& g) {
    Json j;
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
    j["edges"] = std::move(edges);
    Json labels = Json::object();
    for (const auto& [v, lab] : g.labels()) labels[std::to_string(v)] = lab;
    j["labels"] = std::move(labels);
    return j;
}

Multigraph multigraph_from_json(const Json& j) {
    VSet verts = j.at("vertices").get<VSet>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw Error("BadGraphJson", "edges must be [id,u,v] triples");
        edges.push_back({e[0].get<EdgeId>(), e[1].get<VertexId>(), e[2].get<VertexId>()});
    }
    std::map<VertexId, VSet> labels;
    if (j.contains("labels"))
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
            labels[static_cast<VertexId>(std::stol(it.key()))] = it.value().get<VSet>();
    return Multigraph(std::move(verts), std::move(edges), std::move(labels));
}

std::string to_dot(const Multigraph& g, const std::map<VertexId, std::string>& names) {
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v : g.vertices()) {
        os << "  v" << v << " [label=\"";
        auto nit = names.find(v);
        if (nit != names.end()) os << nit->second;
        else os << v;
        auto lit = g.labels().find(v);
        if (lit != g.labels().end()) {
            os << " {";
            for (std::size_t i = 0; i < lit->second.size(); ++i) {
                if (i) os << ",";
                auto mit = names.find(lit->second[i]);
                if (mit != names.end()) os << mit->second;
                else os << lit->second[i];
            }
            os << "}\" shape=box];\n";
        } else {
            os << "\"];\n";
        }
    }
    for (const Edge& e : g.edges())
        os << "  v" << e.u << " -- v" << e.v << " [label=\"e" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
}

Json to_json(const VertexPartition& p) {
    Json j = Json::array();
    for (const VSet& b : p.blocks()) j.push_back(b);
    return j;
}

}  // namespace tk
