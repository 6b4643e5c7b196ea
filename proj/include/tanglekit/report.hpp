#pragma once

#include <json.hpp>

#include "tanglekit/multigraph.hpp"

namespace tk {

using Json = nlohmann::ordered_json;

// {"vertices":[ids],"edges":[[edgeId,u,v],...],"labels":{"id":[originalIds]}}
Json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const Json& j);

// DOT export; dummy vertices (those carrying labels) are rendered as boxed
// sets. `names` optionally maps vertex ids to display names.
std::string to_dot(const Multigraph& g,
                   const std::map<VertexId, std::string>& names = {});

Json to_json(const VertexPartition& p);

}  // namespace tk
