#pragma once

#include "tanglekit/packing.hpp"

namespace tk {

struct SweepResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Named invariant sweeps (the acceptance criteria that need no test-only
// oracle). Deterministic for a fixed seed.
std::vector<std::string> sweep_names();
SweepResult run_sweep(const std::string& name, unsigned seed);

// Helpers shared with the acceptance suite.
std::vector<Multigraph> all_connected_multigraphs(int max_vertices, int max_edges);
Multigraph random_connected_multigraph(std::uint64_t seed, int vertices,
                                       int min_edges, int max_edges);
std::vector<Multigraph> all_simple_graphs(int max_vertices);

}  // namespace tk
