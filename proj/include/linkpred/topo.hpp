#pragma once

#include <cstdint>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

// Per-node structural features: degree k, local clustering coefficient CC,
// triangle count, and betweenness centrality.
struct TopoFeatures {
    std::size_t degree = 0;
    double clustering_coeff = 0.0;  // 2*triangles / (k*(k-1)), 0 when k < 2
    std::size_t triangle_count = 0;
    double betweenness = 0.0;  // unnormalized shortest-path pair count
};

struct TopoOptions {
    int threads = 1;
    // Fraction of source nodes used for betweenness accumulation. 1.0 runs
    // the exact computation; anything below samples sources uniformly
    // (seeded) and scales the sums by 1/fraction, which is approximate and
    // only intended for graphs too large for the exact pass.
    double betweenness_source_fraction = 1.0;
    std::uint64_t seed = 0;
};

// Triangles per node, each triangle counted once per member node.
std::vector<std::size_t> triangle_counts(const Graph& graph);

// Exact betweenness by single-source shortest-path accumulation over all
// sources (Brandes), halved so each unordered pair contributes once.
// Deterministic for any thread count: sources are processed in fixed-size
// chunks whose partial sums are combined in chunk order.
std::vector<double> betweenness_centrality(const Graph& graph,
                                           const TopoOptions& opts = {});

std::vector<TopoFeatures> topo_features(const Graph& graph,
                                        const TopoOptions& opts = {});

}  // namespace linkpred
