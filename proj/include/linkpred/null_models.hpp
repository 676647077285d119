#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

// Degree-sequence edge scorer: everything it knows comes from the train
// graph's degree sequence, so whatever it gets right is attainable without
// node attributes at all.
struct DegreeModel {
    std::vector<std::size_t> degrees;
    double two_m = 0.0;  // sum of degrees = 2 * |train edges|

    static DegreeModel from_graph(const Graph& train_graph);
    static DegreeModel from_edges(std::size_t num_nodes,
                                  std::span<const Edge> train_edges);
};

// k_u * k_v / (2m): the expected-edge score of the configuration-model
// ensemble. Any pair with a degree-0 endpoint scores 0.
double config_score(const DegreeModel& model, NodeId u, NodeId v);

// Two degree layers over one node universe (positive edges vs. sampled
// negative pairs).
struct DuplexDegreeModel {
    std::vector<std::size_t> pos_degrees;
    std::vector<std::size_t> neg_degrees;
};

// Throws std::invalid_argument when the layers overlap.
DuplexDegreeModel build_duplex(std::span<const Edge> train_pos,
                               std::span<const Edge> train_neg,
                               std::size_t num_nodes);

// k+_u k+_v / (k+_u k+_v + k-_u k-_v); 0.5 when both products vanish.
double duplex_config_score(const DuplexDegreeModel& model, NodeId u,
                           NodeId v);

// Uniform-random scorer: a pure function of (seed, pair), used as the
// uninformative baseline.
double random_edge_score(std::uint64_t seed, NodeId u, NodeId v);

}  // namespace linkpred
