#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

struct Ratios {
    double train = 0.8;
    double valid = 0.1;
    double test = 0.1;
};

// Throws std::invalid_argument unless all three are positive and sum to 1
// within 1e-9.
void validate_ratios(const Ratios& r);

// Exact integer allocation of n across three groups (largest remainder;
// remainder ties break toward the earlier group).
std::array<std::size_t, 3> largest_remainder_counts(std::size_t n,
                                                    const Ratios& r);

// Edge-level split: positives partition the input edge set, negatives are
// uniform non-edges sampled to match each positive set.
struct EdgeSplit {
    std::vector<Edge> train_edges;
    std::vector<Edge> valid_pos;
    std::vector<Edge> test_pos;
    std::vector<Edge> valid_neg;
    std::vector<Edge> test_neg;
};

EdgeSplit random_edge_split(const Graph& graph, const Ratios& ratios,
                            std::uint64_t seed);

// Node-level split: nodes partition into three groups and each group keeps
// only its internal edges. Subgraphs stay in the parent id space (nodes
// outside the group are simply isolated there). Edges crossing groups are
// counted in lost_edges.
struct InductiveSplit {
    std::vector<NodeId> train_nodes;  // ascending
    std::vector<NodeId> valid_nodes;
    std::vector<NodeId> test_nodes;
    Graph train_graph;
    Graph valid_graph;
    Graph test_graph;
    std::size_t lost_edges = 0;
};

InductiveSplit random_node_split(const Graph& graph, const Ratios& ratios,
                                 std::uint64_t seed);

// Difference between consecutive snapshots: nodes and edges present at
// snapshot j+1 but not at snapshot j. With `new_node_incident_only` (the
// default) new_edges keeps only edges touching at least one new node,
// i.e. the pairs a prediction on newly arrived nodes is scored on.
struct TemporalSplit {
    std::size_t base_index = 0;
    std::vector<NodeId> observed_nodes;  // nodes of snapshot j, ascending
    std::vector<NodeId> new_nodes;       // ascending
    std::vector<Edge> new_edges;
};

TemporalSplit temporal_split(const TemporalGraphSequence& seq, std::size_t j,
                             bool new_node_incident_only = true);

// Restricts sampled endpoints: one from `a`, the other from `b` (either
// order). Pass the same set twice for "both endpoints inside this set".
struct EndpointConstraint {
    std::vector<NodeId> a;
    std::vector<NodeId> b;
};

// Number of unordered non-edge pairs available under the constraint.
std::size_t count_non_edges(
    const Graph& graph,
    const std::optional<EndpointConstraint>& constraint = std::nullopt);

// Uniform sample of `count` distinct unordered pairs absent from
// graph.edges(). Rejection sampling against the adjacency index; switches
// to explicit enumeration when more than half of the candidate pairs are
// edges. Throws std::invalid_argument when fewer than `count` non-edges
// exist.
std::vector<Edge> sample_negatives(
    const Graph& graph, std::size_t count, std::uint64_t seed,
    const std::optional<EndpointConstraint>& constraint = std::nullopt);

}  // namespace linkpred
