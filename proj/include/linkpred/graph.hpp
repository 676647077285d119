#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkpred/matrix.hpp"

namespace linkpred {

using NodeId = std::uint32_t;

// Undirected simple edge, stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t edge_key(const Edge& e) {
    return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

struct EdgeKeyHash {
    std::size_t operator()(std::uint64_t k) const noexcept {
        // Fibonacci hash; edge keys are structured so identity hashing
        // clusters badly.
        return static_cast<std::size_t>(k * 0x9e3779b97f4a7c15ULL);
    }
};

using EdgeSet = std::unordered_map<std::uint64_t, bool, EdgeKeyHash>;

struct GraphBuildStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Immutable undirected simple graph with dense integer node ids.
//
// External string keys are optional: graphs loaded from files keep the key
// of every node (ids assigned in first-appearance order); synthetic graphs
// may omit them, in which case key_of() falls back to the decimal id.
// Instances are immutable after construction and safe to share across
// threads.
class Graph {
  public:
    Graph() = default;

    // Normalizes endpoint order, drops self-loops and duplicate edges
    // (counts go to `stats` when provided), and builds the adjacency index.
    // Throws std::invalid_argument if an endpoint id is >= num_nodes or if
    // keys are present but not a bijection.
    static Graph from_edges(std::size_t num_nodes, std::vector<Edge> edges,
                            std::vector<std::string> keys = {},
                            GraphBuildStats* stats = nullptr);

    std::size_t num_nodes() const { return num_nodes_; }
    std::size_t num_edges() const { return edges_.size(); }

    // Sorted lexicographically by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(NodeId v) const {
        return offsets_[v + 1] - offsets_[v];
    }

    bool has_edge(NodeId a, NodeId b) const;

    bool has_keys() const { return !keys_.empty(); }
    const std::vector<std::string>& keys() const { return keys_; }

    // Decimal id when the graph has no external keys.
    std::string key_of(NodeId v) const;

    // Throws std::out_of_range for unknown keys.
    NodeId id_of(const std::string& key) const;
    std::optional<NodeId> find_id(const std::string& key) const;

  private:
    std::size_t num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;  // num_nodes_ + 1 entries
    std::vector<NodeId> adj_;
    std::vector<std::string> keys_;
    std::unordered_map<std::string, NodeId> key_to_id_;
};

// One observation of an evolving graph. Snapshots share a global id space:
// every snapshot's Graph has the same num_nodes and key map, and a node
// "belongs" to a snapshot when it has at least one incident edge there.
struct TemporalSnapshot {
    std::int64_t timestamp = 0;
    Graph graph;
    AttributeMatrix attrs;  // empty when no attribute file was attached
};

struct TemporalGraphSequence {
    std::vector<TemporalSnapshot> snapshots;

    std::size_t size() const { return snapshots.size(); }

    // Node ids with degree > 0 in snapshot j, ascending.
    std::vector<NodeId> present_nodes(std::size_t j) const;
};

}  // namespace linkpred
