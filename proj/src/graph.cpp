#include "linkpred/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkpred {

Graph Graph::from_edges(std::size_t num_nodes, std::vector<Edge> edges,
                        std::vector<std::string> keys,
                        GraphBuildStats* stats) {
    Graph g;
    g.num_nodes_ = num_nodes;

    GraphBuildStats local;
    std::vector<Edge> clean;
    clean.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= num_nodes || e.v >= num_nodes)
            throw std::invalid_argument("edge endpoint id out of range");
        if (e.u == e.v) {
            ++local.self_loops_dropped;
            continue;
        }
        clean.push_back(make_edge(e.u, e.v));
    }
    std::sort(clean.begin(), clean.end());
    const auto last = std::unique(clean.begin(), clean.end());
    local.duplicate_edges_dropped =
        static_cast<std::size_t>(clean.end() - last);
    clean.erase(last, clean.end());
    g.edges_ = std::move(clean);

    g.offsets_.assign(num_nodes + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < num_nodes; ++i)
        g.offsets_[i + 1] += g.offsets_[i];

    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(),
                                    g.offsets_.end() - 1);
    // Edges are sorted by (u, v): every adjacency list receives partners
    // below the node first (ascending u), then partners above it
    // (ascending v), so lists come out sorted without a per-list sort.
    for (const Edge& e : g.edges_) {
        g.adj_[cursor[e.u]++] = e.v;
        g.adj_[cursor[e.v]++] = e.u;
    }

    if (!keys.empty()) {
        if (keys.size() != num_nodes)
            throw std::invalid_argument("key list size != num_nodes");
        g.key_to_id_.reserve(num_nodes);
        for (std::size_t i = 0; i < num_nodes; ++i) {
            const auto [it, inserted] =
                g.key_to_id_.emplace(keys[i], static_cast<NodeId>(i));
            if (!inserted)
                throw std::invalid_argument("duplicate node key: " + keys[i]);
        }
        g.keys_ = std::move(keys);
    }

    if (stats != nullptr) *stats = local;
    return g;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    if (a == b) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::string Graph::key_of(NodeId v) const {
    if (v < keys_.size()) return keys_[v];
    return std::to_string(v);
}

NodeId Graph::id_of(const std::string& key) const {
    const auto it = key_to_id_.find(key);
    if (it == key_to_id_.end())
        throw std::out_of_range("unknown node key: " + key);
    return it->second;
}

std::optional<NodeId> Graph::find_id(const std::string& key) const {
    const auto it = key_to_id_.find(key);
    if (it == key_to_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<NodeId> TemporalGraphSequence::present_nodes(
    std::size_t j) const {
    const Graph& g = snapshots.at(j).graph;
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.degree(v) > 0) out.push_back(v);
    return out;
}

}  // namespace linkpred
