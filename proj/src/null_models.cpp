#include "linkpred/null_models.hpp"

#include <stdexcept>
#include <unordered_set>

#include "linkpred/rng.hpp"

namespace linkpred {

namespace {

void check_node(const std::vector<std::size_t>& degrees, NodeId v) {
    if (v >= degrees.size())
        throw std::invalid_argument("unknown node id " + std::to_string(v));
}

}  // namespace

DegreeModel DegreeModel::from_graph(const Graph& train_graph) {
    DegreeModel m;
    m.degrees.resize(train_graph.num_nodes());
    for (NodeId v = 0; v < train_graph.num_nodes(); ++v)
        m.degrees[v] = train_graph.degree(v);
    m.two_m = 2.0 * static_cast<double>(train_graph.num_edges());
    return m;
}

DegreeModel DegreeModel::from_edges(std::size_t num_nodes,
                                    std::span<const Edge> train_edges) {
    DegreeModel m;
    m.degrees.assign(num_nodes, 0);
    for (const Edge& e : train_edges) {
        if (e.u >= num_nodes || e.v >= num_nodes)
            throw std::invalid_argument("edge endpoint id out of range");
        ++m.degrees[e.u];
        ++m.degrees[e.v];
    }
    m.two_m = 2.0 * static_cast<double>(train_edges.size());
    return m;
}

double config_score(const DegreeModel& model, NodeId u, NodeId v) {
    check_node(model.degrees, u);
    check_node(model.degrees, v);
    if (model.two_m == 0.0) return 0.0;
    return static_cast<double>(model.degrees[u]) *
           static_cast<double>(model.degrees[v]) / model.two_m;
}

DuplexDegreeModel build_duplex(std::span<const Edge> train_pos,
                               std::span<const Edge> train_neg,
                               std::size_t num_nodes) {
    std::unordered_set<std::uint64_t, EdgeKeyHash> pos_set;
    pos_set.reserve(train_pos.size() * 2);
    for (const Edge& e : train_pos) pos_set.insert(edge_key(make_edge(e.u, e.v)));
    for (const Edge& e : train_neg)
        if (pos_set.count(edge_key(make_edge(e.u, e.v))))
            throw std::invalid_argument(
                "duplex layers overlap on at least one pair");

    DuplexDegreeModel m;
    m.pos_degrees.assign(num_nodes, 0);
    m.neg_degrees.assign(num_nodes, 0);
    for (const Edge& e : train_pos) {
        if (e.u >= num_nodes || e.v >= num_nodes)
            throw std::invalid_argument("edge endpoint id out of range");
        ++m.pos_degrees[e.u];
        ++m.pos_degrees[e.v];
    }
    for (const Edge& e : train_neg) {
        if (e.u >= num_nodes || e.v >= num_nodes)
            throw std::invalid_argument("edge endpoint id out of range");
        ++m.neg_degrees[e.u];
        ++m.neg_degrees[e.v];
    }
    return m;
}

double duplex_config_score(const DuplexDegreeModel& model, NodeId u,
                           NodeId v) {
    check_node(model.pos_degrees, u);
    check_node(model.pos_degrees, v);
    const double pos = static_cast<double>(model.pos_degrees[u]) *
                       static_cast<double>(model.pos_degrees[v]);
    const double neg = static_cast<double>(model.neg_degrees[u]) *
                       static_cast<double>(model.neg_degrees[v]);
    if (pos == 0.0 && neg == 0.0) return 0.5;
    return pos / (pos + neg);
}

double random_edge_score(std::uint64_t seed, NodeId u, NodeId v) {
    const Edge e = make_edge(u, v);
    const std::uint64_t h = SeededRng::derive(
        seed, rng_stream::kRandomScore, e.u, e.v);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace linkpred
