#include "linkpred/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "linkpred/rng.hpp"

namespace linkpred {

void validate_ratios(const Ratios& r) {
    if (!(r.train > 0.0) || !(r.valid > 0.0) || !(r.test > 0.0))
        throw std::invalid_argument("split ratios must all be positive");
    const double sum = r.train + r.valid + r.test;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("split ratios must sum to 1");
}

std::array<std::size_t, 3> largest_remainder_counts(std::size_t n,
                                                    const Ratios& r) {
    validate_ratios(r);
    const std::array<double, 3> f = {r.train * static_cast<double>(n),
                                     r.valid * static_cast<double>(n),
                                     r.test * static_cast<double>(n)};
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> rem{};
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        counts[i] = static_cast<std::size_t>(std::floor(f[i]));
        rem[i] = f[i] - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    std::array<int, 3> idx = {0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return rem[a] > rem[b]; });
    for (std::size_t left = n - assigned, i = 0; left > 0; --left, ++i)
        ++counts[idx[i % 3]];
    return counts;
}

EdgeSplit random_edge_split(const Graph& graph, const Ratios& ratios,
                            std::uint64_t seed) {
    validate_ratios(ratios);
    if (graph.num_edges() < 3)
        throw std::invalid_argument(
            "random_edge_split needs at least 3 edges");

    std::vector<Edge> edges = graph.edges();
    SeededRng rng(SeededRng::derive(seed, rng_stream::kEdgeShuffle));
    rng.shuffle(edges);

    const auto counts = largest_remainder_counts(edges.size(), ratios);
    EdgeSplit split;
    auto it = edges.begin();
    split.train_edges.assign(it, it + counts[0]);
    it += counts[0];
    split.valid_pos.assign(it, it + counts[1]);
    it += counts[1];
    split.test_pos.assign(it, it + counts[2]);

    const std::size_t need = counts[1] + counts[2];
    const auto negs = sample_negatives(
        graph, need, SeededRng::derive(seed, rng_stream::kNegSample));
    split.valid_neg.assign(negs.begin(), negs.begin() + counts[1]);
    split.test_neg.assign(negs.begin() + counts[1], negs.end());
    return split;
}

InductiveSplit random_node_split(const Graph& graph, const Ratios& ratios,
                                 std::uint64_t seed) {
    validate_ratios(ratios);
    const std::size_t n = graph.num_nodes();
    if (n < 3)
        throw std::invalid_argument(
            "random_node_split needs at least 3 nodes");

    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    SeededRng rng(SeededRng::derive(seed, rng_stream::kNodeShuffle));
    rng.shuffle(nodes);

    const auto counts = largest_remainder_counts(n, ratios);
    InductiveSplit split;
    // group of each node: 0 train, 1 valid, 2 test
    std::vector<std::uint8_t> group(n);
    std::size_t pos = 0;
    for (int g = 0; g < 3; ++g) {
        auto& dst = g == 0   ? split.train_nodes
                    : g == 1 ? split.valid_nodes
                             : split.test_nodes;
        dst.assign(nodes.begin() + pos, nodes.begin() + pos + counts[g]);
        std::sort(dst.begin(), dst.end());
        for (const NodeId v : dst) group[v] = static_cast<std::uint8_t>(g);
        pos += counts[g];
    }

    std::array<std::vector<Edge>, 3> intra;
    for (const Edge& e : graph.edges()) {
        if (group[e.u] == group[e.v])
            intra[group[e.u]].push_back(e);
        else
            ++split.lost_edges;
    }
    std::vector<std::string> keys = graph.keys();
    split.train_graph = Graph::from_edges(n, std::move(intra[0]), keys);
    split.valid_graph = Graph::from_edges(n, std::move(intra[1]), keys);
    split.test_graph = Graph::from_edges(n, std::move(intra[2]),
                                         std::move(keys));
    return split;
}

TemporalSplit temporal_split(const TemporalGraphSequence& seq, std::size_t j,
                             bool new_node_incident_only) {
    if (seq.size() < 2 || j + 1 >= seq.size())
        throw std::out_of_range("snapshot index out of range");

    TemporalSplit split;
    split.base_index = j;
    split.observed_nodes = seq.present_nodes(j);
    const auto next_nodes = seq.present_nodes(j + 1);
    std::set_difference(next_nodes.begin(), next_nodes.end(),
                        split.observed_nodes.begin(),
                        split.observed_nodes.end(),
                        std::back_inserter(split.new_nodes));

    const auto& base_edges = seq.snapshots[j].graph.edges();
    const auto& next_edges = seq.snapshots[j + 1].graph.edges();
    std::vector<Edge> fresh;
    std::set_difference(next_edges.begin(), next_edges.end(),
                        base_edges.begin(), base_edges.end(),
                        std::back_inserter(fresh));

    if (new_node_incident_only) {
        std::vector<std::uint8_t> is_new(seq.snapshots[j].graph.num_nodes(),
                                         0);
        for (const NodeId v : split.new_nodes) is_new[v] = 1;
        for (const Edge& e : fresh)
            if (is_new[e.u] || is_new[e.v]) split.new_edges.push_back(e);
    } else {
        split.new_edges = std::move(fresh);
    }
    return split;
}

namespace {

std::vector<NodeId> sorted_unique(std::vector<NodeId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Candidate pairs split into categories that can each be sampled uniformly:
//   0: one endpoint in A-only, one in B-only
//   1: one endpoint in A-only, one in the intersection
//   2: one endpoint in the intersection, one in B-only
//   3: two distinct endpoints in the intersection
struct PairUniverse {
    std::vector<NodeId> a_only, b_only, both;
    std::array<std::uint64_t, 4> weight{};
    std::uint64_t total = 0;

    static std::uint64_t n_choose_2(std::uint64_t n) {
        return n * (n - 1) / 2;
    }

    static PairUniverse build(const Graph& g,
                              const std::optional<EndpointConstraint>& c) {
        PairUniverse u;
        std::vector<NodeId> a, b;
        if (c) {
            a = sorted_unique(c->a);
            b = sorted_unique(c->b);
            for (const NodeId v : a)
                if (v >= g.num_nodes())
                    throw std::invalid_argument(
                        "constraint node id out of range");
            for (const NodeId v : b)
                if (v >= g.num_nodes())
                    throw std::invalid_argument(
                        "constraint node id out of range");
        } else {
            a.resize(g.num_nodes());
            std::iota(a.begin(), a.end(), 0);
            b = a;
        }
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(u.a_only));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                            std::back_inserter(u.b_only));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(u.both));
        u.weight[0] = static_cast<std::uint64_t>(u.a_only.size()) *
                      u.b_only.size();
        u.weight[1] = static_cast<std::uint64_t>(u.a_only.size()) *
                      u.both.size();
        u.weight[2] = static_cast<std::uint64_t>(u.both.size()) *
                      u.b_only.size();
        u.weight[3] = n_choose_2(u.both.size());
        u.total = u.weight[0] + u.weight[1] + u.weight[2] + u.weight[3];
        return u;
    }

    bool admits(NodeId x, NodeId y, const std::vector<std::uint8_t>& inA,
                const std::vector<std::uint8_t>& inB) const {
        return (inA[x] && inB[y]) || (inA[y] && inB[x]);
    }

    Edge draw(SeededRng& rng) const {
        std::uint64_t r = rng.below(total);
        int cat = 0;
        while (r >= weight[cat]) {
            r -= weight[cat];
            ++cat;
        }
        switch (cat) {
            case 0:
                return make_edge(a_only[rng.below(a_only.size())],
                                 b_only[rng.below(b_only.size())]);
            case 1:
                return make_edge(a_only[rng.below(a_only.size())],
                                 both[rng.below(both.size())]);
            case 2:
                return make_edge(both[rng.below(both.size())],
                                 b_only[rng.below(b_only.size())]);
            default: {
                const std::size_t i = rng.below(both.size());
                std::size_t j = rng.below(both.size() - 1);
                if (j >= i) ++j;
                return make_edge(both[i], both[j]);
            }
        }
    }
};

}  // namespace

std::size_t count_non_edges(
    const Graph& graph, const std::optional<EndpointConstraint>& constraint) {
    const PairUniverse u = PairUniverse::build(graph, constraint);
    std::vector<std::uint8_t> inA(graph.num_nodes(), 0),
        inB(graph.num_nodes(), 0);
    for (const NodeId v : u.a_only) inA[v] = 1;
    for (const NodeId v : u.b_only) inB[v] = 1;
    for (const NodeId v : u.both) inA[v] = inB[v] = 1;
    std::uint64_t cross = 0;
    for (const Edge& e : graph.edges())
        if (u.admits(e.u, e.v, inA, inB)) ++cross;
    return static_cast<std::size_t>(u.total - cross);
}

std::vector<Edge> sample_negatives(
    const Graph& graph, std::size_t count, std::uint64_t seed,
    const std::optional<EndpointConstraint>& constraint) {
    std::vector<Edge> out;
    if (count == 0) return out;

    const PairUniverse u = PairUniverse::build(graph, constraint);
    std::vector<std::uint8_t> inA(graph.num_nodes(), 0),
        inB(graph.num_nodes(), 0);
    for (const NodeId v : u.a_only) inA[v] = 1;
    for (const NodeId v : u.b_only) inB[v] = 1;
    for (const NodeId v : u.both) inA[v] = inB[v] = 1;

    std::uint64_t cross = 0;
    for (const Edge& e : graph.edges())
        if (u.admits(e.u, e.v, inA, inB)) ++cross;
    const std::uint64_t available = u.total - cross;
    if (count > available)
        throw std::invalid_argument(
            "requested " + std::to_string(count) +
            " negative pairs but only " + std::to_string(available) +
            " non-edges exist under the constraint");

    SeededRng rng(seed);

    // Rejection sampling stalls when most candidate pairs are edges or
    // once most non-edges are already drawn; enumerate in those regimes.
    const bool dense = available * 2 < u.total || count * 2 > available;
    if (!dense) {
        std::unordered_set<std::uint64_t, EdgeKeyHash> taken;
        taken.reserve(count * 2);
        while (out.size() < count) {
            const Edge e = u.draw(rng);
            if (graph.has_edge(e.u, e.v)) continue;
            if (!taken.insert(edge_key(e)).second) continue;
            out.push_back(e);
        }
        return out;
    }

    // Explicit enumeration of every candidate non-edge, then a partial
    // Fisher-Yates to draw without replacement.
    std::vector<Edge> pool;
    pool.reserve(static_cast<std::size_t>(available));
    std::vector<NodeId> universe;
    universe.reserve(u.a_only.size() + u.b_only.size() + u.both.size());
    universe.insert(universe.end(), u.a_only.begin(), u.a_only.end());
    universe.insert(universe.end(), u.b_only.begin(), u.b_only.end());
    universe.insert(universe.end(), u.both.begin(), u.both.end());
    std::sort(universe.begin(), universe.end());
    for (std::size_t i = 0; i < universe.size(); ++i) {
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            const NodeId x = universe[i], y = universe[j];
            if (!u.admits(x, y, inA, inB)) continue;
            if (graph.has_edge(x, y)) continue;
            pool.push_back(make_edge(x, y));
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

}  // namespace linkpred
