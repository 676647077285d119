#include "linkpred/topo.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <thread>

#include "linkpred/rng.hpp"

namespace linkpred {

std::vector<std::size_t> triangle_counts(const Graph& graph) {
    std::vector<std::size_t> tri(graph.num_nodes(), 0);
    // For edge (u,v) with u < v, intersect adjacency lists restricted to
    // w > v so each triangle is found exactly once, at its smallest edge.
    for (const Edge& e : graph.edges()) {
        const auto nu = graph.neighbors(e.u);
        const auto nv = graph.neighbors(e.v);
        auto iu = std::upper_bound(nu.begin(), nu.end(), e.v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), e.v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) {
                ++iu;
            } else if (*iv < *iu) {
                ++iv;
            } else {
                ++tri[e.u];
                ++tri[e.v];
                ++tri[*iu];
                ++iu;
                ++iv;
            }
        }
    }
    return tri;
}

namespace {

// One Brandes accumulation pass from source s, added into `acc`.
void brandes_from_source(const Graph& g, NodeId s, std::vector<double>& acc,
                         std::vector<NodeId>& order,
                         std::vector<std::int64_t>& dist,
                         std::vector<double>& sigma,
                         std::vector<double>& delta) {
    order.clear();
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);

    dist[s] = 0;
    sigma[s] = 1.0;
    std::queue<NodeId> q;
    q.push(s);
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop();
        order.push_back(v);
        for (const NodeId w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (const NodeId v : g.neighbors(w)) {
            if (dist[v] == dist[w] - 1)
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (w != s) acc[w] += delta[w];
    }
}

}  // namespace

std::vector<double> betweenness_centrality(const Graph& graph,
                                           const TopoOptions& opts) {
    const std::size_t n = graph.num_nodes();
    std::vector<double> result(n, 0.0);
    if (n == 0) return result;
    if (opts.betweenness_source_fraction <= 0.0 ||
        opts.betweenness_source_fraction > 1.0)
        throw std::invalid_argument(
            "betweenness_source_fraction must be in (0, 1]");

    std::vector<NodeId> sources;
    double scale = 0.5;  // undirected: each pair is seen from both ends
    if (opts.betweenness_source_fraction < 1.0) {
        std::vector<NodeId> all(n);
        for (NodeId v = 0; v < n; ++v) all[v] = v;
        SeededRng rng(
            SeededRng::derive(opts.seed, rng_stream::kBetweennessSample));
        rng.shuffle(all);
        const std::size_t m = std::max<std::size_t>(
            1, static_cast<std::size_t>(opts.betweenness_source_fraction *
                                        static_cast<double>(n)));
        sources.assign(all.begin(), all.begin() + m);
        std::sort(sources.begin(), sources.end());
        scale *= static_cast<double>(n) / static_cast<double>(m);
    } else {
        sources.resize(n);
        for (NodeId v = 0; v < n; ++v) sources[v] = v;
    }

    // Fixed-size source chunks with an in-order final reduction keep the
    // floating-point sum identical for every thread count.
    constexpr std::size_t kChunk = 64;
    const std::size_t num_chunks = (sources.size() + kChunk - 1) / kChunk;
    std::vector<std::vector<double>> partial(num_chunks);

    const int threads =
        std::max(1, std::min<int>(opts.threads,
                                  static_cast<int>(num_chunks)));
    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&]() {
        std::vector<NodeId> order;
        order.reserve(n);
        std::vector<std::int64_t> dist(n);
        std::vector<double> sigma(n);
        std::vector<double> delta(n);
        for (;;) {
            const std::size_t c = next_chunk.fetch_add(1);
            if (c >= num_chunks) break;
            std::vector<double> acc(n, 0.0);
            const std::size_t lo = c * kChunk;
            const std::size_t hi = std::min(lo + kChunk, sources.size());
            for (std::size_t i = lo; i < hi; ++i)
                brandes_from_source(graph, sources[i], acc, order, dist,
                                    sigma, delta);
            partial[c] = std::move(acc);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t c = 0; c < num_chunks; ++c)
        for (std::size_t v = 0; v < n; ++v) result[v] += partial[c][v];
    for (double& x : result) x *= scale;
    return result;
}

std::vector<TopoFeatures> topo_features(const Graph& graph,
                                        const TopoOptions& opts) {
    const std::size_t n = graph.num_nodes();
    std::vector<TopoFeatures> out(n);
    const auto tri = triangle_counts(graph);
    const auto btw = betweenness_centrality(graph, opts);
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t k = graph.degree(v);
        out[v].degree = k;
        out[v].triangle_count = tri[v];
        out[v].clustering_coeff =
            k >= 2 ? 2.0 * static_cast<double>(tri[v]) /
                         (static_cast<double>(k) * static_cast<double>(k - 1))
                   : 0.0;
        out[v].betweenness = btw[v];
    }
    return out;
}

}  // namespace linkpred
