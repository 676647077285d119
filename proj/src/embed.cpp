#include "linkpred/embed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "linkpred/rng.hpp"

namespace linkpred {

namespace {

void validate(const Node2VecParams& p) {
    if (p.dim == 0 || p.walks_per_node == 0 || p.walk_length == 0 ||
        p.window == 0)
        throw std::invalid_argument("node2vec counts must be positive");
    if (!(p.p > 0.0) || !(p.q > 0.0) || !(p.learning_rate > 0.0))
        throw std::invalid_argument("p, q and learning_rate must be positive");
    if (p.workers < 1)
        throw std::invalid_argument("workers must be >= 1");
}

// One biased walk from `start`, seeded independently of every other walk.
std::vector<NodeId> one_walk(const Graph& g, NodeId start,
                             const Node2VecParams& params, SeededRng& rng) {
    std::vector<NodeId> walk;
    walk.reserve(params.walk_length);
    walk.push_back(start);
    NodeId cur = start;
    bool have_prev = false;
    NodeId prev = start;
    std::vector<double> weights;
    while (walk.size() < params.walk_length) {
        const auto nbrs = g.neighbors(cur);
        if (nbrs.empty()) break;
        NodeId next;
        if (!have_prev) {
            next = nbrs[rng.below(nbrs.size())];
        } else {
            weights.resize(nbrs.size());
            double total = 0.0;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const NodeId z = nbrs[i];
                double w;
                if (z == prev)
                    w = 1.0 / params.p;
                else if (g.has_edge(z, prev))
                    w = 1.0;
                else
                    w = 1.0 / params.q;
                weights[i] = w;
                total += w;
            }
            const double r = rng.real01() * total;
            double acc = 0.0;
            std::size_t pick = nbrs.size() - 1;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                acc += weights[i];
                if (r < acc) {
                    pick = i;
                    break;
                }
            }
            next = nbrs[pick];
        }
        walk.push_back(next);
        prev = cur;
        cur = next;
        have_prev = true;
    }
    return walk;
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

// Cumulative unigram^0.75 table over corpus occurrences; sampling is a
// binary search over the prefix sums.
struct NegativeTable {
    std::vector<NodeId> nodes;
    std::vector<double> cumulative;

    static NegativeTable build(const WalkCorpus& corpus,
                               std::size_t num_nodes) {
        std::vector<std::size_t> occ(num_nodes, 0);
        for (const auto& walk : corpus.walks)
            for (const NodeId v : walk) ++occ[v];
        NegativeTable t;
        double acc = 0.0;
        for (NodeId v = 0; v < num_nodes; ++v) {
            if (occ[v] == 0) continue;
            acc += std::pow(static_cast<double>(occ[v]), 0.75);
            t.nodes.push_back(v);
            t.cumulative.push_back(acc);
        }
        return t;
    }

    NodeId draw(SeededRng& rng) const {
        const double r = rng.real01() * cumulative.back();
        const auto it =
            std::upper_bound(cumulative.begin(), cumulative.end(), r);
        const std::size_t i = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()),
            nodes.size() - 1);
        return nodes[i];
    }
};

// Mean SGNS loss over all (center, context) pairs with the full window and
// freshly derived (hence repeatable) negative draws.
double corpus_loss(const WalkCorpus& corpus, const Matrix& in,
                   const Matrix& out, const NegativeTable& table,
                   const Node2VecParams& params) {
    SeededRng rng(SeededRng::derive(params.seed, rng_stream::kSgnsEval));
    const std::size_t dim = in.cols;
    double loss = 0.0;
    std::size_t pairs = 0;
    for (const auto& walk : corpus.walks) {
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const NodeId c = walk[i];
            const std::size_t lo = i >= params.window ? i - params.window : 0;
            const std::size_t hi =
                std::min(walk.size() - 1, i + params.window);
            for (std::size_t j = lo; j <= hi; ++j) {
                if (j == i) continue;
                const NodeId o = walk[j];
                const double s =
                    dot(in.row(c).data(), out.row(o).data(), dim);
                loss -= std::log(std::max(sigmoid(s), 1e-12));
                for (std::size_t m = 0; m < params.negatives_per_target;
                     ++m) {
                    const NodeId neg = table.draw(rng);
                    const double sn =
                        dot(in.row(c).data(), out.row(neg).data(), dim);
                    loss -= std::log(std::max(sigmoid(-sn), 1e-12));
                }
                ++pairs;
            }
        }
    }
    return pairs == 0 ? 0.0 : loss / static_cast<double>(pairs);
}

}  // namespace

WalkCorpus biased_walks(const Graph& graph, const Node2VecParams& params) {
    validate(params);
    if (graph.num_nodes() == 0)
        throw std::invalid_argument("graph is empty");

    std::vector<NodeId> starts;
    for (NodeId v = 0; v < graph.num_nodes(); ++v)
        if (graph.degree(v) > 0) starts.push_back(v);

    WalkCorpus corpus;
    corpus.walks.resize(starts.size() * params.walks_per_node);
    const int workers = std::max(1, params.workers);
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= corpus.walks.size()) break;
            const NodeId start = starts[slot / params.walks_per_node];
            const std::size_t rep = slot % params.walks_per_node;
            SeededRng rng(SeededRng::derive(params.seed, rng_stream::kWalk,
                                            start, rep));
            corpus.walks[slot] = one_walk(graph, start, params, rng);
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return corpus;
}

SkipgramResult skipgram_embed(const WalkCorpus& corpus,
                              const Node2VecParams& params,
                              std::size_t num_nodes) {
    validate(params);
    if (corpus.walks.empty())
        throw std::invalid_argument("walk corpus is empty");
    for (const auto& walk : corpus.walks)
        for (const NodeId v : walk)
            if (v >= num_nodes)
                throw std::invalid_argument("walk node id out of range");

    const std::size_t dim = params.dim;
    SkipgramResult result;
    result.embedding = Matrix(num_nodes, dim);
    Matrix out(num_nodes, dim, 0.0);
    {
        SeededRng init(SeededRng::derive(params.seed, rng_stream::kSgnsInit));
        for (double& x : result.embedding.data)
            x = (init.real01() - 0.5) / static_cast<double>(dim);
    }

    const NegativeTable table = NegativeTable::build(corpus, num_nodes);
    if (params.track_loss)
        result.epoch_loss.push_back(
            corpus_loss(corpus, result.embedding, out, table, params));
    if (params.epochs == 0) return result;

    std::size_t total_tokens = 0;
    for (const auto& walk : corpus.walks) total_tokens += walk.size();
    const double schedule =
        static_cast<double>(total_tokens) *
        static_cast<double>(params.epochs);

    std::atomic<std::size_t> tokens_done{0};
    Matrix& in = result.embedding;

    auto train_range = [&](std::size_t walk_lo, std::size_t walk_hi,
                           std::uint64_t stream) {
        SeededRng rng(stream);
        std::vector<double> grad(dim);
        for (std::size_t wi = walk_lo; wi < walk_hi; ++wi) {
            const auto& walk = corpus.walks[wi];
            for (std::size_t i = 0; i < walk.size(); ++i) {
                const std::size_t done =
                    tokens_done.fetch_add(1, std::memory_order_relaxed);
                const double progress =
                    static_cast<double>(done) / schedule;
                const double lr = params.learning_rate *
                                  std::max(1.0 - progress, 1e-4);
                const NodeId c = walk[i];
                // Shrunk window, as in the standard skip-gram sampler.
                const std::size_t b =
                    1 + static_cast<std::size_t>(rng.below(params.window));
                const std::size_t lo = i >= b ? i - b : 0;
                const std::size_t hi = std::min(walk.size() - 1, i + b);
                double* center = in.row(c).data();
                for (std::size_t j = lo; j <= hi; ++j) {
                    if (j == i) continue;
                    const NodeId o = walk[j];
                    std::fill(grad.begin(), grad.end(), 0.0);
                    for (std::size_t m = 0;
                         m <= params.negatives_per_target; ++m) {
                        NodeId target;
                        double label;
                        if (m == 0) {
                            target = o;
                            label = 1.0;
                        } else {
                            target = table.draw(rng);
                            if (target == o) continue;
                            label = 0.0;
                        }
                        double* ctx = out.row(target).data();
                        const double g =
                            (label - sigmoid(dot(center, ctx, dim))) * lr;
                        for (std::size_t d = 0; d < dim; ++d) {
                            grad[d] += g * ctx[d];
                            ctx[d] += g * center[d];
                        }
                    }
                    for (std::size_t d = 0; d < dim; ++d)
                        center[d] += grad[d];
                }
            }
        }
    };

    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        const int workers = std::max(1, params.workers);
        if (workers == 1) {
            train_range(0, corpus.walks.size(),
                        SeededRng::derive(params.seed,
                                          rng_stream::kSgnsTrain, epoch));
        } else {
            std::vector<std::thread> pool;
            const std::size_t per =
                (corpus.walks.size() + workers - 1) / workers;
            for (int t = 0; t < workers; ++t) {
                const std::size_t lo = static_cast<std::size_t>(t) * per;
                const std::size_t hi =
                    std::min(corpus.walks.size(), lo + per);
                if (lo >= hi) break;
                pool.emplace_back(train_range, lo, hi,
                                  SeededRng::derive(params.seed,
                                                    rng_stream::kSgnsTrain,
                                                    epoch, t + 1));
            }
            for (auto& t : pool) t.join();
        }
        if (params.track_loss)
            result.epoch_loss.push_back(
                corpus_loss(corpus, in, out, table, params));
    }
    return result;
}

AttributeMatrix node2vec_embedding(const Graph& graph,
                                   const Node2VecParams& params) {
    const WalkCorpus corpus = biased_walks(graph, params);
    if (corpus.walks.empty()) {
        // All nodes isolated: everyone keeps the seeded initialization.
        SeededRng init(SeededRng::derive(params.seed, rng_stream::kSgnsInit));
        Matrix m(graph.num_nodes(), params.dim);
        for (double& x : m.data)
            x = (init.real01() - 0.5) / static_cast<double>(params.dim);
        return m;
    }
    return skipgram_embed(corpus, params, graph.num_nodes()).embedding;
}

AttributeMatrix shuffle_attributes(const AttributeMatrix& attrs,
                                   std::uint64_t seed) {
    if (attrs.rows == 0)
        throw std::invalid_argument("cannot shuffle an empty matrix");
    std::vector<std::size_t> perm(attrs.rows);
    for (std::size_t i = 0; i < attrs.rows; ++i) perm[i] = i;
    SeededRng rng(SeededRng::derive(seed, rng_stream::kShuffleRows));
    rng.shuffle(perm);
    AttributeMatrix out(attrs.rows, attrs.cols);
    for (std::size_t i = 0; i < attrs.rows; ++i)
        std::copy_n(attrs.row(perm[i]).begin(), attrs.cols,
                    out.row(i).begin());
    return out;
}

AttributeMatrix random_attributes(std::size_t num_nodes, std::size_t dim,
                                  std::uint64_t seed) {
    if (num_nodes == 0 || dim == 0)
        throw std::invalid_argument("counts must be positive");
    AttributeMatrix out(num_nodes, dim);
    SeededRng rng(SeededRng::derive(seed, rng_stream::kRandomAttrs));
    for (double& x : out.data) x = rng.real01();
    return out;
}

}  // namespace linkpred
