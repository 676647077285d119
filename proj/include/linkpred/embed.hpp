#pragma once

#include <cstdint>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

// Second-order biased walk + skip-gram parameters. Defaults follow the
// common settings of the original method; everything is overridable.
struct Node2VecParams {
    std::size_t dim = 128;
    std::size_t walks_per_node = 10;
    std::size_t walk_length = 80;  // nodes per walk, start included
    std::size_t window = 10;
    double p = 1.0;  // return weight is 1/p
    double q = 1.0;  // outward weight is 1/q
    std::size_t negatives_per_target = 5;
    std::size_t epochs = 1;
    double learning_rate = 0.025;  // linearly decayed over training
    std::uint64_t seed = 0;
    // 1 trains single-threaded and bitwise reproducibly. More workers run
    // lock-free on shared parameters, which is faster but not
    // deterministic.
    int workers = 1;
    // Records mean corpus loss before training and after each epoch
    // (costs roughly one extra pass per epoch).
    bool track_loss = false;
};

struct WalkCorpus {
    std::vector<std::vector<NodeId>> walks;
};

// walks_per_node walks from every non-isolated node. Step weights given
// previous node t and candidate z: 1/p when z == t, 1 when z neighbors t,
// 1/q otherwise. Each walk has its own derived seed, so generation can be
// parallelized without changing the output.
WalkCorpus biased_walks(const Graph& graph, const Node2VecParams& params);

struct SkipgramResult {
    AttributeMatrix embedding;  // input vectors, one row per node
    // Mean corpus loss; entry 0 is before training, entry e is after epoch
    // e. Empty unless params.track_loss.
    std::vector<double> epoch_loss;
};

// Skip-gram with negative sampling over the walk corpus. Negatives follow
// the unigram distribution over walk occurrences raised to 0.75. Nodes
// absent from the corpus keep their seeded random initialization.
SkipgramResult skipgram_embed(const WalkCorpus& corpus,
                              const Node2VecParams& params,
                              std::size_t num_nodes);

// biased_walks + skipgram_embed.
AttributeMatrix node2vec_embedding(const Graph& graph,
                                   const Node2VecParams& params);

// Rows permuted by a seeded uniform permutation; the multiset of rows is
// unchanged, only the node alignment is destroyed.
AttributeMatrix shuffle_attributes(const AttributeMatrix& attrs,
                                   std::uint64_t seed);

// I.i.d. uniform entries on [0, 1).
AttributeMatrix random_attributes(std::size_t num_nodes, std::size_t dim,
                                  std::uint64_t seed);

}  // namespace linkpred
