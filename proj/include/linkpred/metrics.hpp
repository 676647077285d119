#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

struct ScoredEdges {
    std::vector<double> pos_scores;
    std::vector<double> neg_scores;
};

// Fraction of positive scores strictly greater than the K-th largest
// negative score (ties lose). Throws when K exceeds the negative count.
double hits_at_k(const ScoredEdges& scored, std::size_t k);

// Probability that a random positive outscores a random negative, ties
// counting one half (rank-statistic formulation).
double auroc(const ScoredEdges& scored);

// Average precision over positives in descending score order; tied scores
// are processed as one block.
double auprc(const ScoredEdges& scored);

enum class DegreeBinKey { min_endpoint, max_endpoint, mean_endpoint };

struct DegreeBinRow {
    double lo = 0.0;  // inclusive
    double hi = 0.0;  // exclusive
    std::size_t count = 0;      // positive test edges in the bin
    std::size_t neg_count = 0;  // negatives assigned to the bin
    std::optional<double> hits;   // absent when neg_count < K
    std::optional<double> auroc;  // absent unless both sides are nonempty
};

struct DegreeBinTable {
    std::size_t k = 0;
    std::vector<DegreeBinRow> rows;
};

// Buckets test pairs by an endpoint-degree key taken from the train graph
// (default: minimum endpoint degree; degree 0 lands in the lowest bin).
// Bin edges are logarithmically spaced over [1, max_degree]. Per-bin Hits@K
// and AUROC are computed against the negatives that fall in the same bin;
// bins without enough material report null metrics rather than vanish.
DegreeBinTable degree_binned(const Graph& train_graph,
                             std::span<const Edge> test_pos,
                             std::span<const Edge> test_neg,
                             std::span<const double> pos_scores,
                             std::span<const double> neg_scores,
                             std::size_t k, std::size_t num_bins,
                             DegreeBinKey key = DegreeBinKey::min_endpoint);

void write_degree_table_csv(const DegreeBinTable& table,
                            const std::filesystem::path& path);

// Least-squares fit of log L_x = log A - sigma * x^2 over the whole trace
// (x = 0-based epoch index), plus the fraction of tail epochs actually
// dominated by the fitted curve. sigma is clamped at 0 for non-decaying
// traces.
struct SubgaussianFit {
    double A = 0.0;
    double sigma = 0.0;
    double dominance_fraction = 0.0;
};

SubgaussianFit fit_subgaussian(std::span<const double> trace,
                               double tail_start_fraction = 0.25);

}  // namespace linkpred
