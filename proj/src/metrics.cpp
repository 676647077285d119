#include "linkpred/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "linkpred/errors.hpp"

namespace linkpred {

namespace {

void check_finite(std::span<const double> xs, const char* what) {
    for (const double x : xs)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) +
                                        " contains a non-finite score");
}

}  // namespace

double hits_at_k(const ScoredEdges& scored, std::size_t k) {
    if (scored.pos_scores.empty() || scored.neg_scores.empty())
        throw std::invalid_argument("hits_at_k needs both score lists");
    if (k == 0 || k > scored.neg_scores.size())
        throw std::invalid_argument(
            "K must be in [1, number of negatives]");
    check_finite(scored.pos_scores, "pos_scores");
    check_finite(scored.neg_scores, "neg_scores");

    std::vector<double> neg = scored.neg_scores;
    std::nth_element(neg.begin(), neg.begin() + (k - 1), neg.end(),
                     std::greater<>());
    const double threshold = neg[k - 1];
    std::size_t above = 0;
    for (const double s : scored.pos_scores)
        if (s > threshold) ++above;
    return static_cast<double>(above) /
           static_cast<double>(scored.pos_scores.size());
}

double auroc(const ScoredEdges& scored) {
    if (scored.pos_scores.empty() || scored.neg_scores.empty())
        throw std::invalid_argument("auroc needs both score lists");
    check_finite(scored.pos_scores, "pos_scores");
    check_finite(scored.neg_scores, "neg_scores");

    struct Item {
        double score;
        bool positive;
    };
    std::vector<Item> items;
    items.reserve(scored.pos_scores.size() + scored.neg_scores.size());
    for (const double s : scored.pos_scores) items.push_back({s, true});
    for (const double s : scored.neg_scores) items.push_back({s, false});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.score < b.score; });

    // Mann-Whitney U via rank sums, average rank over each tie group.
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        while (j < items.size() && items[j].score == items[i].score) ++j;
        const double avg_rank =
            0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t t = i; t < j; ++t)
            if (items[t].positive) rank_sum_pos += avg_rank;
        i = j;
    }
    const double np = static_cast<double>(scored.pos_scores.size());
    const double nn = static_cast<double>(scored.neg_scores.size());
    const double u = rank_sum_pos - np * (np + 1.0) / 2.0;
    return u / (np * nn);
}

double auprc(const ScoredEdges& scored) {
    if (scored.pos_scores.empty() || scored.neg_scores.empty())
        throw std::invalid_argument("auprc needs both score lists");
    check_finite(scored.pos_scores, "pos_scores");
    check_finite(scored.neg_scores, "neg_scores");

    struct Item {
        double score;
        bool positive;
    };
    std::vector<Item> items;
    items.reserve(scored.pos_scores.size() + scored.neg_scores.size());
    for (const double s : scored.pos_scores) items.push_back({s, true});
    for (const double s : scored.neg_scores) items.push_back({s, false});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.score > b.score; });

    const double np = static_cast<double>(scored.pos_scores.size());
    double ap = 0.0;
    std::size_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        std::size_t block_tp = 0, block_fp = 0;
        while (j < items.size() && items[j].score == items[i].score) {
            if (items[j].positive)
                ++block_tp;
            else
                ++block_fp;
            ++j;
        }
        tp += block_tp;
        fp += block_fp;
        if (block_tp > 0) {
            const double precision =
                static_cast<double>(tp) / static_cast<double>(tp + fp);
            ap += precision * static_cast<double>(block_tp) / np;
        }
        i = j;
    }
    return ap;
}

namespace {

double bin_key_value(const Graph& train_graph, const Edge& e,
                     DegreeBinKey key) {
    const double du = static_cast<double>(train_graph.degree(e.u));
    const double dv = static_cast<double>(train_graph.degree(e.v));
    switch (key) {
        case DegreeBinKey::min_endpoint: return std::min(du, dv);
        case DegreeBinKey::max_endpoint: return std::max(du, dv);
        default: return 0.5 * (du + dv);
    }
}

}  // namespace

DegreeBinTable degree_binned(const Graph& train_graph,
                             std::span<const Edge> test_pos,
                             std::span<const Edge> test_neg,
                             std::span<const double> pos_scores,
                             std::span<const double> neg_scores,
                             std::size_t k, std::size_t num_bins,
                             DegreeBinKey key) {
    if (pos_scores.size() != test_pos.size() ||
        neg_scores.size() != test_neg.size())
        throw std::invalid_argument("scores not aligned to edge lists");
    if (num_bins == 0) throw std::invalid_argument("num_bins must be >= 1");

    std::size_t max_degree = 1;
    for (NodeId v = 0; v < train_graph.num_nodes(); ++v)
        max_degree = std::max(max_degree, train_graph.degree(v));

    DegreeBinTable table;
    table.k = k;
    table.rows.resize(num_bins);
    const double top = static_cast<double>(max_degree) + 1.0;
    for (std::size_t b = 0; b < num_bins; ++b) {
        table.rows[b].lo = std::pow(top, static_cast<double>(b) /
                                             static_cast<double>(num_bins));
        table.rows[b].hi = std::pow(
            top, static_cast<double>(b + 1) / static_cast<double>(num_bins));
    }

    auto bin_of = [&](double value) -> std::size_t {
        if (value < table.rows.front().lo) return 0;  // degree-0 endpoints
        for (std::size_t b = 0; b + 1 < num_bins; ++b)
            if (value < table.rows[b].hi) return b;
        return num_bins - 1;
    };

    std::vector<ScoredEdges> per_bin(num_bins);
    for (std::size_t i = 0; i < test_pos.size(); ++i) {
        const std::size_t b = bin_of(bin_key_value(train_graph, test_pos[i], key));
        per_bin[b].pos_scores.push_back(pos_scores[i]);
        ++table.rows[b].count;
    }
    for (std::size_t i = 0; i < test_neg.size(); ++i) {
        const std::size_t b = bin_of(bin_key_value(train_graph, test_neg[i], key));
        per_bin[b].neg_scores.push_back(neg_scores[i]);
        ++table.rows[b].neg_count;
    }

    for (std::size_t b = 0; b < num_bins; ++b) {
        auto& row = table.rows[b];
        const auto& scored = per_bin[b];
        if (!scored.pos_scores.empty() && scored.neg_scores.size() >= k)
            row.hits = hits_at_k(scored, k);
        if (!scored.pos_scores.empty() && !scored.neg_scores.empty())
            row.auroc = auroc(scored);
    }
    return table;
}

void write_degree_table_csv(const DegreeBinTable& table,
                            const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    out << "bin_lo,bin_hi,count,hits_at_k,auroc\n";
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    for (const auto& row : table.rows) {
        out << fmt(row.lo) << ',' << fmt(row.hi) << ',' << row.count << ',';
        if (row.hits) out << fmt(*row.hits);
        out << ',';
        if (row.auroc) out << fmt(*row.auroc);
        out << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

SubgaussianFit fit_subgaussian(std::span<const double> trace,
                               double tail_start_fraction) {
    if (trace.size() < 8)
        throw std::invalid_argument(
            "subgaussian fit needs at least 8 epochs");
    if (tail_start_fraction < 0.0 || tail_start_fraction >= 1.0)
        throw std::invalid_argument("tail_start_fraction must be in [0, 1)");
    for (const double l : trace)
        if (!(l > 0.0) || !std::isfinite(l))
            throw std::invalid_argument(
                "trace losses must be positive and finite");

    // Linear regression of y = log L on t = x^2.
    const std::size_t n = trace.size();
    double mean_t = 0.0, mean_y = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        mean_t += static_cast<double>(x) * static_cast<double>(x);
        mean_y += std::log(trace[x]);
    }
    mean_t /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double cov = 0.0, var = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        const double dt =
            static_cast<double>(x) * static_cast<double>(x) - mean_t;
        cov += dt * (std::log(trace[x]) - mean_y);
        var += dt * dt;
    }
    const double slope = cov / var;

    SubgaussianFit fit;
    fit.sigma = std::max(0.0, -slope);
    fit.A = std::exp(mean_y + fit.sigma * mean_t);

    const std::size_t start = static_cast<std::size_t>(
        std::ceil(tail_start_fraction * static_cast<double>(n)));
    std::size_t dominated = 0, total = 0;
    for (std::size_t x = start; x < n; ++x) {
        ++total;
        const double envelope =
            fit.A *
            std::exp(-fit.sigma * static_cast<double>(x) *
                     static_cast<double>(x)) *
            (1.0 + 1e-6);
        if (trace[x] <= envelope) ++dominated;
    }
    fit.dominance_fraction =
        total == 0 ? 0.0
                   : static_cast<double>(dominated) / static_cast<double>(total);
    return fit;
}

}  // namespace linkpred
