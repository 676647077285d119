#include "linkpred/cluster_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace linkpred {

double davies_bouldin(const Matrix& points, const Clustering& clustering) {
    if (clustering.labels.size() != points.rows)
        throw std::invalid_argument("clustering not aligned to points");

    std::vector<std::size_t> sizes(clustering.k, 0);
    std::vector<double> spread(clustering.k, 0.0);
    for (std::size_t i = 0; i < points.rows; ++i) {
        const auto c = static_cast<std::size_t>(clustering.labels[i]);
        ++sizes[c];
        spread[c] += euclidean_distance(points.row(i),
                                        clustering.centroids.row(c));
    }
    std::vector<std::size_t> nonempty;
    for (std::size_t c = 0; c < clustering.k; ++c) {
        if (sizes[c] == 0) continue;
        spread[c] /= static_cast<double>(sizes[c]);
        nonempty.push_back(c);
    }
    if (nonempty.size() < 2)
        throw std::invalid_argument(
            "davies_bouldin needs at least 2 nonempty clusters");

    double total = 0.0;
    for (const std::size_t i : nonempty) {
        double worst = 0.0;
        for (const std::size_t j : nonempty) {
            if (i == j) continue;
            const double d = euclidean_distance(clustering.centroids.row(i),
                                                clustering.centroids.row(j));
            if (d == 0.0)
                throw std::invalid_argument(
                    "coincident centroids for clusters " +
                    std::to_string(i) + " and " + std::to_string(j));
            worst = std::max(worst, (spread[i] + spread[j]) / d);
        }
        total += worst;
    }
    return total / static_cast<double>(nonempty.size());
}

namespace {

// Contingency table with dense-remapped labels (first-occurrence order).
struct Contingency {
    std::size_t n = 0;
    std::vector<std::size_t> row_sums;  // a_i
    std::vector<std::size_t> col_sums;  // b_j
    // nonzero cells as (row, col, count), sorted by (row, col)
    struct Cell {
        std::size_t r, c, count;
    };
    std::vector<Cell> cells;
};

std::vector<std::size_t> dense_remap(std::span<const int> labels,
                                     std::size_t& num_classes) {
    std::unordered_map<int, std::size_t> ids;
    std::vector<std::size_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto [it, inserted] = ids.emplace(labels[i], ids.size());
        out[i] = it->second;
    }
    num_classes = ids.size();
    return out;
}

Contingency build_contingency(std::span<const int> labels_u,
                              std::span<const int> labels_v) {
    if (labels_u.size() != labels_v.size())
        throw std::invalid_argument("labelings must have equal length");
    if (labels_u.empty())
        throw std::invalid_argument("labelings must be nonempty");

    Contingency t;
    t.n = labels_u.size();
    std::size_t nr = 0, nc = 0;
    const auto ru = dense_remap(labels_u, nr);
    const auto rv = dense_remap(labels_v, nc);
    t.row_sums.assign(nr, 0);
    t.col_sums.assign(nc, 0);

    std::vector<std::uint64_t> pairs(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
        ++t.row_sums[ru[i]];
        ++t.col_sums[rv[i]];
        pairs[i] = (static_cast<std::uint64_t>(ru[i]) << 32) | rv[i];
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < t.n;) {
        std::size_t j = i;
        while (j < t.n && pairs[j] == pairs[i]) ++j;
        t.cells.push_back({static_cast<std::size_t>(pairs[i] >> 32),
                           static_cast<std::size_t>(pairs[i] & 0xffffffffu),
                           j - i});
        i = j;
    }
    return t;
}

double mi_from_contingency(const Contingency& t) {
    const double n = static_cast<double>(t.n);
    double mi = 0.0;
    for (const auto& cell : t.cells) {
        const double nij = static_cast<double>(cell.count);
        const double a = static_cast<double>(t.row_sums[cell.r]);
        const double b = static_cast<double>(t.col_sums[cell.c]);
        mi += nij / n * std::log(n * nij / (a * b));
    }
    return mi;
}

double entropy_of(const std::vector<std::size_t>& sums, std::size_t n) {
    double h = 0.0;
    for (const std::size_t s : sums) {
        if (s == 0) continue;
        const double p = static_cast<double>(s) / static_cast<double>(n);
        h -= p * std::log(p);
    }
    return h;
}

// One nonzero per row and per column means the partitions are identical up
// to relabeling.
bool is_relabeling(const Contingency& t) {
    if (t.row_sums.size() != t.col_sums.size()) return false;
    if (t.cells.size() != t.row_sums.size()) return false;
    std::vector<std::uint8_t> row_hit(t.row_sums.size(), 0),
        col_hit(t.col_sums.size(), 0);
    for (const auto& cell : t.cells) {
        if (row_hit[cell.r] || col_hit[cell.c]) return false;
        row_hit[cell.r] = col_hit[cell.c] = 1;
    }
    return true;
}

double emi_from_contingency(const Contingency& t) {
    const std::size_t n = t.n;
    // log-factorial table by running sum; deterministic and accurate enough
    // that the exponent error stays ~1e-9 even at N ~ 1e5.
    std::vector<double> lf(n + 1, 0.0);
    for (std::size_t i = 2; i <= n; ++i)
        lf[i] = lf[i - 1] + std::log(static_cast<double>(i));

    const double log_n = std::log(static_cast<double>(n));
    double emi = 0.0;
    for (const std::size_t a : t.row_sums) {
        for (const std::size_t b : t.col_sums) {
            const std::size_t lo = a + b > n ? a + b - n : 1;
            const std::size_t hi = std::min(a, b);
            if (lo > hi) continue;
            const double base =
                lf[a] + lf[b] + lf[n - a] + lf[n - b] - lf[n];
            auto log_weight = [&](std::size_t nij) {
                return base - lf[nij] - lf[a - nij] - lf[b - nij] -
                       lf[n - a - b + nij];
            };
            // Hypergeometric mode; weights below 1e-16 of the peak are
            // dropped without evaluating exp().
            std::size_t mode = static_cast<std::size_t>(
                (static_cast<double>(a + 1) * static_cast<double>(b + 1)) /
                static_cast<double>(n + 2));
            mode = std::clamp(mode, lo, hi);
            const double peak = log_weight(mode);
            const double cutoff = peak + std::log(1e-16);
            const double log_ab = std::log(static_cast<double>(a)) +
                                  std::log(static_cast<double>(b));
            for (std::size_t nij = lo; nij <= hi; ++nij) {
                const double lw = log_weight(nij);
                if (lw < cutoff) continue;
                const double term = static_cast<double>(nij) /
                                    static_cast<double>(n) *
                                    (log_n +
                                     std::log(static_cast<double>(nij)) -
                                     log_ab);
                emi += std::exp(lw) * term;
            }
        }
    }
    return emi;
}

}  // namespace

double mutual_information(std::span<const int> labels_u,
                          std::span<const int> labels_v) {
    return mi_from_contingency(build_contingency(labels_u, labels_v));
}

double label_entropy(std::span<const int> labels) {
    std::size_t classes = 0;
    const auto remapped = dense_remap(labels, classes);
    std::vector<std::size_t> sums(classes, 0);
    for (const std::size_t r : remapped) ++sums[r];
    return entropy_of(sums, labels.size());
}

double expected_mutual_information(std::span<const int> labels_u,
                                   std::span<const int> labels_v) {
    return emi_from_contingency(build_contingency(labels_u, labels_v));
}

double adjusted_mutual_information(std::span<const int> labels_u,
                                   std::span<const int> labels_v,
                                   AmiAverage average) {
    const Contingency t = build_contingency(labels_u, labels_v);
    if (is_relabeling(t)) return 1.0;

    const double mi = mi_from_contingency(t);
    const double emi = emi_from_contingency(t);
    const double hu = entropy_of(t.row_sums, t.n);
    const double hv = entropy_of(t.col_sums, t.n);
    double avg = 0.0;
    switch (average) {
        case AmiAverage::arithmetic: avg = 0.5 * (hu + hv); break;
        case AmiAverage::min: avg = std::min(hu, hv); break;
        case AmiAverage::max: avg = std::max(hu, hv); break;
        case AmiAverage::geometric: avg = std::sqrt(hu * hv); break;
    }
    const double denom = avg - emi;
    if (denom == 0.0) return mi == emi ? 1.0 : 0.0;
    return (mi - emi) / denom;
}

}  // namespace linkpred
