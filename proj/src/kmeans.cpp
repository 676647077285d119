#include "linkpred/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "linkpred/rng.hpp"

namespace linkpred {

namespace {

// k-means++: first centroid uniform, then each next one with probability
// proportional to the squared distance to the nearest chosen centroid.
Matrix kmeanspp_init(const Matrix& points, std::size_t k, SeededRng& rng) {
    const std::size_t n = points.rows;
    Matrix centroids(k, points.cols);
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());

    std::size_t first = static_cast<std::size_t>(rng.below(n));
    std::copy_n(points.row(first).begin(), points.cols,
                centroids.row(0).begin());
    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i],
                             squared_distance(points.row(i),
                                              centroids.row(c - 1)));
            total += d2[i];
        }
        std::size_t pick;
        if (total > 0.0) {
            const double r = rng.real01() * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                acc += d2[i];
                if (r < acc) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = static_cast<std::size_t>(rng.below(n));
        }
        std::copy_n(points.row(pick).begin(), points.cols,
                    centroids.row(c).begin());
    }
    return centroids;
}

}  // namespace

Clustering kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                  std::size_t max_iter, double tol) {
    const std::size_t n = points.rows;
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    if (k > n)
        throw std::invalid_argument("k exceeds the number of points");
    if (!points.all_finite())
        throw std::invalid_argument("points contain non-finite values");

    SeededRng rng(SeededRng::derive(seed, rng_stream::kKmeansInit));
    Clustering result;
    result.k = k;
    result.labels.assign(n, 0);
    result.centroids = kmeanspp_init(points, k, rng);

    std::vector<std::size_t> sizes(k);
    double prev_inertia = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < std::max<std::size_t>(max_iter, 1);
         ++iter) {
        // Assignment (ties go to the lowest cluster index).
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double d =
                    squared_distance(points.row(i), result.centroids.row(c));
                if (d < best) {
                    best = d;
                    best_c = static_cast<int>(c);
                }
            }
            result.labels[i] = best_c;
            inertia += best;
        }
        if (inertia > prev_inertia * (1.0 + 1e-9) + 1e-12)
            throw std::logic_error("kmeans inertia increased");
        result.inertia = inertia;

        // Update.
        Matrix next(k, points.cols, 0.0);
        std::fill(sizes.begin(), sizes.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = static_cast<std::size_t>(result.labels[i]);
            ++sizes[c];
            auto dst = next.row(c);
            const auto src = points.row(i);
            for (std::size_t j = 0; j < points.cols; ++j) dst[j] += src[j];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] == 0) continue;
            auto dst = next.row(c);
            for (std::size_t j = 0; j < points.cols; ++j)
                dst[j] /= static_cast<double>(sizes[c]);
        }
        // Re-seed emptied clusters at the point farthest from its current
        // centroid; repeated empties take successively farther points.
        std::vector<std::uint8_t> claimed(n, 0);
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] > 0) continue;
            double worst = -1.0;
            std::size_t pick = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (claimed[i]) continue;
                const double d = squared_distance(
                    points.row(i),
                    next.row(static_cast<std::size_t>(result.labels[i])));
                if (d > worst) {
                    worst = d;
                    pick = i;
                }
            }
            claimed[pick] = 1;
            std::copy_n(points.row(pick).begin(), points.cols,
                        next.row(c).begin());
        }

        double shift = 0.0;
        for (std::size_t c = 0; c < k; ++c)
            shift = std::max(shift, squared_distance(result.centroids.row(c),
                                                     next.row(c)));
        result.centroids = std::move(next);
        prev_inertia = inertia;
        if (std::sqrt(shift) < tol) break;
    }

    // Final assignment against the converged centroids so labels, inertia
    // and centroids are mutually consistent.
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        int best_c = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const double d =
                squared_distance(points.row(i), result.centroids.row(c));
            if (d < best) {
                best = d;
                best_c = static_cast<int>(c);
            }
        }
        result.labels[i] = best_c;
        inertia += best;
    }
    result.inertia = inertia;
    return clustering_from_labels(points, result.labels, k);
}

Clustering clustering_from_labels(const Matrix& points,
                                  std::span<const int> labels,
                                  std::size_t k) {
    if (labels.size() != points.rows)
        throw std::invalid_argument("labels not aligned to points");
    Clustering result;
    result.k = k;
    result.labels.assign(labels.begin(), labels.end());
    result.centroids = Matrix(k, points.cols, 0.0);
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < points.rows; ++i) {
        const int c = labels[i];
        if (c < 0 || static_cast<std::size_t>(c) >= k)
            throw std::invalid_argument("label out of range");
        ++sizes[static_cast<std::size_t>(c)];
        auto dst = result.centroids.row(static_cast<std::size_t>(c));
        const auto src = points.row(i);
        for (std::size_t j = 0; j < points.cols; ++j) dst[j] += src[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (sizes[c] == 0) continue;
        auto dst = result.centroids.row(c);
        for (std::size_t j = 0; j < points.cols; ++j)
            dst[j] /= static_cast<double>(sizes[c]);
    }
    result.inertia = 0.0;
    for (std::size_t i = 0; i < points.rows; ++i)
        result.inertia += squared_distance(
            points.row(i),
            result.centroids.row(static_cast<std::size_t>(labels[i])));
    return result;
}

}  // namespace linkpred
