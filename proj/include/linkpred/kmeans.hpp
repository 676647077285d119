#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkpred/matrix.hpp"

namespace linkpred {

struct Clustering {
    std::size_t k = 0;
    std::vector<int> labels;  // one per point, in [0, k)
    Matrix centroids;         // k x dim; nonempty clusters hold member means
    double inertia = 0.0;     // total within-cluster squared distance
};

// Lloyd iterations from k-means++ seeding until the largest centroid move
// drops below `tol` or `max_iter` is hit. Inertia is checked to be
// non-increasing across iterations. A cluster that empties is re-seeded at
// the point currently farthest from its assigned centroid.
Clustering kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                  std::size_t max_iter = 300, double tol = 1e-6);

// Rebuilds centroids and inertia for externally supplied labels (used to
// evaluate one clustering's labels against another point set).
Clustering clustering_from_labels(const Matrix& points,
                                  std::span<const int> labels,
                                  std::size_t k);

}  // namespace linkpred
