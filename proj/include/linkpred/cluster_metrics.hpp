#pragma once

#include <span>

#include "linkpred/kmeans.hpp"
#include "linkpred/matrix.hpp"

namespace linkpred {

// Davies-Bouldin score over the nonempty clusters:
//   DB = (1/k') sum_i max_{j != i} (s_i + s_j) / d(c_i, c_j)
// where s_i is the mean Euclidean distance of cluster i's points to its
// centroid and d is the centroid distance. Lower is better. Throws when
// fewer than two clusters are nonempty or when two nonempty clusters have
// coincident centroids (the message names the pair).
double davies_bouldin(const Matrix& points, const Clustering& clustering);

// Mutual information between two labelings, in nats, from the contingency
// table: MI = sum_ij (n_ij/N) log(N n_ij / (a_i b_j)).
double mutual_information(std::span<const int> labels_u,
                          std::span<const int> labels_v);

// Shannon entropy of one labeling, in nats.
double label_entropy(std::span<const int> labels);

// Expected MI under the permutation (hypergeometric) model with both
// marginals fixed. Exact summation over each cell's support, centered at
// the hypergeometric mode; terms below 1e-16 of the cell's peak weight are
// skipped, which keeps the sum stable for N around 1e5.
double expected_mutual_information(std::span<const int> labels_u,
                                   std::span<const int> labels_v);

enum class AmiAverage { arithmetic, min, max, geometric };

// Chance-adjusted mutual information:
//   AMI = (MI - E[MI]) / (avg(H(U), H(V)) - E[MI])
// using the arithmetic mean by default (the normalizer is configurable
// since the definition admits several). Partitions identical up to
// relabeling return exactly 1. A zero denominator (both partitions
// trivial) is defined as 1 when MI == E[MI] and 0 otherwise.
double adjusted_mutual_information(std::span<const int> labels_u,
                                   std::span<const int> labels_v,
                                   AmiAverage average = AmiAverage::arithmetic);

}  // namespace linkpred
