#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "linkpred/cluster_metrics.hpp"
#include "linkpred/graph.hpp"

namespace linkpred {

// Attribute-quality report for a set of node-feature variants.
//
// Every variant is clustered with seeded k-means, and its Davies-Bouldin
// score is evaluated in the reference variant's attribute space: the
// variant's labels are applied to the reference points and the score is
// computed there. Labels of a well-aligned variant carve the reference
// cloud cleanly (low DB); labels that carry no node-level information
// (row-shuffled or random features) partition it arbitrarily (high DB).
// Evaluating every variant's labels against the same point set is what
// makes the scores comparable across variants.
//
// ami_vs_topology is the adjusted mutual information between the reference
// variant's cluster labels and the topology embedding's cluster labels —
// low values mean the attributes carry information the topology does not.
struct AttributeReport {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::map<std::string, double> db_scores;
    double ami_vs_topology = 0.0;
};

AttributeReport attribute_report(
    const Graph& graph,
    const std::map<std::string, const AttributeMatrix*>& variants,
    const AttributeMatrix& topology_embedding, std::size_t k,
    std::uint64_t seed, const std::string& reference = "pretrained");

// sqrt(2 * sigma^2 * mutual_info); throws on negative inputs.
double generalization_bound(double sigma, double mutual_info);

}  // namespace linkpred
