#include "linkpred/attr_report.hpp"

#include <cmath>
#include <stdexcept>

namespace linkpred {

AttributeReport attribute_report(
    const Graph& graph,
    const std::map<std::string, const AttributeMatrix*>& variants,
    const AttributeMatrix& topology_embedding, std::size_t k,
    std::uint64_t seed, const std::string& reference) {
    if (variants.empty())
        throw std::invalid_argument("no attribute variants given");
    const auto ref_it = variants.find(reference);
    if (ref_it == variants.end())
        throw std::invalid_argument("reference variant '" + reference +
                                    "' not among the variants");
    for (const auto& [name, matrix] : variants) {
        if (matrix == nullptr || matrix->rows != graph.num_nodes())
            throw std::invalid_argument("variant '" + name +
                                        "' is not node-aligned");
    }
    if (topology_embedding.rows != graph.num_nodes())
        throw std::invalid_argument("topology embedding is not node-aligned");

    const AttributeMatrix& ref = *ref_it->second;
    AttributeReport report;
    report.k = k;
    report.seed = seed;

    Clustering ref_clustering;
    for (const auto& [name, matrix] : variants) {
        const Clustering c = kmeans(*matrix, k, seed);
        if (name == reference) {
            ref_clustering = c;
            report.db_scores[name] = davies_bouldin(ref, c);
        } else {
            report.db_scores[name] =
                davies_bouldin(ref, clustering_from_labels(ref, c.labels, k));
        }
    }

    const Clustering topo = kmeans(topology_embedding, k, seed);
    report.ami_vs_topology =
        adjusted_mutual_information(ref_clustering.labels, topo.labels);
    return report;
}

double generalization_bound(double sigma, double mutual_info) {
    if (sigma < 0.0 || mutual_info < 0.0)
        throw std::invalid_argument(
            "generalization_bound needs nonnegative inputs");
    return std::sqrt(2.0 * sigma * sigma * mutual_info);
}

}  // namespace linkpred
