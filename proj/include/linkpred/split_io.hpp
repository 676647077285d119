#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkpred/graph.hpp"
#include "linkpred/split.hpp"

namespace linkpred {

// On-disk layout of a split run directory:
//   train_edges.tsv, valid_pos.tsv, valid_neg.tsv, test_pos.tsv,
//   test_neg.tsv               one "src<TAB>dst" key pair per line
//   nodes_train.txt, nodes_valid.txt, nodes_test.txt
//                              one node key per line
//   manifest.json              seed, ratios, mode, lost_edges, counts, ...
// All files are written even when empty so consumers need no probing.

struct SplitFiles {
    std::vector<Edge> train_edges;
    std::vector<Edge> valid_pos, valid_neg;
    std::vector<Edge> test_pos, test_neg;
    std::vector<NodeId> train_nodes, valid_nodes, test_nodes;
    nlohmann::json manifest;
};

void write_split_dir(const std::filesystem::path& dir, const Graph& graph,
                     const SplitFiles& files);

// A split directory read back. `universe` holds every node key mentioned
// by the directory with the train edges as its edge set, so train-graph
// degrees come straight from universe.degree().
struct SplitData {
    Graph universe;
    std::vector<Edge> train_edges;
    std::vector<Edge> valid_pos, valid_neg;
    std::vector<Edge> test_pos, test_neg;
    std::vector<NodeId> train_nodes, valid_nodes, test_nodes;
    nlohmann::json manifest;
};

SplitData read_split_dir(const std::filesystem::path& dir);

}  // namespace linkpred
