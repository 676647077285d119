#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "linkpred/graph.hpp"

namespace linkpred {

// File formats (all plain text, '#' lines ignored, tabs or spaces):
//   edge list        : <src-key> <dst-key>
//   temporal edges   : <src-key> <dst-key> <integer timestamp>
//   attribute file   : <node-key> <v_0> ... <v_{dim-1}>
//   node list        : <node-key>
// A single leading header line like "src dst" or "source target time" is
// skipped when its tokens are recognizable column names.

struct GraphLoadStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Ids are assigned in first-appearance order; keys from `node_list_file`
// (when given) are registered first, so attribute-only isolated nodes get
// ids even though no edge mentions them.
Graph load_graph(const std::filesystem::path& edge_file,
                 GraphLoadStats* stats = nullptr,
                 const std::optional<std::filesystem::path>& node_list_file =
                     std::nullopt);

// Rows ordered by graph node ids. Throws DataError when a graph node has
// no attribute record (the message names missing keys) or when a record
// has the wrong dimension or a non-finite value. Keys absent from the
// graph are skipped; their count goes to `extra_keys_ignored`.
AttributeMatrix load_attributes(const std::filesystem::path& attr_file,
                                const Graph& graph,
                                std::size_t* extra_keys_ignored = nullptr);

void save_graph(const Graph& graph, const std::filesystem::path& path);

void save_attributes(const Graph& graph, const AttributeMatrix& attrs,
                     const std::filesystem::path& path);

// Builds one snapshot per distinct timestamp (ascending). With
// `cumulative` (the default) snapshot j contains every edge stamped at or
// before t_j, which models a growing network; otherwise each snapshot
// contains only the edges stamped exactly t_j.
TemporalGraphSequence load_temporal_graph(
    const std::filesystem::path& edge_file, bool cumulative = true,
    GraphLoadStats* stats = nullptr);

// Attaches one attribute matrix (keyed like the attribute file format) to
// every snapshot of the sequence.
void attach_attributes(TemporalGraphSequence& seq,
                       const std::filesystem::path& attr_file);

// Directory of per-snapshot edge-list files whose stems are integer
// timestamps ("2014.tsv", "2015.tsv", ...). Each file is a complete
// snapshot; node keys are shared across files.
TemporalGraphSequence load_temporal_snapshots_dir(
    const std::filesystem::path& dir, GraphLoadStats* stats = nullptr);

}  // namespace linkpred
