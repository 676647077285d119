#include "linkpred/graph_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "linkpred/errors.hpp"

namespace linkpred {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(std::move(tok));
    return out;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

bool looks_like_header(const std::vector<std::string>& toks) {
    static const std::array<const char*, 14> names = {
        "src",  "dst",    "source", "target", "from", "to",   "node1",
        "node2", "u",     "v",      "head",   "tail", "time", "timestamp"};
    auto known = [&](const std::string& t) {
        std::string lower(t);
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        return std::find(names.begin(), names.end(), lower) != names.end() ||
               lower == "ts" || lower == "year";
    };
    if (toks.size() < 2) return false;
    return known(toks[0]) && known(toks[1]);
}

std::ifstream open_or_throw(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in)
        throw ConfigError("cannot open file: " + p.string());
    return in;
}

double parse_double(const std::string& tok, const std::filesystem::path& p,
                    std::size_t line_no) {
    double value = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end)
        throw DataError(p.string() + ":" + std::to_string(line_no) +
                        ": not a number: '" + tok + "'");
    return value;
}

std::int64_t parse_int64(const std::string& tok,
                         const std::filesystem::path& p,
                         std::size_t line_no) {
    std::int64_t value = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end)
        throw DataError(p.string() + ":" + std::to_string(line_no) +
                        ": not an integer timestamp: '" + tok + "'");
    return value;
}

struct KeyInterner {
    std::vector<std::string> keys;
    std::unordered_map<std::string, NodeId> ids;

    NodeId intern(const std::string& key) {
        const auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        const NodeId id = static_cast<NodeId>(keys.size());
        keys.push_back(key);
        ids.emplace(key, id);
        return id;
    }
};

// Reads whitespace-separated records, skipping comments, blanks, and an
// optional single header line. Calls fn(tokens, line_no) per record.
template <class Fn>
void for_each_record(const std::filesystem::path& p, Fn&& fn) {
    std::ifstream in = open_or_throw(p);
    std::string line;
    std::size_t line_no = 0;
    bool first_record = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;
        auto toks = split_tokens(line);
        if (first_record && looks_like_header(toks)) {
            first_record = false;
            continue;
        }
        first_record = false;
        fn(toks, line_no);
    }
}

}  // namespace

Graph load_graph(const std::filesystem::path& edge_file,
                 GraphLoadStats* stats,
                 const std::optional<std::filesystem::path>& node_list_file) {
    KeyInterner interner;
    if (node_list_file) {
        for_each_record(*node_list_file,
                        [&](const std::vector<std::string>& toks,
                            std::size_t line_no) {
                            if (toks.size() != 1)
                                throw DataError(
                                    node_list_file->string() + ":" +
                                    std::to_string(line_no) +
                                    ": expected one node key per line");
                            interner.intern(toks[0]);
                        });
    }

    std::vector<Edge> raw;
    for_each_record(edge_file, [&](const std::vector<std::string>& toks,
                                   std::size_t line_no) {
        if (toks.size() != 2)
            throw DataError(edge_file.string() + ":" +
                            std::to_string(line_no) +
                            ": expected two node keys, got " +
                            std::to_string(toks.size()) + " tokens");
        const NodeId a = interner.intern(toks[0]);
        const NodeId b = interner.intern(toks[1]);
        raw.push_back({a, b});  // normalized by from_edges
    });
    if (raw.empty())
        throw DataError(edge_file.string() + ": no edges found");

    GraphBuildStats build;
    const std::size_t n = interner.keys.size();
    Graph g = Graph::from_edges(n, std::move(raw), std::move(interner.keys),
                                &build);
    if (stats != nullptr) {
        stats->self_loops_dropped = build.self_loops_dropped;
        stats->duplicate_edges_dropped = build.duplicate_edges_dropped;
    }
    return g;
}

AttributeMatrix load_attributes(const std::filesystem::path& attr_file,
                                const Graph& graph,
                                std::size_t* extra_keys_ignored) {
    const std::size_t n = graph.num_nodes();
    AttributeMatrix attrs;
    std::vector<bool> seen(n, false);
    std::size_t extra = 0;
    std::size_t dim = 0;

    for_each_record(attr_file, [&](const std::vector<std::string>& toks,
                                   std::size_t line_no) {
        if (toks.size() < 2)
            throw DataError(attr_file.string() + ":" +
                            std::to_string(line_no) +
                            ": expected node key followed by values");
        const std::size_t row_dim = toks.size() - 1;
        if (dim == 0) {
            dim = row_dim;
            attrs = AttributeMatrix(n, dim);
        } else if (row_dim != dim) {
            throw DataError(attr_file.string() + ":" +
                            std::to_string(line_no) +
                            ": dimension mismatch (expected " +
                            std::to_string(dim) + ", got " +
                            std::to_string(row_dim) + ")");
        }
        std::optional<NodeId> id;
        if (graph.has_keys()) {
            id = graph.find_id(toks[0]);
        } else {
            // keyless graphs (built in memory) address rows by decimal id
            NodeId parsed = 0;
            const char* begin = toks[0].data();
            const char* end = begin + toks[0].size();
            const auto res = std::from_chars(begin, end, parsed);
            if (res.ec == std::errc() && res.ptr == end && parsed < n)
                id = parsed;
        }
        if (!id) {
            ++extra;
            return;
        }
        if (seen[*id])
            throw DataError(attr_file.string() + ":" +
                            std::to_string(line_no) +
                            ": duplicate record for key '" + toks[0] + "'");
        seen[*id] = true;
        auto row = attrs.row(*id);
        for (std::size_t j = 0; j < dim; ++j) {
            const double v = parse_double(toks[j + 1], attr_file, line_no);
            if (!std::isfinite(v))
                throw DataError(attr_file.string() + ":" +
                                std::to_string(line_no) +
                                ": non-finite value for key '" + toks[0] +
                                "'");
            row[j] = v;
        }
    });

    std::vector<std::string> missing;
    for (NodeId v = 0; v < n; ++v)
        if (!seen[v]) missing.push_back(graph.key_of(v));
    if (!missing.empty()) {
        std::string msg = attr_file.string() + ": missing attributes for " +
                          std::to_string(missing.size()) + " node(s):";
        for (std::size_t i = 0; i < missing.size() && i < 5; ++i)
            msg += " '" + missing[i] + "'";
        if (missing.size() > 5)
            msg += " (+" + std::to_string(missing.size() - 5) + " more)";
        throw DataError(msg);
    }

    if (extra_keys_ignored != nullptr) *extra_keys_ignored = extra;
    return attrs;
}

void save_graph(const Graph& graph, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    for (const Edge& e : graph.edges())
        out << graph.key_of(e.u) << '\t' << graph.key_of(e.v) << '\n';
    if (!out) throw DataError("write failed: " + path.string());
}

void save_attributes(const Graph& graph, const AttributeMatrix& attrs,
                     const std::filesystem::path& path) {
    if (attrs.rows != graph.num_nodes())
        throw std::invalid_argument("attribute rows != graph nodes");
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    char buf[40];
    for (std::size_t i = 0; i < attrs.rows; ++i) {
        out << graph.key_of(static_cast<NodeId>(i));
        for (double v : attrs.row(i)) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << '\t' << buf;
        }
        out << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

TemporalGraphSequence load_temporal_graph(
    const std::filesystem::path& edge_file, bool cumulative,
    GraphLoadStats* stats) {
    KeyInterner interner;
    struct Row {
        NodeId a, b;
        std::int64_t ts;
    };
    std::vector<Row> rows;
    for_each_record(edge_file, [&](const std::vector<std::string>& toks,
                                   std::size_t line_no) {
        if (toks.size() != 3)
            throw DataError(edge_file.string() + ":" +
                            std::to_string(line_no) +
                            ": expected src, dst, timestamp");
        const NodeId a = interner.intern(toks[0]);
        const NodeId b = interner.intern(toks[1]);
        rows.push_back({a, b, parse_int64(toks[2], edge_file, line_no)});
    });
    if (rows.empty())
        throw DataError(edge_file.string() + ": no edges found");

    std::map<std::int64_t, std::vector<Edge>> by_ts;
    GraphLoadStats total;
    for (const Row& r : rows) {
        if (r.a == r.b) {
            ++total.self_loops_dropped;
            continue;
        }
        by_ts[r.ts].push_back(make_edge(r.a, r.b));
    }
    if (by_ts.empty())
        throw DataError(edge_file.string() + ": only self-loops found");

    const std::size_t n = interner.keys.size();
    TemporalGraphSequence seq;
    if (cumulative) {
        // A growing edge set: an edge repeated at a later timestamp is
        // already present and counts as a duplicate once.
        std::vector<Edge> acc;
        std::unordered_map<std::uint64_t, bool, EdgeKeyHash> seen;
        for (auto& [ts, edges] : by_ts) {
            for (const Edge& e : edges) {
                if (seen.emplace(edge_key(e), true).second)
                    acc.push_back(e);
                else
                    ++total.duplicate_edges_dropped;
            }
            Graph g = Graph::from_edges(
                n, acc, std::vector<std::string>(interner.keys));
            seq.snapshots.push_back({ts, std::move(g), AttributeMatrix{}});
        }
    } else {
        for (auto& [ts, edges] : by_ts) {
            GraphBuildStats build;
            Graph g = Graph::from_edges(
                n, std::move(edges), std::vector<std::string>(interner.keys),
                &build);
            total.duplicate_edges_dropped += build.duplicate_edges_dropped;
            seq.snapshots.push_back({ts, std::move(g), AttributeMatrix{}});
        }
    }
    if (stats != nullptr) *stats = total;
    return seq;
}

void attach_attributes(TemporalGraphSequence& seq,
                       const std::filesystem::path& attr_file) {
    if (seq.snapshots.empty())
        throw std::invalid_argument("empty temporal sequence");
    const AttributeMatrix attrs =
        load_attributes(attr_file, seq.snapshots.front().graph);
    for (auto& snap : seq.snapshots) snap.attrs = attrs;
}

TemporalGraphSequence load_temporal_snapshots_dir(
    const std::filesystem::path& dir, GraphLoadStats* stats) {
    if (!std::filesystem::is_directory(dir))
        throw ConfigError("not a directory: " + dir.string());

    std::map<std::int64_t, std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string stem = entry.path().stem().string();
        std::int64_t ts = 0;
        const char* begin = stem.data();
        const char* end = begin + stem.size();
        const auto res = std::from_chars(begin, end, ts);
        if (res.ec != std::errc() || res.ptr != end) continue;
        if (!files.emplace(ts, entry.path()).second)
            throw ConfigError("duplicate snapshot timestamp " +
                              std::to_string(ts) + " in " + dir.string());
    }
    if (files.empty())
        throw ConfigError("no snapshot files (integer-stem edge lists) in " +
                          dir.string());

    // First pass interns every key so all snapshots share one id space.
    KeyInterner interner;
    struct Parsed {
        std::int64_t ts;
        std::vector<Edge> edges;
    };
    std::vector<Parsed> parsed;
    GraphLoadStats total;
    for (const auto& [ts, path] : files) {
        Parsed p{ts, {}};
        for_each_record(path, [&](const std::vector<std::string>& toks,
                                  std::size_t line_no) {
            if (toks.size() != 2)
                throw DataError(path.string() + ":" +
                                std::to_string(line_no) +
                                ": expected two node keys");
            const NodeId a = interner.intern(toks[0]);
            const NodeId b = interner.intern(toks[1]);
            if (a == b) {
                ++total.self_loops_dropped;
                return;
            }
            p.edges.push_back(make_edge(a, b));
        });
        parsed.push_back(std::move(p));
    }

    const std::size_t n = interner.keys.size();
    TemporalGraphSequence seq;
    for (auto& p : parsed) {
        GraphBuildStats build;
        Graph g = Graph::from_edges(n, std::move(p.edges),
                                    std::vector<std::string>(interner.keys),
                                    &build);
        total.duplicate_edges_dropped += build.duplicate_edges_dropped;
        seq.snapshots.push_back({p.ts, std::move(g), AttributeMatrix{}});
    }
    if (stats != nullptr) *stats = total;
    return seq;
}

}  // namespace linkpred
