#include "linkpred/split_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "linkpred/errors.hpp"

namespace linkpred {

namespace {

void write_edge_file(const std::filesystem::path& p, const Graph& g,
                     const std::vector<Edge>& edges) {
    std::ofstream out(p);
    if (!out) throw ConfigError("cannot write file: " + p.string());
    for (const Edge& e : edges)
        out << g.key_of(e.u) << '\t' << g.key_of(e.v) << '\n';
    if (!out) throw DataError("write failed: " + p.string());
}

void write_node_file(const std::filesystem::path& p, const Graph& g,
                     const std::vector<NodeId>& nodes) {
    std::ofstream out(p);
    if (!out) throw ConfigError("cannot write file: " + p.string());
    for (const NodeId v : nodes) out << g.key_of(v) << '\n';
    if (!out) throw DataError("write failed: " + p.string());
}

struct Interner {
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

std::vector<NodeId> read_node_file(const std::filesystem::path& p,
                                   Interner& interner) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot open file: " + p.string());
    std::vector<NodeId> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(interner.intern(line));
    }
    return out;
}

std::vector<Edge> read_edge_file(const std::filesystem::path& p,
                                 Interner& interner) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot open file: " + p.string());
    std::vector<Edge> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string a, b, extra;
        if (!(is >> a >> b) || (is >> extra))
            throw DataError(p.string() + ":" + std::to_string(line_no) +
                            ": expected two node keys");
        out.push_back({interner.intern(a), interner.intern(b)});
    }
    return out;
}

}  // namespace

void write_split_dir(const std::filesystem::path& dir, const Graph& graph,
                     const SplitFiles& files) {
    std::filesystem::create_directories(dir);
    write_edge_file(dir / "train_edges.tsv", graph, files.train_edges);
    write_edge_file(dir / "valid_pos.tsv", graph, files.valid_pos);
    write_edge_file(dir / "valid_neg.tsv", graph, files.valid_neg);
    write_edge_file(dir / "test_pos.tsv", graph, files.test_pos);
    write_edge_file(dir / "test_neg.tsv", graph, files.test_neg);
    write_node_file(dir / "nodes_train.txt", graph, files.train_nodes);
    write_node_file(dir / "nodes_valid.txt", graph, files.valid_nodes);
    write_node_file(dir / "nodes_test.txt", graph, files.test_nodes);

    std::ofstream out(dir / "manifest.json");
    if (!out)
        throw ConfigError("cannot write file: " +
                          (dir / "manifest.json").string());
    out << files.manifest.dump(2) << '\n';
}

SplitData read_split_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw ConfigError("not a split directory: " + dir.string());

    Interner interner;
    SplitData data;
    data.train_nodes = read_node_file(dir / "nodes_train.txt", interner);
    data.valid_nodes = read_node_file(dir / "nodes_valid.txt", interner);
    data.test_nodes = read_node_file(dir / "nodes_test.txt", interner);
    data.train_edges = read_edge_file(dir / "train_edges.tsv", interner);
    data.valid_pos = read_edge_file(dir / "valid_pos.tsv", interner);
    data.valid_neg = read_edge_file(dir / "valid_neg.tsv", interner);
    data.test_pos = read_edge_file(dir / "test_pos.tsv", interner);
    data.test_neg = read_edge_file(dir / "test_neg.tsv", interner);

    std::ifstream mf(dir / "manifest.json");
    if (!mf)
        throw ConfigError("missing manifest.json in " + dir.string());
    try {
        mf >> data.manifest;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("bad manifest.json in " + dir.string() + ": " +
                        e.what());
    }

    const std::size_t n = interner.keys.size();
    data.universe = Graph::from_edges(n, data.train_edges,
                                      std::move(interner.keys));
    return data;
}

}  // namespace linkpred
