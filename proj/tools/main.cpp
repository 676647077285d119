// Command-line front end. Subcommands: split, baseline, embed,
// attrs score, train, eval, diagnose. Every run directory gets a
// manifest.json recording the resolved configuration, seeds, toolkit
// version, and input file digests, so any result can be regenerated by
// replaying the recorded command.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "common.hpp"
#include "linkpred/attr_report.hpp"
#include "linkpred/embed.hpp"
#include "linkpred/errors.hpp"
#include "linkpred/graph_io.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/mlp.hpp"
#include "linkpred/null_models.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/split.hpp"
#include "linkpred/split_io.hpp"
#include "linkpred/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace linkpred;
using namespace linkpred::cli;

namespace {

// ----------------------------------------------------------------------
// split

struct SplitArgs {
    std::string mode;
    std::string graph;
    std::string nodes;
    std::string snapshots;
    std::string attrs;
    std::string ratios = "80,10,10";
    std::uint64_t seed = 0;
    std::string out;
    int index = 0;
    bool interval = false;
    bool all_new_edges = false;
};

int run_split(const SplitArgs& a) {
    const fs::path out_dir = resolve_out(a.out);
    json manifest = manifest_base("split");
    manifest["mode"] = a.mode;
    manifest["seed"] = a.seed;

    if (a.mode == "node" || a.mode == "edge") {
        if (a.graph.empty())
            throw ConfigError("--graph is required for --mode " + a.mode);
        const Ratios ratios = parse_ratios(a.ratios);
        manifest["ratios"] = {ratios.train, ratios.valid, ratios.test};
        GraphLoadStats stats;
        std::optional<fs::path> node_list;
        if (!a.nodes.empty()) node_list = fs::path(a.nodes);
        const Graph graph = load_graph(a.graph, &stats, node_list);
        manifest["inputs"]["graph"] = input_record(a.graph);
        if (node_list)
            manifest["inputs"]["nodes"] = input_record(*node_list);
        manifest["load_warnings"] = {
            {"self_loops_dropped", stats.self_loops_dropped},
            {"duplicate_edges_dropped", stats.duplicate_edges_dropped}};

        SplitFiles files;
        if (a.mode == "node") {
            const InductiveSplit split =
                random_node_split(graph, ratios, a.seed);
            files.train_edges = split.train_graph.edges();
            files.valid_pos = split.valid_graph.edges();
            files.test_pos = split.test_graph.edges();
            files.train_nodes = split.train_nodes;
            files.valid_nodes = split.valid_nodes;
            files.test_nodes = split.test_nodes;
            files.valid_neg = sample_negatives(
                graph, files.valid_pos.size(),
                SeededRng::derive(a.seed, rng_stream::kNegSample, 1),
                EndpointConstraint{split.valid_nodes, split.valid_nodes});
            files.test_neg = sample_negatives(
                graph, files.test_pos.size(),
                SeededRng::derive(a.seed, rng_stream::kNegSample, 2),
                EndpointConstraint{split.test_nodes, split.test_nodes});
            manifest["lost_edges"] = split.lost_edges;
        } else {
            const EdgeSplit split = random_edge_split(graph, ratios, a.seed);
            files.train_edges = split.train_edges;
            files.valid_pos = split.valid_pos;
            files.valid_neg = split.valid_neg;
            files.test_pos = split.test_pos;
            files.test_neg = split.test_neg;
            files.train_nodes.resize(graph.num_nodes());
            for (NodeId v = 0; v < graph.num_nodes(); ++v)
                files.train_nodes[v] = v;
            manifest["lost_edges"] = 0;
        }
        manifest["counts"] = {{"train_edges", files.train_edges.size()},
                              {"valid_pos", files.valid_pos.size()},
                              {"valid_neg", files.valid_neg.size()},
                              {"test_pos", files.test_pos.size()},
                              {"test_neg", files.test_neg.size()},
                              {"train_nodes", files.train_nodes.size()},
                              {"valid_nodes", files.valid_nodes.size()},
                              {"test_nodes", files.test_nodes.size()}};
        files.manifest = manifest;
        write_split_dir(out_dir, graph, files);
        std::cout << "wrote split to " << out_dir.string() << "\n";
        return 0;
    }

    // temporal (the option validator already restricted the values)
    if (a.snapshots.empty())
        throw ConfigError("--snapshots is required for --mode temporal");

    GraphLoadStats stats;
    TemporalGraphSequence seq =
        fs::is_directory(a.snapshots)
            ? load_temporal_snapshots_dir(a.snapshots, &stats)
            : load_temporal_graph(a.snapshots, !a.interval, &stats);
    if (!a.attrs.empty()) {
        attach_attributes(seq, a.attrs);
        manifest["inputs"]["attrs"] = input_record(a.attrs);
    }
    if (fs::is_directory(a.snapshots)) {
        manifest["inputs"]["snapshots"] = {{"path", a.snapshots}};
    } else {
        manifest["inputs"]["snapshots"] = input_record(a.snapshots);
    }
    if (a.index < 0 || static_cast<std::size_t>(a.index) + 1 >= seq.size())
        throw ConfigError("--index must be in [0, " +
                          std::to_string(seq.size() > 0 ? seq.size() - 1 : 0) +
                          ")");
    const std::size_t j = static_cast<std::size_t>(a.index);
    const TemporalSplit split = temporal_split(seq, j, !a.all_new_edges);
    const Graph& base = seq.snapshots[j].graph;
    const Graph& next = seq.snapshots[j + 1].graph;

    SplitFiles files;
    files.train_edges = base.edges();
    files.test_pos = split.new_edges;
    files.train_nodes = split.observed_nodes;
    files.test_nodes = split.new_nodes;
    if (!split.new_edges.empty()) {
        files.test_neg = sample_negatives(
            next, split.new_edges.size(),
            SeededRng::derive(a.seed, rng_stream::kNegSample, 2),
            EndpointConstraint{split.new_nodes, seq.present_nodes(j + 1)});
    } else {
        std::cerr << "warning: no new edges between snapshots " << j
                  << " and " << j + 1 << "\n";
    }
    manifest["index"] = a.index;
    manifest["timestamps"] = {seq.snapshots[j].timestamp,
                              seq.snapshots[j + 1].timestamp};
    manifest["new_edges_filtered_to_new_nodes"] = !a.all_new_edges;
    manifest["counts"] = {{"train_edges", files.train_edges.size()},
                          {"test_pos", files.test_pos.size()},
                          {"test_neg", files.test_neg.size()},
                          {"train_nodes", files.train_nodes.size()},
                          {"test_nodes", files.test_nodes.size()}};
    files.manifest = manifest;
    write_split_dir(out_dir, base, files);
    std::cout << "wrote temporal split to " << out_dir.string() << "\n";
    return 0;
}

// ----------------------------------------------------------------------
// baseline

struct BaselineArgs {
    std::string model;
    std::string split;
    std::string set = "test";
    std::string out;
    std::uint64_t neg_seed = 1;
    std::uint64_t seed = 0;
};

void write_scores_tsv(const fs::path& path, const Graph& universe,
                      const std::vector<std::pair<Edge, double>>& scores) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    char buf[40];
    for (const auto& [e, s] : scores) {
        std::snprintf(buf, sizeof(buf), "%.17g", s);
        out << universe.key_of(e.u) << '\t' << universe.key_of(e.v) << '\t'
            << buf << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

int run_baseline(const BaselineArgs& a) {
    const SplitData split = read_split_dir(a.split);
    const auto& pos = a.set == "valid" ? split.valid_pos : split.test_pos;
    const auto& neg = a.set == "valid" ? split.valid_neg : split.test_neg;
    if (pos.empty())
        throw ConfigError("split has no " + a.set + " positives to score");

    std::vector<std::pair<Edge, double>> scores;
    scores.reserve(pos.size() + neg.size());
    auto score_all = [&](auto&& fn) {
        for (const Edge& e : pos) scores.emplace_back(e, fn(e));
        for (const Edge& e : neg) scores.emplace_back(e, fn(e));
    };

    json manifest = manifest_base("baseline");
    if (a.model == "config") {
        const DegreeModel model = DegreeModel::from_graph(split.universe);
        score_all(
            [&](const Edge& e) { return config_score(model, e.u, e.v); });
    } else if (a.model == "duplex") {
        const auto neg_layer = sample_negatives(
            split.universe, split.train_edges.size(),
            SeededRng::derive(a.neg_seed, rng_stream::kDuplexNeg));
        const DuplexDegreeModel model = build_duplex(
            split.train_edges, neg_layer, split.universe.num_nodes());
        score_all([&](const Edge& e) {
            return duplex_config_score(model, e.u, e.v);
        });
        manifest["neg_seed"] = a.neg_seed;
    } else {  // "random", enforced by the option validator
        score_all([&](const Edge& e) {
            return random_edge_score(a.seed, e.u, e.v);
        });
        manifest["seed"] = a.seed;
    }

    const fs::path out = resolve_out(a.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_scores_tsv(out, split.universe, scores);
    manifest["model"] = a.model;
    manifest["set"] = a.set;
    manifest["inputs"]["split"] = {{"path", a.split}};
    manifest["counts"] = {{"pos", pos.size()}, {"neg", neg.size()}};
    write_json_file(out.string() + ".manifest.json", manifest);
    std::cout << "wrote scores to " << out.string() << "\n";
    return 0;
}

// ----------------------------------------------------------------------
// embed

struct EmbedArgs {
    std::string method;
    std::string graph;
    std::string attrs;
    std::string split;
    std::string out;
    std::uint64_t seed = 0;
    Node2VecParams params;
    std::size_t dim = 0;  // random method
};

int run_embed(const EmbedArgs& a) {
    json manifest = manifest_base("embed");
    manifest["method"] = a.method;
    manifest["seed"] = a.seed;

    const fs::path out = resolve_out(a.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());

    if (a.method == "node2vec") {
        Graph graph;
        if (!a.split.empty()) {
            // Walks on the train subgraph so the embedding never sees
            // held-out topology.
            graph = read_split_dir(a.split).universe;
            manifest["inputs"]["split"] = {{"path", a.split}};
        } else {
            if (a.graph.empty())
                throw ConfigError("--graph or --split is required");
            graph = load_graph(a.graph);
            manifest["inputs"]["graph"] = input_record(a.graph);
        }
        Node2VecParams params = a.params;
        params.seed = a.seed;
        const AttributeMatrix emb = node2vec_embedding(graph, params);
        save_attributes(graph, emb, out);
        manifest["params"] = {{"dim", params.dim},
                              {"walks_per_node", params.walks_per_node},
                              {"walk_length", params.walk_length},
                              {"window", params.window},
                              {"p", params.p},
                              {"q", params.q},
                              {"negatives", params.negatives_per_target},
                              {"epochs", params.epochs},
                              {"learning_rate", params.learning_rate},
                              {"workers", params.workers}};
    } else if (a.method == "shuffle") {
        if (a.graph.empty() || a.attrs.empty())
            throw ConfigError("--graph and --attrs are required for shuffle");
        const Graph graph = load_graph(a.graph);
        const AttributeMatrix attrs = load_attributes(a.attrs, graph);
        save_attributes(graph, shuffle_attributes(attrs, a.seed), out);
        manifest["inputs"]["graph"] = input_record(a.graph);
        manifest["inputs"]["attrs"] = input_record(a.attrs);
    } else {  // "random"
        if (a.graph.empty())
            throw ConfigError("--graph is required for random");
        if (a.dim == 0)
            throw ConfigError("--rand-dim is required for random");
        const Graph graph = load_graph(a.graph);
        save_attributes(graph,
                        random_attributes(graph.num_nodes(), a.dim, a.seed),
                        out);
        manifest["inputs"]["graph"] = input_record(a.graph);
        manifest["dim"] = a.dim;
    }
    write_json_file(out.string() + ".manifest.json", manifest);
    std::cout << "wrote embedding to " << out.string() << "\n";
    return 0;
}

// ----------------------------------------------------------------------
// attrs score

struct AttrsScoreArgs {
    std::string graph;
    std::string pretrained;
    std::string topology;
    std::string split;
    std::string k_list = "3,5,8";
    std::uint64_t seed = 0;
    std::string out = ".";
    double sigma = -1.0;
    Node2VecParams params;
};

int run_attrs_score(const AttrsScoreArgs& a) {
    const Graph graph = load_graph(a.graph);
    const AttributeMatrix pretrained = load_attributes(a.pretrained, graph);

    json manifest = manifest_base("attrs-score");
    manifest["seed"] = a.seed;
    manifest["inputs"]["graph"] = input_record(a.graph);
    manifest["inputs"]["pretrained"] = input_record(a.pretrained);

    AttributeMatrix topology;
    if (!a.topology.empty()) {
        topology = load_attributes(a.topology, graph);
        manifest["inputs"]["topology"] = input_record(a.topology);
    } else {
        Node2VecParams params = a.params;
        params.seed = a.seed;
        if (!a.split.empty()) {
            // Train-subgraph topology embedding, aligned back to the full
            // graph through node keys.
            const SplitData split = read_split_dir(a.split);
            const AttributeMatrix emb =
                node2vec_embedding(split.universe, params);
            topology = AttributeMatrix(graph.num_nodes(), emb.cols);
            for (NodeId v = 0; v < split.universe.num_nodes(); ++v) {
                const auto id = graph.find_id(split.universe.key_of(v));
                if (!id)
                    throw DataError("split node '" +
                                    split.universe.key_of(v) +
                                    "' is not in the graph");
                std::copy_n(emb.row(v).begin(), emb.cols,
                            topology.row(*id).begin());
            }
            manifest["inputs"]["split"] = {{"path", a.split}};
        } else {
            topology = node2vec_embedding(graph, params);
        }
        manifest["topology"] = "node2vec";
    }

    const AttributeMatrix shuffled = shuffle_attributes(pretrained, a.seed);
    const AttributeMatrix random =
        random_attributes(pretrained.rows, pretrained.cols, a.seed);
    const std::map<std::string, const AttributeMatrix*> variants = {
        {"pretrained", &pretrained},
        {"shuffled", &shuffled},
        {"random", &random},
        {"node2vec", &topology}};

    const fs::path out_dir = resolve_out(a.out);
    fs::create_directories(out_dir);
    json written = json::array();
    for (const std::size_t k : parse_size_list(a.k_list, "--k")) {
        const AttributeReport report =
            attribute_report(graph, variants, topology, k, a.seed);
        json j = {{"k", report.k},
                  {"seed", report.seed},
                  {"db", report.db_scores},
                  {"ami", report.ami_vs_topology}};
        if (a.sigma >= 0.0)
            j["bound"] = generalization_bound(
                a.sigma, std::max(report.ami_vs_topology, 0.0));
        const fs::path path =
            out_dir / ("report_k" + std::to_string(k) + ".json");
        write_json_file(path, j);
        written.push_back(path.filename().string());
        std::cout << "wrote " << path.string() << "\n";
    }
    manifest["k"] = a.k_list;
    if (a.sigma >= 0.0) manifest["sigma"] = a.sigma;
    manifest["reports"] = written;
    write_json_file(out_dir / "manifest.json", manifest);
    return 0;
}

// ----------------------------------------------------------------------
// train

struct TrainArgs {
    std::string split;
    std::string attrs;
    std::string hidden = "100,100,100";
    double lr = 1e-3;
    std::size_t epochs = 200;
    std::size_t batch_size = 128;
    double neg_ratio = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_train(const TrainArgs& a) {
    const SplitData split = read_split_dir(a.split);
    if (split.train_edges.empty())
        throw ConfigError("split has no train edges");
    const AttributeMatrix attrs = load_attributes(a.attrs, split.universe);

    TrainConfig config;
    config.learning_rate = a.lr;
    config.epochs = a.epochs;
    config.batch_size = a.batch_size;
    config.negatives_per_positive = a.neg_ratio;
    config.seed = a.seed;
    const auto hidden = parse_size_list(a.hidden, "--hidden");

    const TrainResult result =
        train_link_mlp(attrs, split.train_edges, config, hidden);

    const fs::path out_dir = resolve_out(a.out);
    fs::create_directories(out_dir);
    save_mlp(result.model, out_dir / "model.bin");
    save_trace_csv(result.trace, out_dir / "trace.csv");

    json manifest = manifest_base("train");
    manifest["seed"] = a.seed;
    manifest["inputs"]["split"] = {{"path", a.split}};
    manifest["inputs"]["attrs"] = input_record(a.attrs);
    manifest["config"] = {{"hidden", a.hidden},
                          {"learning_rate", a.lr},
                          {"epochs", a.epochs},
                          {"batch_size", a.batch_size},
                          {"negatives_per_positive", a.neg_ratio}};
    manifest["train_edges"] = split.train_edges.size();
    if (!result.trace.epoch_loss.empty())
        manifest["final_loss"] = result.trace.epoch_loss.back();
    write_json_file(out_dir / "manifest.json", manifest);
    std::cout << "wrote model to " << (out_dir / "model.bin").string()
              << "\n";
    return 0;
}

// ----------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string split;
    std::string set = "test";
    std::string model;
    std::string attrs;
    std::string scores;
    std::size_t k = 20;
    std::string out;
    std::size_t degree_bins = 0;
    std::string bin_key = "min";
    std::string trace;
    std::string diagnose;
    double tail_start = 0.25;
    bool bound = false;
    double ami = -1.0;
    std::string ami_report;
};

std::unordered_map<std::string, double> read_scores_tsv(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw ConfigError("cannot open file: " + p.string());
    std::unordered_map<std::string, double> out;
    std::string a, b;
    double s;
    while (in >> a >> b >> s) {
        if (b < a) std::swap(a, b);
        out[a + "\t" + b] = s;
    }
    return out;
}

int run_eval(const EvalArgs& a) {
    const SplitData split = read_split_dir(a.split);
    const auto& pos = a.set == "valid" ? split.valid_pos : split.test_pos;
    const auto& neg = a.set == "valid" ? split.valid_neg : split.test_neg;
    if (pos.empty() || neg.empty())
        throw ConfigError("split has no scored " + a.set + " pairs");

    json manifest = manifest_base("eval");
    manifest["inputs"]["split"] = {{"path", a.split}};
    manifest["set"] = a.set;

    ScoredEdges scored;
    if (!a.scores.empty()) {
        const auto table = read_scores_tsv(a.scores);
        auto lookup = [&](const Edge& e) {
            std::string ka = split.universe.key_of(e.u);
            std::string kb = split.universe.key_of(e.v);
            if (kb < ka) std::swap(ka, kb);
            const auto it = table.find(ka + "\t" + kb);
            if (it == table.end())
                throw DataError("scores file has no entry for pair " + ka +
                                " " + kb);
            return it->second;
        };
        for (const Edge& e : pos) scored.pos_scores.push_back(lookup(e));
        for (const Edge& e : neg) scored.neg_scores.push_back(lookup(e));
        manifest["inputs"]["scores"] = input_record(a.scores);
    } else if (!a.model.empty()) {
        if (a.attrs.empty())
            throw ConfigError("--attrs is required with --model");
        const MlpModel model = load_mlp(a.model);
        const AttributeMatrix attrs =
            load_attributes(a.attrs, split.universe);
        for (const Edge& e : pos)
            scored.pos_scores.push_back(
                predict_edge(model, attrs, e.u, e.v));
        for (const Edge& e : neg)
            scored.neg_scores.push_back(
                predict_edge(model, attrs, e.u, e.v));
        manifest["inputs"]["model"] = input_record(a.model);
        manifest["inputs"]["attrs"] = input_record(a.attrs);
    } else {
        throw ConfigError("either --scores or --model is required");
    }

    json metrics = {{"n_pos", scored.pos_scores.size()},
                    {"n_neg", scored.neg_scores.size()},
                    {"K", a.k},
                    {"auroc", auroc(scored)},
                    {"auprc", auprc(scored)}};
    if (a.k <= scored.neg_scores.size())
        metrics["hits_at_k"] = hits_at_k(scored, a.k);
    else
        metrics["hits_at_k"] = nullptr;

    const fs::path out_dir = resolve_out(a.out);
    fs::create_directories(out_dir);

    if (a.degree_bins > 0) {
        const DegreeBinKey key = a.bin_key == "max"
                                     ? DegreeBinKey::max_endpoint
                                 : a.bin_key == "mean"
                                     ? DegreeBinKey::mean_endpoint
                                     : DegreeBinKey::min_endpoint;
        const DegreeBinTable table =
            degree_binned(split.universe, pos, neg, scored.pos_scores,
                          scored.neg_scores, a.k, a.degree_bins, key);
        write_degree_table_csv(table, out_dir / "degree_bins.csv");
        manifest["degree_bins"] = a.degree_bins;
        manifest["bin_key"] = a.bin_key;
    }

    if (!a.diagnose.empty()) {
        if (a.diagnose != "subgaussian")
            throw ConfigError("--diagnose: unknown diagnostic '" +
                              a.diagnose + "'");
        if (a.trace.empty())
            throw ConfigError("--trace is required with --diagnose");
        const TrainTrace trace = load_trace_csv(a.trace);
        const SubgaussianFit fit =
            fit_subgaussian(trace.epoch_loss, a.tail_start);
        metrics["subgaussian"] = {
            {"A", fit.A},
            {"sigma", fit.sigma},
            {"dominance_fraction", fit.dominance_fraction}};
        manifest["inputs"]["trace"] = input_record(a.trace);
        if (a.bound) {
            double ami = a.ami;
            if (!a.ami_report.empty())
                ami = read_json_file(a.ami_report).at("ami").get<double>();
            if (ami < 0.0)
                throw ConfigError(
                    "--bound needs --ami or --ami-report with ami >= 0");
            metrics["bound"] = generalization_bound(fit.sigma, ami);
            metrics["ami"] = ami;
        }
    } else if (a.bound) {
        throw ConfigError("--bound requires --diagnose subgaussian");
    }

    write_json_file(out_dir / "metrics.json", metrics);
    write_json_file(out_dir / "manifest.json", manifest);
    std::cout << metrics.dump(2) << "\n";
    return 0;
}

// ----------------------------------------------------------------------
// diagnose

struct DiagnoseArgs {
    std::string trace;
    double tail_start = 0.25;
    std::string out;
    double ami = -1.0;
    std::string ami_report;
};

int run_diagnose(const DiagnoseArgs& a) {
    const TrainTrace trace = load_trace_csv(a.trace);
    const SubgaussianFit fit =
        fit_subgaussian(trace.epoch_loss, a.tail_start);
    json j = {{"A", fit.A},
              {"sigma", fit.sigma},
              {"dominance_fraction", fit.dominance_fraction},
              {"epochs", trace.epoch_loss.size()},
              {"tail_start_fraction", a.tail_start}};
    double ami = a.ami;
    if (!a.ami_report.empty())
        ami = read_json_file(a.ami_report).at("ami").get<double>();
    if (ami >= 0.0) {
        j["ami"] = ami;
        j["bound"] = generalization_bound(fit.sigma, ami);
    }
    const fs::path out = resolve_out(a.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_json_file(out, j);

    json manifest = manifest_base("diagnose");
    manifest["inputs"]["trace"] = input_record(a.trace);
    manifest["tail_start_fraction"] = a.tail_start;
    write_json_file(out.string() + ".manifest.json", manifest);
    std::cout << j.dump(2) << "\n";
    return 0;
}

void add_node2vec_options(CLI::App* cmd, Node2VecParams& p) {
    cmd->add_option("--dim", p.dim, "Embedding dimension");
    cmd->add_option("--walks", p.walks_per_node, "Walks per node");
    cmd->add_option("--length", p.walk_length, "Walk length (nodes)");
    cmd->add_option("--window", p.window, "Skip-gram window");
    cmd->add_option("--p", p.p, "Return parameter");
    cmd->add_option("--q", p.q, "In-out parameter");
    cmd->add_option("--negatives", p.negatives_per_target,
                    "Negative samples per context pair");
    cmd->add_option("--epochs", p.epochs, "Training epochs");
    cmd->add_option("--lr", p.learning_rate, "Initial learning rate");
    cmd->add_option("--workers", p.workers,
                    "Training threads (>1 is faster but not deterministic)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Inductive link prediction toolkit: splits, degree-sequence "
        "baselines, node-feature variants, attribute-quality reports, an "
        "attribute-only MLP predictor, and ranking metrics."};
    app.set_config("--config", "", "Read options from an INI/TOML file");
    app.set_version_flag("--version", linkpred::kVersion);
    app.require_subcommand(1);

    SplitArgs split_args;
    auto* split_cmd =
        app.add_subcommand("split", "Produce a train/valid/test split");
    split_cmd->add_option("--mode", split_args.mode, "node, edge, temporal")
        ->required()
        ->check(CLI::IsMember({"node", "edge", "temporal"}));
    split_cmd->add_option("--graph", split_args.graph, "Edge list file");
    split_cmd->add_option("--nodes", split_args.nodes,
                          "Node list registering attribute-only nodes");
    split_cmd->add_option("--snapshots", split_args.snapshots,
                          "Temporal edge file or snapshot directory");
    split_cmd->add_option("--attrs", split_args.attrs,
                          "Attribute file (temporal; validated and recorded)");
    split_cmd->add_option("--ratios", split_args.ratios,
                          "train,valid,test (percentages or fractions)");
    split_cmd->add_option("--seed", split_args.seed, "Random seed")
        ->required();
    split_cmd->add_option("--out", split_args.out, "Output directory")
        ->required();
    split_cmd->add_option("--index", split_args.index,
                          "Base snapshot index j (temporal)");
    split_cmd->add_flag("--interval", split_args.interval,
                        "Snapshots hold only edges stamped at each "
                        "timestamp (temporal file mode)");
    split_cmd->add_flag("--all-new-edges", split_args.all_new_edges,
                        "Keep new edges between previously observed nodes");

    BaselineArgs baseline_args;
    auto* baseline_cmd = app.add_subcommand(
        "baseline", "Score split pairs with a degree-sequence null model");
    baseline_cmd
        ->add_option("--model", baseline_args.model,
                     "config, duplex, random")
        ->required()
        ->check(CLI::IsMember({"config", "duplex", "random"}));
    baseline_cmd
        ->add_option("--split", baseline_args.split, "Split directory")
        ->required();
    baseline_cmd->add_option("--set", baseline_args.set, "test or valid")
        ->check(CLI::IsMember({"test", "valid"}));
    baseline_cmd->add_option("--out", baseline_args.out, "Output TSV")
        ->required();
    baseline_cmd->add_option("--neg-seed", baseline_args.neg_seed,
                             "Seed of the duplex negative layer");
    baseline_cmd->add_option("--seed", baseline_args.seed,
                             "Seed of the random scorer");

    EmbedArgs embed_args;
    auto* embed_cmd =
        app.add_subcommand("embed", "Produce node-feature variants");
    embed_cmd
        ->add_option("--method", embed_args.method,
                     "node2vec, shuffle, random")
        ->required()
        ->check(CLI::IsMember({"node2vec", "shuffle", "random"}));
    embed_cmd->add_option("--graph", embed_args.graph, "Edge list file");
    embed_cmd->add_option("--attrs", embed_args.attrs,
                          "Attribute file (shuffle input)");
    embed_cmd->add_option("--split", embed_args.split,
                          "Split directory (node2vec on the train subgraph)");
    embed_cmd->add_option("--out", embed_args.out, "Output attribute file")
        ->required();
    embed_cmd->add_option("--seed", embed_args.seed, "Random seed")
        ->required();
    embed_cmd->add_option("--rand-dim", embed_args.dim,
                          "Dimension of random attributes");
    add_node2vec_options(embed_cmd, embed_args.params);

    auto* attrs_cmd =
        app.add_subcommand("attrs", "Attribute-quality operations");
    attrs_cmd->require_subcommand(1);
    AttrsScoreArgs attrs_args;
    auto* score_cmd = attrs_cmd->add_subcommand(
        "score",
        "Cluster-quality report (Davies-Bouldin per variant + AMI vs "
        "topology)");
    score_cmd->add_option("--graph", attrs_args.graph, "Edge list file")
        ->required();
    score_cmd
        ->add_option("--pretrained", attrs_args.pretrained,
                     "Pre-trained attribute file")
        ->required();
    score_cmd->add_option("--topology", attrs_args.topology,
                          "Precomputed topology embedding file");
    score_cmd->add_option("--split", attrs_args.split,
                          "Split directory (topology trained on the train "
                          "subgraph)");
    score_cmd->add_option("--k", attrs_args.k_list,
                          "Cluster counts, e.g. 3,5,8");
    score_cmd->add_option("--seed", attrs_args.seed, "Random seed")
        ->required();
    score_cmd->add_option("--out", attrs_args.out, "Output directory");
    score_cmd->add_option("--sigma", attrs_args.sigma,
                          "Subgaussian parameter; adds the generalization "
                          "bound to each report");
    add_node2vec_options(score_cmd, attrs_args.params);

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand(
        "train", "Train the attribute-only MLP link predictor");
    train_cmd->add_option("--split", train_args.split, "Split directory")
        ->required();
    train_cmd->add_option("--attrs", train_args.attrs, "Attribute file")
        ->required();
    train_cmd->add_option("--hidden", train_args.hidden,
                          "Hidden layer sizes, e.g. 100,100,100");
    train_cmd->add_option("--lr", train_args.lr, "Learning rate");
    train_cmd->add_option("--epochs", train_args.epochs, "Training epochs");
    train_cmd->add_option("--batch-size", train_args.batch_size,
                          "Minibatch size");
    train_cmd->add_option("--neg-ratio", train_args.neg_ratio,
                          "Negatives per positive, resampled every epoch");
    train_cmd->add_option("--seed", train_args.seed, "Random seed")
        ->required();
    train_cmd->add_option("--out", train_args.out, "Output directory")
        ->required();

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand(
        "eval", "Ranking metrics for a model or a scores file");
    eval_cmd->add_option("--split", eval_args.split, "Split directory")
        ->required();
    eval_cmd->add_option("--set", eval_args.set, "test or valid")
        ->check(CLI::IsMember({"test", "valid"}));
    eval_cmd->add_option("--model", eval_args.model, "Trained model file");
    eval_cmd->add_option("--attrs", eval_args.attrs,
                         "Attribute file (with --model)");
    eval_cmd->add_option("--scores", eval_args.scores,
                         "Score TSV (src, dst, score)");
    eval_cmd->add_option("--k", eval_args.k, "K for Hits@K");
    eval_cmd->add_option("--out", eval_args.out, "Output directory")
        ->required();
    eval_cmd->add_option("--degree-bins", eval_args.degree_bins,
                         "Write a degree-binned metric table with this "
                         "many bins");
    eval_cmd->add_option("--bin-key", eval_args.bin_key,
                         "min, max, or mean endpoint degree")
        ->check(CLI::IsMember({"min", "max", "mean"}));
    eval_cmd->add_option("--trace", eval_args.trace, "Training trace CSV");
    eval_cmd->add_option("--diagnose", eval_args.diagnose,
                         "Append a training-loss diagnostic (subgaussian)");
    eval_cmd->add_option("--tail-start", eval_args.tail_start,
                         "Tail window start fraction for the diagnostic");
    eval_cmd->add_flag("--bound", eval_args.bound,
                       "Append the generalization bound (needs --diagnose "
                       "and --ami/--ami-report)");
    eval_cmd->add_option("--ami", eval_args.ami,
                         "Attribute-topology AMI for the bound");
    eval_cmd->add_option("--ami-report", eval_args.ami_report,
                         "Report JSON to read the AMI from");

    DiagnoseArgs diagnose_args;
    auto* diagnose_cmd = app.add_subcommand(
        "diagnose", "Subgaussian fit of a training-loss trace");
    diagnose_cmd
        ->add_option("--trace", diagnose_args.trace, "Training trace CSV")
        ->required();
    diagnose_cmd->add_option("--tail-start", diagnose_args.tail_start,
                             "Tail window start fraction");
    diagnose_cmd->add_option("--out", diagnose_args.out, "Output JSON")
        ->required();
    diagnose_cmd->add_option("--ami", diagnose_args.ami,
                             "Attribute-topology AMI; adds the bound");
    diagnose_cmd->add_option("--ami-report", diagnose_args.ami_report,
                             "Report JSON to read the AMI from");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    }

    try {
        if (split_cmd->parsed()) return run_split(split_args);
        if (baseline_cmd->parsed()) return run_baseline(baseline_args);
        if (embed_cmd->parsed()) return run_embed(embed_args);
        if (attrs_cmd->parsed() && score_cmd->parsed())
            return run_attrs_score(attrs_args);
        if (train_cmd->parsed()) return run_train(train_args);
        if (eval_cmd->parsed()) return run_eval(eval_args);
        if (diagnose_cmd->parsed()) return run_diagnose(diagnose_args);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
