#include "linkpred/mlp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "linkpred/errors.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/split.hpp"

namespace linkpred {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Numerically stable binary cross-entropy on the logit.
inline double bce_loss(double z, double y) {
    return std::max(z, 0.0) - y * z + std::log1p(std::exp(-std::abs(z)));
}

struct Workspace {
    // acts[0] is the input; acts[l+1] the post-ReLU activation of layer l;
    // the last entry holds the raw output logit.
    std::vector<std::vector<double>> acts;
    std::vector<std::vector<double>> deltas;

    explicit Workspace(const std::vector<std::size_t>& dims) {
        acts.resize(dims.size());
        deltas.resize(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i) {
            acts[i].resize(dims[i]);
            deltas[i].resize(dims[i]);
        }
    }
};

double forward(const MlpModel& m, std::span<const double> x,
               Workspace& ws) {
    std::copy(x.begin(), x.end(), ws.acts[0].begin());
    const std::size_t layers = m.weights.size();
    for (std::size_t l = 0; l < layers; ++l) {
        const Matrix& w = m.weights[l];
        const auto& in = ws.acts[l];
        auto& out = ws.acts[l + 1];
        const bool last = l + 1 == layers;
        for (std::size_t o = 0; o < w.rows; ++o) {
            const double* row = w.row(o).data();
            double z = m.biases[l][o];
            for (std::size_t i = 0; i < w.cols; ++i) z += row[i] * in[i];
            out[o] = last ? z : std::max(z, 0.0);
        }
    }
    return ws.acts[layers][0];
}

struct Gradients {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;

    explicit Gradients(const MlpModel& m) {
        for (const Matrix& w : m.weights)
            weights.emplace_back(w.rows, w.cols, 0.0);
        for (const auto& b : m.biases)
            biases.emplace_back(b.size(), 0.0);
    }

    void zero() {
        for (Matrix& w : weights) std::fill(w.data.begin(), w.data.end(), 0.0);
        for (auto& b : biases) std::fill(b.begin(), b.end(), 0.0);
    }
};

// Accumulates dLoss/dparams into `grads` for one sample whose forward pass
// is in `ws`. dz is dLoss/dlogit.
void backward(const MlpModel& m, Workspace& ws, double dz,
              Gradients& grads) {
    const std::size_t layers = m.weights.size();
    ws.deltas[layers][0] = dz;
    for (std::size_t l = layers; l-- > 0;) {
        const Matrix& w = m.weights[l];
        const auto& delta_out = ws.deltas[l + 1];
        const auto& in = ws.acts[l];
        Matrix& gw = grads.weights[l];
        auto& gb = grads.biases[l];
        auto& delta_in = ws.deltas[l];
        std::fill(delta_in.begin(), delta_in.end(), 0.0);
        for (std::size_t o = 0; o < w.rows; ++o) {
            const double d = delta_out[o];
            if (d == 0.0) continue;
            gb[o] += d;
            double* grow = gw.row(o).data();
            const double* wrow = w.row(o).data();
            for (std::size_t i = 0; i < w.cols; ++i) {
                grow[i] += d * in[i];
                delta_in[i] += d * wrow[i];
            }
        }
        if (l > 0) {
            // ReLU gate: the stored activation is already max(z, 0).
            for (std::size_t i = 0; i < delta_in.size(); ++i)
                if (ws.acts[l][i] <= 0.0) delta_in[i] = 0.0;
        }
    }
}

void concat_rows(const AttributeMatrix& attrs, NodeId a, NodeId b,
                 std::vector<double>& out) {
    const auto ra = attrs.row(a);
    const auto rb = attrs.row(b);
    out.resize(ra.size() * 2);
    std::copy(ra.begin(), ra.end(), out.begin());
    std::copy(rb.begin(), rb.end(), out.begin() + ra.size());
}

void check_endpoint(const AttributeMatrix& attrs, NodeId v) {
    if (v >= attrs.rows)
        throw std::invalid_argument("node " + std::to_string(v) +
                                    " has no attribute row");
}

}  // namespace

MlpModel MlpModel::init(std::size_t input_dim,
                        std::span<const std::size_t> hidden_dims,
                        std::uint64_t seed) {
    if (input_dim == 0) throw std::invalid_argument("input_dim must be > 0");
    if (hidden_dims.empty())
        throw std::invalid_argument("at least one hidden layer is required");
    MlpModel m;
    m.layer_dims.push_back(input_dim);
    for (const std::size_t h : hidden_dims) {
        if (h == 0) throw std::invalid_argument("hidden dims must be > 0");
        m.layer_dims.push_back(h);
    }
    m.layer_dims.push_back(1);

    SeededRng rng(SeededRng::derive(seed, rng_stream::kMlpInit));
    for (std::size_t l = 0; l + 1 < m.layer_dims.size(); ++l) {
        const std::size_t in = m.layer_dims[l];
        const std::size_t out = m.layer_dims[l + 1];
        Matrix w(out, in);
        const double scale = 1.0 / std::sqrt(static_cast<double>(in));
        for (double& x : w.data) x = (2.0 * rng.real01() - 1.0) * scale;
        m.weights.push_back(std::move(w));
        // Small positive bias keeps rectifier units off the kink at init:
        // a sample that zeroes a whole layer would otherwise put the next
        // layer's pre-activations exactly at 0, where one-sided numeric
        // slopes and the gated analytic gradient legitimately disagree.
        m.biases.emplace_back(out, 0.01);
    }
    return m;
}

double MlpModel::logit(std::span<const double> x) const {
    if (x.size() != layer_dims.front())
        throw std::invalid_argument("input dimension mismatch");
    Workspace ws(layer_dims);
    return forward(*this, x, ws);
}

TrainResult train_link_mlp(const AttributeMatrix& attrs,
                           std::span<const Edge> pos_edges,
                           const TrainConfig& config,
                           std::span<const std::size_t> hidden_dims) {
    if (pos_edges.empty())
        throw std::invalid_argument("positive edge list is empty");
    if (attrs.rows == 0 || attrs.cols == 0)
        throw std::invalid_argument("attribute matrix is empty");
    if (!(config.negatives_per_positive > 0.0))
        throw std::invalid_argument("negatives_per_positive must be > 0");
    if (config.batch_size == 0)
        throw std::invalid_argument("batch_size must be >= 1");
    for (const Edge& e : pos_edges) {
        check_endpoint(attrs, e.u);
        check_endpoint(attrs, e.v);
    }

    TrainResult result;
    result.model = MlpModel::init(2 * attrs.cols, hidden_dims, config.seed);
    if (config.epochs == 0) return result;

    // Label-0 pairs are drawn among the nodes that actually occur in the
    // positive set, so training never touches attribute rows of nodes
    // outside the training universe.
    std::vector<NodeId> incident;
    for (const Edge& e : pos_edges) {
        incident.push_back(e.u);
        incident.push_back(e.v);
    }
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()),
                   incident.end());
    const Graph pos_graph = Graph::from_edges(
        attrs.rows, std::vector<Edge>(pos_edges.begin(), pos_edges.end()));
    const EndpointConstraint constraint{incident, incident};
    const std::size_t neg_count = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(
               config.negatives_per_positive *
               static_cast<double>(pos_edges.size()))));

    MlpModel& model = result.model;
    Gradients grads(model);
    Gradients adam_m(model), adam_v(model);
    Workspace ws(model.layer_dims);
    std::vector<double> input;
    std::size_t adam_t = 0;

    struct Sample {
        NodeId a, b;
        double label;
    };
    std::vector<Sample> samples;

    auto adam_update = [&](double* param, double* g, double* m1, double* m2,
                           std::size_t count, double denom) {
        const double b1 = config.adam.beta1, b2 = config.adam.beta2;
        const double corr1 = 1.0 - std::pow(b1, static_cast<double>(adam_t));
        const double corr2 = 1.0 - std::pow(b2, static_cast<double>(adam_t));
        for (std::size_t i = 0; i < count; ++i) {
            const double grad = g[i] / denom;
            m1[i] = b1 * m1[i] + (1.0 - b1) * grad;
            m2[i] = b2 * m2[i] + (1.0 - b2) * grad * grad;
            const double mhat = m1[i] / corr1;
            const double vhat = m2[i] / corr2;
            param[i] -= config.learning_rate * mhat /
                        (std::sqrt(vhat) + config.adam.eps);
        }
    };

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        const auto negs = sample_negatives(
            pos_graph, neg_count,
            SeededRng::derive(config.seed, rng_stream::kMlpNeg, epoch),
            constraint);

        samples.clear();
        samples.reserve(2 * (pos_edges.size() + negs.size()));
        for (const Edge& e : pos_edges) {
            samples.push_back({e.u, e.v, 1.0});
            samples.push_back({e.v, e.u, 1.0});
        }
        for (const Edge& e : negs) {
            samples.push_back({e.u, e.v, 0.0});
            samples.push_back({e.v, e.u, 0.0});
        }
        SeededRng order(
            SeededRng::derive(config.seed, rng_stream::kMlpOrder, epoch));
        order.shuffle(samples);

        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < samples.size();
             start += config.batch_size) {
            const std::size_t end =
                std::min(samples.size(), start + config.batch_size);
            grads.zero();
            for (std::size_t i = start; i < end; ++i) {
                const Sample& s = samples[i];
                concat_rows(attrs, s.a, s.b, input);
                const double z = forward(model, input, ws);
                epoch_loss += bce_loss(z, s.label);
                backward(model, ws, sigmoid(z) - s.label, grads);
            }
            const double denom = static_cast<double>(end - start);
            ++adam_t;  // one Adam step per batch, shared by all tensors
            for (std::size_t l = 0; l < model.weights.size(); ++l) {
                adam_update(model.weights[l].data.data(),
                            grads.weights[l].data.data(),
                            adam_m.weights[l].data.data(),
                            adam_v.weights[l].data.data(),
                            model.weights[l].data.size(), denom);
                adam_update(model.biases[l].data(), grads.biases[l].data(),
                            adam_m.biases[l].data(), adam_v.biases[l].data(),
                            model.biases[l].size(), denom);
            }
        }
        result.trace.epoch_loss.push_back(
            epoch_loss / static_cast<double>(samples.size()));
        if (!std::isfinite(result.trace.epoch_loss.back()))
            throw DataError("training diverged: non-finite epoch loss");
    }
    return result;
}

double predict_edge(const MlpModel& model, const AttributeMatrix& attrs,
                    NodeId a, NodeId b) {
    check_endpoint(attrs, a);
    check_endpoint(attrs, b);
    Workspace ws(model.layer_dims);
    std::vector<double> input;
    concat_rows(attrs, a, b, input);
    const double za = forward(model, input, ws);
    concat_rows(attrs, b, a, input);
    const double zb = forward(model, input, ws);
    const double p = 0.5 * (sigmoid(za) + sigmoid(zb));
    return std::clamp(p, 1e-15, 1.0 - 1e-12);
}

double gradient_check(const MlpModel& model, const AttributeMatrix& attrs,
                      std::span<const LabeledEdge> batch, double epsilon) {
    if (batch.empty()) throw std::invalid_argument("batch is empty");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

    MlpModel work = model;
    Workspace ws(work.layer_dims);
    std::vector<double> input;

    auto batch_loss = [&]() {
        double loss = 0.0;
        for (const LabeledEdge& le : batch) {
            concat_rows(attrs, le.e.u, le.e.v, input);
            loss += bce_loss(forward(work, input, ws), le.label);
        }
        return loss / static_cast<double>(batch.size());
    };

    Gradients grads(work);
    for (const LabeledEdge& le : batch) {
        concat_rows(attrs, le.e.u, le.e.v, input);
        const double z = forward(work, input, ws);
        backward(work, ws, sigmoid(z) - le.label, grads);
    }
    const double scale = 1.0 / static_cast<double>(batch.size());

    double max_rel = 0.0;
    auto check_array = [&](double* param, const double* analytic,
                           std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            const double saved = param[i];
            param[i] = saved + epsilon;
            const double up = batch_loss();
            param[i] = saved - epsilon;
            const double down = batch_loss();
            param[i] = saved;
            const double numeric = (up - down) / (2.0 * epsilon);
            const double ga = analytic[i] * scale;
            const double denom =
                std::max({std::abs(ga), std::abs(numeric), 1e-5});
            max_rel = std::max(max_rel, std::abs(ga - numeric) / denom);
        }
    };
    for (std::size_t l = 0; l < work.weights.size(); ++l) {
        check_array(work.weights[l].data.data(),
                    grads.weights[l].data.data(),
                    work.weights[l].data.size());
        check_array(work.biases[l].data(), grads.biases[l].data(),
                    work.biases[l].size());
    }
    return max_rel;
}

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ofstream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ofstream& out, double v) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint32_t get_u32(std::ifstream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::ifstream& in) {
    return std::bit_cast<double>(get_u64(in));
}

constexpr char kMagic[8] = {'L', 'P', 'M', 'L', 'P', 'B', 'I', 'N'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

void save_mlp(const MlpModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    out.write(kMagic, sizeof(kMagic));
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(model.layer_dims.size()));
    for (const std::size_t d : model.layer_dims) put_u64(out, d);
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        for (const double v : model.weights[l].data) put_f64(out, v);
        for (const double v : model.biases[l]) put_f64(out, v);
    }
    if (!out) throw DataError("write failed: " + path.string());
}

MlpModel load_mlp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw DataError(path.string() + ": not a model file");
    if (get_u32(in) != kVersion)
        throw DataError(path.string() + ": unsupported model version");
    const std::uint32_t ndims = get_u32(in);
    if (ndims < 3)
        throw DataError(path.string() + ": corrupt layer dimensions");
    MlpModel m;
    for (std::uint32_t i = 0; i < ndims; ++i)
        m.layer_dims.push_back(static_cast<std::size_t>(get_u64(in)));
    for (std::size_t l = 0; l + 1 < m.layer_dims.size(); ++l) {
        Matrix w(m.layer_dims[l + 1], m.layer_dims[l]);
        for (double& v : w.data) v = get_f64(in);
        std::vector<double> b(m.layer_dims[l + 1]);
        for (double& v : b) v = get_f64(in);
        m.weights.push_back(std::move(w));
        m.biases.push_back(std::move(b));
    }
    if (!in) throw DataError(path.string() + ": truncated model file");
    return m;
}

void save_trace_csv(const TrainTrace& trace,
                    const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    out << "epoch,loss\n";
    char buf[40];
    for (std::size_t i = 0; i < trace.epoch_loss.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", trace.epoch_loss[i]);
        out << i << ',' << buf << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

TrainTrace load_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    TrainTrace trace;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == "epoch,loss") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": expected 'epoch,loss'");
        try {
            trace.epoch_loss.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": bad loss value");
        }
    }
    return trace;
}

}  // namespace linkpred
