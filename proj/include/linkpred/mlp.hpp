#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/matrix.hpp"

namespace linkpred {

// Feed-forward binary classifier on concatenated endpoint attributes:
// input 2*attr_dim, ReLU hidden layers, one logistic output.
struct MlpModel {
    std::vector<std::size_t> layer_dims;  // [2*attr_dim, hidden..., 1]
    std::vector<Matrix> weights;          // weights[l] is dims[l+1] x dims[l]
    std::vector<std::vector<double>> biases;

    // Uniform init scaled by fan-in: W ~ U(-1/sqrt(in), 1/sqrt(in)).
    static MlpModel init(std::size_t input_dim,
                         std::span<const std::size_t> hidden_dims,
                         std::uint64_t seed);

    // Pre-activation of the output unit for one input row.
    double logit(std::span<const double> x) const;

    bool operator==(const MlpModel&) const = default;
};

struct AdamParams {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct TrainConfig {
    double learning_rate = 1e-3;
    std::size_t epochs = 200;
    std::size_t batch_size = 128;
    double negatives_per_positive = 1.0;
    std::uint64_t seed = 0;
    AdamParams adam;
};

struct TrainTrace {
    std::vector<double> epoch_loss;  // mean sample loss, one entry per epoch
};

struct TrainResult {
    MlpModel model;
    TrainTrace trace;
};

// Binary cross-entropy training with Adam. Positives carry label 1;
// label-0 pairs are freshly sampled every epoch, uniformly among non-edges
// whose endpoints appear in `pos_edges`, at config.negatives_per_positive
// per positive. Every pair is presented in both endpoint orders. Fully
// deterministic for a fixed (attrs, pos_edges, config).
TrainResult train_link_mlp(const AttributeMatrix& attrs,
                           std::span<const Edge> pos_edges,
                           const TrainConfig& config,
                           std::span<const std::size_t> hidden_dims);

// Order-symmetrized edge probability: (f(x_a||x_b) + f(x_b||x_a)) / 2,
// nudged inside (0, 1).
double predict_edge(const MlpModel& model, const AttributeMatrix& attrs,
                    NodeId a, NodeId b);

struct LabeledEdge {
    Edge e;
    double label = 0.0;
};

// Compares backpropagated gradients of the mean batch loss against central
// finite differences with step `epsilon`, over every weight and bias.
// Returns the largest relative error.
double gradient_check(const MlpModel& model, const AttributeMatrix& attrs,
                      std::span<const LabeledEdge> batch, double epsilon);

// Self-describing little-endian binary format: magic, version, layer dims,
// then row-major weights and biases as 64-bit floats.
void save_mlp(const MlpModel& model, const std::filesystem::path& path);
MlpModel load_mlp(const std::filesystem::path& path);

void save_trace_csv(const TrainTrace& trace,
                    const std::filesystem::path& path);
TrainTrace load_trace_csv(const std::filesystem::path& path);

}  // namespace linkpred
