#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace linkpred {

// Dense row-major matrix of doubles. Used for node attributes (one row per
// node id), embeddings, and cluster centroids.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    std::span<double> row(std::size_t i) {
        assert(i < rows);
        return {data.data() + i * cols, cols};
    }
    std::span<const double> row(std::size_t i) const {
        assert(i < rows);
        return {data.data() + i * cols, cols};
    }

    double& at(std::size_t i, std::size_t j) {
        assert(i < rows && j < cols);
        return data[i * cols + j];
    }
    double at(std::size_t i, std::size_t j) const {
        assert(i < rows && j < cols);
        return data[i * cols + j];
    }

    bool all_finite() const {
        for (double x : data)
            if (!std::isfinite(x)) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;
};

// Node-aligned attribute rows (the X of a graph instance).
using AttributeMatrix = Matrix;

inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double euclidean_distance(std::span<const double> a,
                                 std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace linkpred
