#pragma once

#include "tfrd/mesh.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tfrd {

/// Nodal values over a 1D mesh, boundary nodes included. Discrete norms
/// run over interior nodes only; see norms.hpp.
class GridFunction1D {
public:
    explicit GridFunction1D(const Mesh1D& mesh) : mesh_(mesh), values_(static_cast<std::size_t>(mesh.nodes()), 0.0) {}

    GridFunction1D(const Mesh1D& mesh, std::vector<double> values) : mesh_(mesh), values_(std::move(values)) {
        if (values_.size() != static_cast<std::size_t>(mesh.nodes())) {
            throw std::invalid_argument("GridFunction1D: value count does not match node count");
        }
    }

    const Mesh1D& mesh() const { return mesh_; }

    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

private:
    Mesh1D mesh_;
    std::vector<double> values_;
};

/// Nodal values over a 2D mesh, stored row-major with x fastest:
/// flat index = l * nodes_x + i for node (x_i, y_l).
class GridFunction2D {
public:
    explicit GridFunction2D(const Mesh2D& mesh)
        : mesh_(mesh), values_(static_cast<std::size_t>(mesh.node_count()), 0.0) {}

    GridFunction2D(const Mesh2D& mesh, std::vector<double> values) : mesh_(mesh), values_(std::move(values)) {
        if (values_.size() != static_cast<std::size_t>(mesh.node_count())) {
            throw std::invalid_argument("GridFunction2D: value count does not match node count");
        }
    }

    const Mesh2D& mesh() const { return mesh_; }

    int flat_index(int i, int l) const { return l * mesh_.nodes_x() + i; }

    double at(int i, int l) const { return values_[static_cast<std::size_t>(flat_index(i, l))]; }
    double& at(int i, int l) { return values_[static_cast<std::size_t>(flat_index(i, l))]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

private:
    Mesh2D mesh_;
    std::vector<double> values_;
};

} // namespace tfrd
