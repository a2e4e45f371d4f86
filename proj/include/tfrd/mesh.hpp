#pragma once

#include "tfrd/fractional.hpp"

namespace tfrd {

/// Uniform 1D mesh on [0, length] with `cells` intervals, h = length/cells.
/// Nodes x_i = i*h for i = 0..cells; indices 1..cells-1 are interior.
struct Mesh1D {
    Mesh1D(double length, int cells);

    double length;
    int cells;
    double h;

    int nodes() const { return cells + 1; }
    double node(int i) const { return i * h; }
    /// Half-point x_{i+1/2}.
    double midpoint(int i) const { return (i + 0.5) * h; }
};

/// Uniform tensor-product mesh on [0, length_x] x [0, length_y].
struct Mesh2D {
    Mesh2D(double length_x, double length_y, int cells_x, int cells_y);

    double length_x;
    double length_y;
    int cells_x;
    int cells_y;
    double hx;
    double hy;

    int nodes_x() const { return cells_x + 1; }
    int nodes_y() const { return cells_y + 1; }
    int node_count() const { return nodes_x() * nodes_y(); }
    double node_x(int i) const { return i * hx; }
    double node_y(int l) const { return l * hy; }
    double midpoint_x(int i) const { return (i + 0.5) * hx; }
    double midpoint_y(int l) const { return (l + 0.5) * hy; }
};

/// Uniform time grid t_j = j*tau on [0, horizon], carrying the fractional
/// offset so coefficient samples land on t_{j+sigma} = (j+sigma)*tau.
struct TimeGrid {
    TimeGrid(double horizon, int steps, FractionalOrder order);

    double horizon;
    int steps;
    double tau;
    double sigma;

    double t(int j) const { return j * tau; }
    double t_sigma(int j) const { return (j + sigma) * tau; }
};

} // namespace tfrd
