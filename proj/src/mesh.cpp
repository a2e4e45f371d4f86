#include "tfrd/mesh.hpp"

#include <stdexcept>

namespace tfrd {

Mesh1D::Mesh1D(double length_, int cells_) : length(length_), cells(cells_), h(length_ / cells_) {
    if (!(length > 0.0)) {
        throw std::invalid_argument("Mesh1D: length must be positive");
    }
    if (cells < 2) {
        throw std::invalid_argument("Mesh1D: need at least 2 cells");
    }
}

Mesh2D::Mesh2D(double length_x_, double length_y_, int cells_x_, int cells_y_)
    : length_x(length_x_),
      length_y(length_y_),
      cells_x(cells_x_),
      cells_y(cells_y_),
      hx(length_x_ / cells_x_),
      hy(length_y_ / cells_y_) {
    if (!(length_x > 0.0) || !(length_y > 0.0)) {
        throw std::invalid_argument("Mesh2D: domain extents must be positive");
    }
    if (cells_x < 2 || cells_y < 2) {
        throw std::invalid_argument("Mesh2D: need at least 2 cells per direction");
    }
}

TimeGrid::TimeGrid(double horizon_, int steps_, FractionalOrder order)
    : horizon(horizon_), steps(steps_), tau(horizon_ / steps_), sigma(order.sigma()) {
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("TimeGrid: horizon must be positive");
    }
    if (steps < 1) {
        throw std::invalid_argument("TimeGrid: need at least one step");
    }
}

} // namespace tfrd
