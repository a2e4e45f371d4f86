#include "tfrd/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace tfrd {

double l2_norm(const GridFunction1D& f) {
    const int n = f.mesh().cells;
    double acc = 0.0;
    for (int i = 1; i < n; ++i) {
        acc += f[i] * f[i];
    }
    return std::sqrt(f.mesh().h * acc);
}

double l2_norm(const GridFunction2D& f) {
    const Mesh2D& mesh = f.mesh();
    double acc = 0.0;
    for (int l = 1; l < mesh.cells_y; ++l) {
        for (int i = 1; i < mesh.cells_x; ++i) {
            const double v = f.at(i, l);
            acc += v * v;
        }
    }
    return std::sqrt(mesh.hx * mesh.hy * acc);
}

double max_norm(const GridFunction1D& f) {
    const int n = f.mesh().cells;
    double m = 0.0;
    for (int i = 1; i < n; ++i) {
        m = std::max(m, std::abs(f[i]));
    }
    return m;
}

double max_norm(const GridFunction2D& f) {
    const Mesh2D& mesh = f.mesh();
    double m = 0.0;
    for (int l = 1; l < mesh.cells_y; ++l) {
        for (int i = 1; i < mesh.cells_x; ++i) {
            m = std::max(m, std::abs(f.at(i, l)));
        }
    }
    return m;
}

double convergence_rate(double e_coarse, double e_fine, double r_coarse, double r_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) {
        throw std::invalid_argument("convergence_rate: errors must be strictly positive");
    }
    if (!(r_coarse > 0.0) || !(r_fine > 0.0) || r_coarse == r_fine) {
        throw std::invalid_argument("convergence_rate: resolutions must be positive and distinct");
    }
    return std::log(e_coarse / e_fine) / std::log(r_coarse / r_fine);
}

} // namespace tfrd
