#include "tfrd/tridiagonal.hpp"

#include "tfrd/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace tfrd {

void TridiagonalSystem::multiply(std::span<const double> x, std::span<double> out) const {
    const std::size_t n = size();
    for (std::size_t r = 0; r < n; ++r) {
        double acc = diag[r] * x[r];
        if (r > 0) {
            acc += lower[r] * x[r - 1];
        }
        if (r + 1 < n) {
            acc += upper[r] * x[r + 1];
        }
        out[r] = acc;
    }
}

bool TridiagonalSystem::strictly_diagonally_dominant() const {
    for (std::size_t r = 0; r < size(); ++r) {
        if (!(std::abs(diag[r]) > std::abs(lower[r]) + std::abs(upper[r]))) {
            return false;
        }
    }
    return true;
}

std::vector<double> thomas_solve(const TridiagonalSystem& system, std::span<const double> rhs) {
    const std::size_t n = system.size();
    if (rhs.size() != n) {
        throw std::invalid_argument("thomas_solve: rhs size does not match system size");
    }
    if (n == 0) {
        return {};
    }
    std::vector<double> scratch(n);
    std::vector<double> x(n);

    double pivot = system.diag[0];
    if (pivot == 0.0) {
        throw numerical_error("thomas_solve: zero pivot in row 0");
    }
    x[0] = rhs[0] / pivot;
    for (std::size_t r = 1; r < n; ++r) {
        scratch[r] = system.upper[r - 1] / pivot;
        pivot = system.diag[r] - system.lower[r] * scratch[r];
        if (pivot == 0.0) {
            throw numerical_error("thomas_solve: zero pivot in row " + std::to_string(r));
        }
        x[r] = (rhs[r] - system.lower[r] * x[r - 1]) / pivot;
    }
    for (std::size_t r = n - 1; r-- > 0;) {
        x[r] -= scratch[r + 1] * x[r + 1];
    }
    return x;
}

} // namespace tfrd
