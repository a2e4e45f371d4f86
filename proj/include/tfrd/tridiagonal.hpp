#pragma once

#include <span>
#include <vector>

namespace tfrd {

/// Symmetric tridiagonal system over the interior unknowns of a 1D mesh.
/// Bands all have length n; lower[0] and upper[n-1] are zero. Assembly
/// guarantees strict diagonal dominance, so elimination needs no pivoting.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;

    std::size_t size() const { return diag.size(); }

    /// out = A * x
    void multiply(std::span<const double> x, std::span<double> out) const;

    bool strictly_diagonally_dominant() const;
};

/// Direct elimination for a diagonally dominant tridiagonal system.
/// Throws numerical_error on a vanishing pivot (which indicates an
/// assembly bug, not bad user data).
std::vector<double> thomas_solve(const TridiagonalSystem& system, std::span<const double> rhs);

} // namespace tfrd
