#pragma once

#include <span>
#include <vector>

namespace tfrd {

/// Five-diagonal sparse operator over the interior unknowns of a 2D mesh,
/// ordered row-major with x fastest: row r = (l-1)*interior_x + (i-1) for
/// interior node (i, l).
///
/// Bands have length `unknowns()`. east[r] couples r+1 and west[r] couples
/// r-1; both are zero across row breaks (east at the end of each mesh row,
/// west at the start). north[r] couples r+interior_x, south[r] couples
/// r-interior_x. Assembly produces a symmetric, strictly diagonally
/// dominant matrix with positive diagonal, hence positive definite.
struct PentaSparseSystem {
    PentaSparseSystem(int interior_x, int interior_y);

    int interior_x;
    int interior_y;

    std::vector<double> main;
    std::vector<double> east;
    std::vector<double> west;
    std::vector<double> north;
    std::vector<double> south;

    int unknowns() const { return interior_x * interior_y; }
    int index(int i, int l) const { return (l - 1) * interior_x + (i - 1); }

    /// out = A * x
    void multiply(std::span<const double> x, std::span<double> out) const;

    /// True when the stored bands describe a symmetric matrix.
    bool symmetric(double tol) const;

    bool strictly_diagonally_dominant() const;
};

struct CgResult {
    std::vector<double> solution;
    int iterations = 0;
    double relative_residual = 0.0;
};

/// Jacobi-preconditioned conjugate gradients for an SPD penta system.
/// Stops when ||b - A x||_2 <= tol * ||b||_2. A zero right-hand side
/// returns the zero vector without iterating. Throws convergence_error
/// (with the achieved residual) if max_iters is exhausted.
CgResult cg_solve(const PentaSparseSystem& system, std::span<const double> rhs, double tol, int max_iters,
                  std::span<const double> initial_guess = {});

} // namespace tfrd
