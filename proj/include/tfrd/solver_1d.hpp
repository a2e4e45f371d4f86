#pragma once

#include "tfrd/grid_function.hpp"
#include "tfrd/problem.hpp"
#include "tfrd/tridiagonal.hpp"

#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace tfrd {

struct SolveOptions {
    bool keep_history = false;
    /// Relative residual target of the inner CG solver (2D only).
    double cg_tol = 1e-12;
    /// CG iteration cap as a multiple of the unknown count (2D only).
    int cg_max_iter_factor = 10;
};

/// Outcome of a 1D march. Per-level error columns are filled only when the
/// problem carries an exact solution; error_max / error_l2 are the maxima
/// of those columns over all levels 0..M.
struct SolveReport1D {
    GridFunction1D final_state;
    std::vector<GridFunction1D> history;
    std::vector<double> max_error_by_level;
    std::vector<double> l2_error_by_level;
    double error_max = std::numeric_limits<double>::quiet_NaN();
    double error_l2 = std::numeric_limits<double>::quiet_NaN();

    bool has_errors() const { return !max_error_by_level.empty(); }
};

/// Variable-coefficient diffusion-reaction stencil applied to one time
/// level. The diffusion coefficient is sampled at the half-points
/// x_{i+-1/2} and all coefficients at the offset time t_{level+sigma}.
/// Interior nodes of the result hold the stencil value; boundary nodes are
/// zero.
GridFunction1D apply_spatial_operator(const Problem1D& problem, const Mesh1D& mesh, const GridFunction1D& state,
                                      int level, const TimeGrid& grid);

/// Builds the implicit step system for level j = history.size()-1, scaled
/// by 2*tau*h^2. `history` holds the full nodal vectors of levels 0..j.
/// The right-hand side carries the previous levels, the memory sum over
/// the whole history, the source sample, and the Dirichlet boundary data
/// of levels j and j+1 weighted by (1-sigma) and sigma.
std::pair<TridiagonalSystem, std::vector<double>> assemble_step(const Problem1D& problem, const Mesh1D& mesh,
                                                                const TimeGrid& grid,
                                                                std::span<const std::vector<double>> history);

/// Marches the implicit scheme over `steps` levels on `cells` intervals.
/// The pre-initial level required by the three-level drift stencil is
/// taken equal to the initial data, which assumes the solution has
/// vanishing first and second time derivative at t = 0.
SolveReport1D solve(const Problem1D& problem, int cells, int steps, const SolveOptions& options = {});

} // namespace tfrd
